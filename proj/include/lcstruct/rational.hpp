#pragma once

#include "lcstruct/cech.hpp"
#include "lcstruct/monomial.hpp"

#include <cstddef>
#include <vector>

namespace lcstruct {

// Ranks of homology of a complex of rational vector spaces, spot by spot.
std::vector<std::size_t> homology_ranks(const RationalComplex& c);

// dim_Q of H^i_I(R)_u (x) Q.
std::size_t alpha(const CMonomialIdeal& ideal, std::size_t i, const Exponents& degree);

struct AlphaEntry {
  Block block;
  std::size_t alpha = 0;
};

// alpha at the representative of each of the 2^n blocks, in blocks() order.
struct AlphaTable {
  std::size_t i = 0;
  std::vector<AlphaEntry> entries;

  std::size_t at(const Exponents& degree) const;
};

AlphaTable alpha_table(const CMonomialIdeal& ideal, std::size_t i);

}  // namespace lcstruct
