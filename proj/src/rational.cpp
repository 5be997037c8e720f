#include "lcstruct/rational.hpp"

#include "lcstruct/matrix.hpp"

#include <stdexcept>

namespace lcstruct {

std::vector<std::size_t> homology_ranks(const RationalComplex& c) {
  std::vector<std::size_t> ranks;
  for (const auto& d : c.differentials) ranks.push_back(rank(d));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const std::size_t outgoing = i < ranks.size() ? ranks[i] : 0;
    const std::size_t incoming = i > 0 ? ranks[i - 1] : 0;
    out.push_back(c.dims[i] - outgoing - incoming);
  }
  return out;
}

std::size_t alpha(const CMonomialIdeal& ideal, std::size_t i, const Exponents& degree) {
  const auto ranks = homology_ranks(rationalize(build_slice(ideal, degree)));
  return i < ranks.size() ? ranks[i] : 0;
}

std::size_t AlphaTable::at(const Exponents& degree) const {
  const Block b = block_of(degree);
  for (const auto& e : entries)
    if (e.block == b) return e.alpha;
  throw std::out_of_range("AlphaTable::at: degree has the wrong length");
}

AlphaTable alpha_table(const CMonomialIdeal& ideal, std::size_t i) {
  AlphaTable table;
  table.i = i;
  for (auto& b : blocks(ideal.variables())) {
    const std::size_t a = alpha(ideal, i, b.representative());
    table.entries.push_back({std::move(b), a});
  }
  return table;
}

}  // namespace lcstruct
