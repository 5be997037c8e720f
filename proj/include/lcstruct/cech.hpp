#pragma once

#include "lcstruct/arith.hpp"
#include "lcstruct/matrix.hpp"
#include "lcstruct/monomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lcstruct {

// Subset T of the generator indices {0..c-1}.
using GeneratorSet = std::uint32_t;

inline constexpr std::size_t kMaxGenerators = 24;

// Localization Z[1/m_T] sitting in the degree-u slice, m_T = prod_{j in T} a_j.
struct CechSummand {
  GeneratorSet subset = 0;
  std::map<Int, int> inverted;  // factored m_T

  Int inverted_value() const;
  bool inverts(const Int& p) const { return inverted.count(p) != 0; }
};

// Degree-u piece of the Cech complex of Z[X] on the generators a_j U_j.
// terms[k] holds the active summands with |T| = k, sorted by subset mask;
// differentials[k] maps terms[k] -> terms[k+1] (rows index the target).
struct CechSlice {
  Exponents degree;
  std::vector<std::vector<CechSummand>> terms;
  std::vector<IntMatrix> differentials;

  std::size_t length() const { return terms.size(); }
};

CechSlice build_slice(const CMonomialIdeal& ideal, const Exponents& degree);

// Summand kinds over the local ring L = Z_(p).
enum class Kind { L, Q };

// Complex of finite direct sums of L and Q. differentials[k] maps
// terms[k] -> terms[k+1]; an entry at (Q-row, L-col) is unrestricted, (L, L)
// entries are p-integral and (L-row, Q-col) entries vanish.
struct PLocalComplex {
  Int p;
  std::vector<std::vector<Kind>> terms;
  std::vector<RatMatrix> differentials;
};

struct RationalComplex {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> differentials;
};

// Complex of free Z/p^K modules; entries reduced into [0, p^K).
struct FiniteComplex {
  Int p;
  int K = 1;
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> differentials;

  Int modulus() const { return power(p, static_cast<unsigned long>(K)); }
};

// Throws NotPrime.
PLocalComplex localize_at(const CechSlice& slice, const Int& p);
RationalComplex rationalize(const CechSlice& slice);
// Throws NotPrime, NonpositiveK.
FiniteComplex reduce_mod(const CechSlice& slice, const Int& p, int K);

}  // namespace lcstruct
