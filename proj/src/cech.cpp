#include "lcstruct/cech.hpp"

#include "lcstruct/error.hpp"

#include <bit>

namespace lcstruct {

Int CechSummand::inverted_value() const {
  Int m = 1;
  for (const auto& [p, e] : inverted) m *= power(p, static_cast<unsigned long>(e));
  return m;
}

CechSlice build_slice(const CMonomialIdeal& ideal, const Exponents& degree) {
  const std::size_t c = ideal.size();
  const int n = ideal.variables();
  if (c > kMaxGenerators)
    throw Error(Errc::BadInput, "too many generators for a Cech slice");
  if (static_cast<int>(degree.size()) != n)
    throw Error(Errc::LengthMismatch, "degree length does not match variable count");

  std::vector<std::uint32_t> supports(c, 0);
  std::vector<std::map<Int, int>> factors(c);
  for (std::size_t j = 0; j < c; ++j) {
    for (int i : support(ideal[j].exponents)) supports[j] |= 1u << i;
    factors[j] = factorize(ideal[j].coefficient);
  }
  std::uint32_t negative = 0;
  for (int i = 0; i < n; ++i)
    if (degree[i] < 0) negative |= 1u << i;

  CechSlice slice;
  slice.degree = degree;
  slice.terms.resize(c + 1);
  // Z[X]_{prod_T a_t U_t} has a degree-u piece iff every variable with a
  // negative exponent in u is inverted.
  for (GeneratorSet mask = 0; mask < (GeneratorSet{1} << c); ++mask) {
    std::uint32_t inverted_vars = 0;
    CechSummand summand{mask, {}};
    for (std::size_t j = 0; j < c; ++j) {
      if (!(mask >> j & 1u)) continue;
      inverted_vars |= supports[j];
      for (const auto& [p, e] : factors[j]) summand.inverted[p] += e;
    }
    if ((negative & ~inverted_vars) != 0) continue;
    slice.terms[std::popcount(mask)].push_back(std::move(summand));
  }

  for (std::size_t k = 0; k < c; ++k) {
    const auto& src = slice.terms[k];
    const auto& dst = slice.terms[k + 1];
    IntMatrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const GeneratorSet t = src[col].subset;
      for (std::size_t row = 0; row < dst.size(); ++row) {
        const GeneratorSet bigger = dst[row].subset;
        if ((bigger & t) != t) continue;
        const GeneratorSet added = bigger & ~t;
        const int below = std::popcount(t & (added - 1));
        d(row, col) = below % 2 == 0 ? 1 : -1;
      }
    }
    slice.differentials.push_back(std::move(d));
  }
  return slice;
}

namespace {

void require_prime(const Int& p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
}

}  // namespace

PLocalComplex localize_at(const CechSlice& slice, const Int& p) {
  require_prime(p);
  PLocalComplex out;
  out.p = p;
  for (const auto& term : slice.terms) {
    std::vector<Kind> kinds;
    for (const auto& s : term) kinds.push_back(s.inverts(p) ? Kind::Q : Kind::L);
    out.terms.push_back(std::move(kinds));
  }
  for (const auto& d : slice.differentials) out.differentials.push_back(to_rational(d));
  return out;
}

RationalComplex rationalize(const CechSlice& slice) {
  RationalComplex out;
  for (const auto& term : slice.terms) out.dims.push_back(term.size());
  out.differentials = slice.differentials;
  return out;
}

FiniteComplex reduce_mod(const CechSlice& slice, const Int& p, int K) {
  require_prime(p);
  if (K < 1) throw Error(Errc::NonpositiveK, "K must be positive");
  FiniteComplex out;
  out.p = p;
  out.K = K;
  const Int q = out.modulus();
  // A summand inverting p is p-divisible, so its reduction mod p^K vanishes.
  std::vector<std::vector<std::size_t>> kept(slice.terms.size());
  for (std::size_t k = 0; k < slice.terms.size(); ++k) {
    for (std::size_t s = 0; s < slice.terms[k].size(); ++s)
      if (!slice.terms[k][s].inverts(p)) kept[k].push_back(s);
    out.dims.push_back(kept[k].size());
  }
  for (std::size_t k = 0; k + 1 < slice.terms.size(); ++k) {
    const auto& d = slice.differentials[k];
    IntMatrix r(kept[k + 1].size(), kept[k].size());
    for (std::size_t row = 0; row < kept[k + 1].size(); ++row)
      for (std::size_t col = 0; col < kept[k].size(); ++col) {
        Int v = d(kept[k + 1][row], kept[k][col]);
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
        r(row, col) = v;
      }
    out.differentials.push_back(std::move(r));
  }
  return out;
}

}  // namespace lcstruct
