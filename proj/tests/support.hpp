#pragma once

#include "lcstruct/monomial.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace lcstruct::testing {

inline CMonomialIdeal ideal(int n, std::vector<std::pair<long, Exponents>> gens) {
  std::vector<Generator> out;
  for (auto& [a, e] : gens) out.push_back({Int(a), std::move(e)});
  return CMonomialIdeal::validate(n, std::move(out));
}

// Random ideal with n <= max_n variables, c <= max_c generators, exponents
// in [0, max_exp] (never all zero) and coefficients drawn from `coefficients`.
inline CMonomialIdeal random_ideal(std::mt19937_64& rng, int max_n, int max_c, int max_exp,
                                   const std::vector<long>& coefficients) {
  std::uniform_int_distribution<int> n_dist(1, max_n), c_dist(1, max_c), e_dist(0, max_exp);
  std::uniform_int_distribution<std::size_t> a_dist(0, coefficients.size() - 1);
  const int n = n_dist(rng);
  const int c = c_dist(rng);
  std::vector<Generator> gens;
  for (int j = 0; j < c; ++j) {
    Exponents e(n);
    do {
      for (auto& x : e) x = e_dist(rng);
    } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
    gens.push_back({Int(coefficients[a_dist(rng)]), e});
  }
  return CMonomialIdeal::validate(n, std::move(gens));
}

inline CMonomialIdeal random_usual_ideal(std::mt19937_64& rng, int max_n, int max_c, int max_exp) {
  return random_ideal(rng, max_n, max_c, max_exp, {1});
}

// Calls f on every exponent vector in [0, bound]^n.
inline void for_each_monomial(int n, int bound, const std::function<void(const Exponents&)>& f) {
  Exponents e(n, 0);
  while (true) {
    f(e);
    int k = n - 1;
    while (k >= 0 && e[k] == bound) e[k--] = 0;
    if (k < 0) return;
    ++e[k];
  }
}

// Brute-force membership: some generator monomial divides m.
inline bool in_monomial_ideal(const std::vector<Exponents>& gens, const Exponents& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exponents& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > m[i]) return false;
    return true;
  });
}

// Generators of a pure-power component.
inline std::vector<Exponents> component_generators(const Exponents& component) {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < component.size(); ++i) {
    if (component[i] == 0) continue;
    Exponents e(component.size(), 0);
    e[i] = component[i];
    gens.push_back(e);
  }
  return gens;
}

inline std::vector<Exponents> monomials_of(const CMonomialIdeal& ideal) {
  std::vector<Exponents> out;
  for (const auto& g : ideal.generators()) out.push_back(g.exponents);
  return out;
}

inline int max_exponent(const CMonomialIdeal& ideal) {
  int m = 0;
  for (const auto& g : ideal.generators())
    for (int e : g.exponents) m = std::max(m, e);
  return m;
}

}  // namespace lcstruct::testing
