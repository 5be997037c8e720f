#pragma once

#include "lcstruct/arith.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lcstruct {

// Exponents of a monomial, or a multidegree u (entries may then be negative).
using Exponents = std::vector<int>;

struct Generator {
  Int coefficient;
  Exponents exponents;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Ideal of Z[X_1..X_n] generated by elements a_j * U_j with a_j a nonzero
// integer and U_j a nonconstant monomial. Construct through validate().
class CMonomialIdeal {
 public:
  // Checks the generator list and normalizes coefficient signs to positive.
  // Throws Error with ZeroCoefficient, ConstantMonomial, EmptyGeneratorList
  // or LengthMismatch; generator() names the offending entry.
  static CMonomialIdeal validate(int variables, std::vector<Generator> generators);

  int variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const Generator& operator[](std::size_t j) const { return generators_[j]; }

  // True iff every coefficient is +-1.
  bool is_usual() const;
  // Indices of generators whose coefficient is a unit.
  std::vector<std::size_t> unit_generators() const;
  // theta = a_1 * ... * a_c
  Int coefficient_product() const;

  // Merges generators with equal monomials into one with the gcd coefficient.
  CMonomialIdeal simplified() const;

  friend bool operator==(const CMonomialIdeal&, const CMonomialIdeal&) = default;

 private:
  CMonomialIdeal(int variables, std::vector<Generator> generators)
      : variables_(variables), generators_(std::move(generators)) {}

  int variables_ = 0;
  std::vector<Generator> generators_;
};

// Support of a monomial: 0-based indices of variables with positive exponent.
std::vector<int> support(const Exponents& monomial);

// True iff `monomial` is divisible by some generator monomial.
bool contains_monomial(const CMonomialIdeal& usual, const Exponents& monomial);

// Squarefree ideal generated by the supports, minimal generators only.
// Throws NotUsual.
CMonomialIdeal radical_usual(const CMonomialIdeal& ideal);

// Irreducible monomial ideal (X_i^{e_i} : e_i > 0); entry 0 means absent.
using IrreducibleComponent = Exponents;

// Irredundant decomposition into ideals generated by pure powers,
// sorted lexicographically. Throws NotUsual.
std::vector<IrreducibleComponent> primary_decompose(const CMonomialIdeal& ideal);

// (X_{i_1}, ..., X_{i_t}); 0-based, sorted, nonempty.
struct MonomialPrime {
  std::vector<int> variables;

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
};

std::vector<MonomialPrime> associated_primes(const CMonomialIdeal& ideal);

// Sign pattern of Z^n: coordinates in `nonneg` are >= 0, the others <= -1.
struct Block {
  std::vector<bool> nonneg;

  Exponents representative() const;
  bool contains(const Exponents& degree) const;
  // "+-" style label, one character per coordinate.
  std::string label() const;

  friend bool operator==(const Block&, const Block&) = default;
};

// All 2^n blocks, ordered by label with '-' before '+'.
std::vector<Block> blocks(int n);
Block block_of(const Exponents& degree);

std::string format_monomial(const Exponents& exponents);
// "(0,-1)"
std::string format_degree(const Exponents& degree);
std::string format_ideal(const CMonomialIdeal& ideal);

}  // namespace lcstruct
