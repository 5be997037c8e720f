#pragma once

#include <gmpxx.h>

#include <climits>
#include <map>
#include <string>

namespace lcstruct {

using Int = mpz_class;
using Rat = mpq_class;

// Valuation of zero.
inline constexpr int kInfiniteValuation = INT_MAX;

// p-adic valuation; kInfiniteValuation for zero.
int valuation(const Int& x, const Int& p);
int valuation(const Rat& x, const Int& p);

Int power(const Int& base, unsigned long exponent);

bool is_prime(const Int& n);

// Factorization of |n| as prime -> multiplicity. |n| <= 1 gives an empty map.
std::map<Int, int> factorize(const Int& n);

// Parses a decimal integer with optional sign; throws Error(BadInput).
Int parse_int(const std::string& text);

}  // namespace lcstruct
