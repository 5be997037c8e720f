#include "lcstruct/arith.hpp"

#include "lcstruct/error.hpp"

#include <cstdlib>
#include <iostream>
#include <vector>

namespace lcstruct {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::ConstantMonomial: return "ConstantMonomial";
    case Errc::EmptyGeneratorList: return "EmptyGeneratorList";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotUsual: return "NotUsual";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NonpositiveK: return "NonpositiveK";
    case Errc::ValuationViolation: return "ValuationViolation";
    case Errc::InvalidComplex: return "InvalidComplex";
    case Errc::InconsistentImage: return "InconsistentImage";
    case Errc::NonStabilizing: return "NonStabilizing";
    case Errc::BlockInconsistency: return "BlockInconsistency";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

void consistency_violation(const std::string& what) {
  std::cerr << "lcstruct: ConsistencyViolation: " << what << std::endl;
  std::abort();
}

int valuation(const Int& x, const Int& p) {
  if (x == 0) return kInfiniteValuation;
  Int rest = x;
  int v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rat& x, const Int& p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Int power(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; n composite, odd, no small factors.
Int pollard_brent(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Int& v) {
      Int out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Int diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Int(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

std::map<Int, int> factorize(const Int& n) {
  std::map<Int, int> out;
  Int rest = abs(n);
  if (rest <= 1) return out;
  for (unsigned long d = 2; d < 10000 && rest > 1; ++d) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      ++out[Int(d)];
      rest /= d;
    }
  }
  if (rest > 1) factor_into(rest, out);
  return out;
}

Int parse_int(const std::string& text) {
  Int out;
  std::string body = text;
  if (!body.empty() && body.front() == '+') body.erase(0, 1);
  bool ok = !body.empty();
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && ch == '-' && body.size() > 1)))
      ok = false;
  }
  if (!ok || out.set_str(body, 10) != 0)
    throw Error(Errc::BadInput, "not a decimal integer: '" + text + "'");
  return out;
}

}  // namespace lcstruct
