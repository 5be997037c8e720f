#pragma once

#include "lcstruct/arith.hpp"
#include "lcstruct/monomial.hpp"
#include "lcstruct/plocal.hpp"
#include "lcstruct/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace lcstruct {

// Primes dividing theta = a_1 ... a_c. Only these can carry E(p) or Q
// summands.
struct TorsionPrimeSet {
  Int theta;
  std::vector<Int> primes;
};

TorsionPrimeSet torsion_primes(const CMonomialIdeal& ideal);

// mu_j(p, M) for j = 0, 1; every higher Bass number vanishes.
struct BassNumbers {
  int mu0 = 0;
  int mu1 = 0;

  int operator[](std::size_t j) const { return j == 0 ? mu0 : j == 1 ? mu1 : 0; }
  friend bool operator==(const BassNumbers&, const BassNumbers&) = default;
};

BassNumbers bass(const PElem& e);

struct ReportFlags {
  bool usual = false;
  bool split_certified = true;  // Z is a PID

  friend bool operator==(const ReportFlags&, const ReportFlags&) = default;
};

// Structure of H^i_I(Z[X])_u. `spots` keeps the homology at every spot of the
// localized slice; `locals` is its spot-i column.
struct StructureReport {
  std::size_t i = 0;
  Exponents degree;
  std::size_t alpha = 0;
  std::map<Int, PElem> locals;
  std::map<Int, BassNumbers> bass;
  ReportFlags flags;
  std::map<Int, std::vector<PElem>> spots;
  std::vector<std::size_t> rational_ranks;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

// Computes the report for torsion_primes(ideal) plus extra_primes. Throws
// NotPrime for a bad extra prime and BadInput for i > c. Violations of the
// structural identities abort.
StructureReport structure_report(const CMonomialIdeal& ideal, std::size_t i,
                                 const Exponents& degree,
                                 const std::vector<Int>& extra_primes = {},
                                 std::ostream* trace = nullptr);

struct VerifyOptions {
  std::vector<int> Ks;  // empty: stabilize from K = 4 by doubling
  int max_K = 64;
};

struct Verification {
  bool passed = true;
  std::vector<int> Ks_used;
  std::vector<std::string> transcript;
};

// Compares the finite reductions of the slice against the universal
// coefficient prediction from the reported structures at every spot, and
// the rational ranks. Throws NonStabilizing.
Verification verify_report(const CMonomialIdeal& ideal, const StructureReport& report,
                           const VerifyOptions& options = {});

struct BlockScan {
  Block block;
  std::size_t alpha = 0;
  bool torsion_free_present = false;
  std::vector<Exponents> sampled;
};

// alpha on every block, checked at the representative and `samples` random
// degrees inside [-radius, radius]^n. Throws BlockInconsistency.
std::vector<BlockScan> tame_scan(const CMonomialIdeal& ideal, std::size_t i,
                                 std::uint64_t seed = 0, int samples = 3, int radius = 8);

}  // namespace lcstruct
