#include "lcstruct/assembly.hpp"

#include "lcstruct/cech.hpp"
#include "lcstruct/error.hpp"
#include "lcstruct/finite.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lcstruct {

TorsionPrimeSet torsion_primes(const CMonomialIdeal& ideal) {
  TorsionPrimeSet out;
  out.theta = ideal.coefficient_product();
  for (const auto& [p, e] : factorize(out.theta)) out.primes.push_back(p);
  return out;
}

BassNumbers bass(const PElem& e) {
  // Hom(k, -) sees the socle of E(p) and of each Z/p^b; Ext^1(k, -) sees
  // L and each Z/p^b. Q is injective and uniquely divisible.
  return {e.prufer + e.torsion_count(), e.free + e.torsion_count()};
}

StructureReport structure_report(const CMonomialIdeal& ideal, std::size_t i,
                                 const Exponents& degree, const std::vector<Int>& extra_primes,
                                 std::ostream* trace) {
  if (i > ideal.size())
    throw Error(Errc::BadInput, "cohomological index " + std::to_string(i) +
                                    " exceeds the generator count " + std::to_string(ideal.size()));
  for (const auto& p : extra_primes)
    if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");

  const CechSlice slice = build_slice(ideal, degree);
  StructureReport report;
  report.i = i;
  report.degree = degree;
  report.rational_ranks = homology_ranks(rationalize(slice));
  report.alpha = report.rational_ranks[i];
  report.flags.usual = ideal.is_usual();

  const TorsionPrimeSet theta = torsion_primes(ideal);
  std::vector<Int> primes = theta.primes;
  primes.insert(primes.end(), extra_primes.begin(), extra_primes.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  for (const auto& p : primes) {
    if (trace) *trace << "degree " << format_degree(degree) << " prime " << p.get_str() << '\n';
    auto homology = homology_all(localize_at(slice, p), trace);
    const bool divides_theta = std::binary_search(theta.primes.begin(), theta.primes.end(), p);
    for (std::size_t spot = 0; spot < homology.size(); ++spot) {
      const PElem& e = homology[spot];
      if (static_cast<std::size_t>(e.free + e.divfree) != report.rational_ranks[spot]) {
        std::ostringstream msg;
        msg << "a + b = " << e.free + e.divfree << " but alpha = " << report.rational_ranks[spot]
            << " at p=" << p.get_str() << " spot " << spot;
        consistency_violation(msg.str());
      }
      if (!divides_theta && (e.divfree != 0 || e.prufer != 0))
        consistency_violation("divisible summand at a prime not dividing theta");
    }
    report.locals[p] = homology[i];
    report.bass[p] = bass(homology[i]);
    report.spots[p] = std::move(homology);
  }
  return report;
}

namespace {

std::string format_group(const FiniteGroup& g, const Int& p) {
  if (g.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < g.size(); ++k)
    out += (k ? " + " : "") + std::string("Z/") + p.get_str() + "^" + std::to_string(g[k]);
  return out;
}

std::vector<int> stabilized_Ks(const std::vector<PElem>& homology, int max_K) {
  int largest = 0;
  for (const auto& e : homology)
    for (int beta : e.torsion) largest = std::max(largest, beta);
  int K = 4;
  while (largest >= K) {
    K *= 2;
    if (K > max_K)
      throw Error(Errc::NonStabilizing, "torsion exponent " + std::to_string(largest) +
                                            " needs K above the cap " + std::to_string(max_K));
  }
  if (K > max_K)
    throw Error(Errc::NonStabilizing, "starting K exceeds the cap " + std::to_string(max_K));
  return {K, 2 * K};
}

}  // namespace

Verification verify_report(const CMonomialIdeal& ideal, const StructureReport& report,
                           const VerifyOptions& options) {
  Verification out;
  const CechSlice slice = build_slice(ideal, report.degree);
  const auto ranks = homology_ranks(rationalize(slice));
  const std::string where = "u=" + format_degree(report.degree);

  for (std::size_t spot = 0; spot < ranks.size(); ++spot) {
    const bool stored_ok = spot < report.rational_ranks.size() && report.rational_ranks[spot] == ranks[spot];
    std::ostringstream line;
    line << where << " rational rank spot " << spot << ": " << ranks[spot]
         << (stored_ok ? " ok" : " MISMATCH");
    out.passed = out.passed && stored_ok;
    out.transcript.push_back(line.str());
  }

  for (const auto& [p, homology] : report.spots) {
    for (std::size_t spot = 0; spot < homology.size() && spot < ranks.size(); ++spot) {
      const auto ab = static_cast<std::size_t>(homology[spot].free + homology[spot].divfree);
      if (ab != ranks[spot]) {
        out.passed = false;
        out.transcript.push_back(where + " p=" + p.get_str() + " spot " + std::to_string(spot) +
                                 ": a + b = " + std::to_string(ab) + " MISMATCH");
      }
    }
    const std::vector<int> Ks = options.Ks.empty() ? stabilized_Ks(homology, options.max_K) : options.Ks;
    for (int K : Ks) {
      if (std::find(out.Ks_used.begin(), out.Ks_used.end(), K) == out.Ks_used.end())
        out.Ks_used.push_back(K);
      const auto oracle = finite_approx(reduce_mod(slice, p, K));
      const auto predicted = uct_predict(homology, K);
      for (std::size_t spot = 0; spot < oracle.size(); ++spot) {
        const bool ok = spot < predicted.size() && oracle[spot] == predicted[spot];
        out.passed = out.passed && ok;
        std::ostringstream line;
        line << where << " p=" << p.get_str() << " K=" << K << " spot " << spot
             << ": oracle " << format_group(oracle[spot], p) << ", predicted "
             << (spot < predicted.size() ? format_group(predicted[spot], p) : "missing")
             << (ok ? " ok" : " MISMATCH");
        out.transcript.push_back(line.str());
      }
      if (predicted.size() != oracle.size()) out.passed = false;
    }
  }
  std::sort(out.Ks_used.begin(), out.Ks_used.end());
  return out;
}

std::vector<BlockScan> tame_scan(const CMonomialIdeal& ideal, std::size_t i, std::uint64_t seed,
                                 int samples, int radius) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nonneg(0, radius), negative(-radius, -1);
  std::vector<BlockScan> out;
  for (auto& block : blocks(ideal.variables())) {
    BlockScan scan;
    scan.alpha = alpha(ideal, i, block.representative());
    for (int s = 0; s < samples; ++s) {
      Exponents u(block.nonneg.size());
      for (std::size_t k = 0; k < u.size(); ++k) u[k] = block.nonneg[k] ? nonneg(rng) : negative(rng);
      const std::size_t a = alpha(ideal, i, u);
      if (a != scan.alpha)
        throw Error(Errc::BlockInconsistency,
                    "alpha " + std::to_string(a) + " at " + format_degree(u) + " differs from " +
                        std::to_string(scan.alpha) + " on block " + block.label());
      scan.sampled.push_back(std::move(u));
    }
    scan.torsion_free_present = scan.alpha > 0;
    scan.block = std::move(block);
    out.push_back(std::move(scan));
  }
  return out;
}

}  // namespace lcstruct
