#pragma once

#include "lcstruct/arith.hpp"
#include "lcstruct/monomial.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcstruct::cli {

enum class Mode { Report, Scan, Verify, AlphaTable };
enum class Format { Json, Table };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNonStabilizing = 3;
inline constexpr int kInternal = 4;

struct JobConfig {
  std::string ideal_path;
  Mode mode = Mode::Report;
  std::size_t i_first = 0;
  std::size_t i_last = 0;
  std::vector<Exponents> degrees;               // explicit degrees, if any
  std::vector<std::pair<int, int>> box;         // per-coordinate [lo, hi]
  std::vector<Int> primes;                      // probes beyond theta's primes
  std::vector<int> Ks;                          // empty: stabilize automatically
  Format format = Format::Json;
  int jobs = 1;
  int max_K = 64;
  std::uint64_t seed = 0;
  bool all_spots = false;
  bool simplify = false;
  bool dump_slice = false;
  bool trace = false;
};

// Parses "lo:hi,lo:hi,..." into a box; throws Error(BadInput).
std::vector<std::pair<int, int>> parse_box(const std::string& text);
// Parses "a,b,c"; throws Error(BadInput).
Exponents parse_degree(const std::string& text);

// Degrees of the job in lexicographic order: the explicit list when given,
// else every point of the box (default [-8, 8]^n).
std::vector<Exponents> job_degrees(const JobConfig& config, int variables);

int run(const JobConfig& config, std::ostream& out, std::ostream& err);

// Command-line front end; argv[0] is the program name.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcstruct::cli
