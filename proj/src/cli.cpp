#include "lcstruct/cli.hpp"

#include "lcstruct/assembly.hpp"
#include "lcstruct/error.hpp"
#include "lcstruct/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace lcstruct::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& text) {
  const Int v = parse_int(text);
  if (!v.fits_sint_p()) throw Error(Errc::BadInput, "integer out of range: " + text);
  return static_cast<int>(v.get_si());
}

// Runs task(k) for k in [0, count) on `width` threads.
void parallel_for(std::size_t count, int width, const std::function<void(std::size_t)>& task) {
  const std::size_t threads = std::min<std::size_t>(std::max(width, 1), count);
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) {
        try {
          task(k);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::BadInput, "cannot read ideal file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string pelem_cell(const PElem& e) {
  std::ostringstream out;
  out << e;
  return out.str();
}

// Left-aligned columns separated by two spaces; single-cell rows are notes
// and do not affect the widths.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && row.size() > 1; ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

struct ReportJob {
  std::size_t i;
  Exponents degree;
};

int run_report(const JobConfig& config, const CMonomialIdeal& ideal, std::ostream& out,
               std::ostream& err) {
  std::vector<ReportJob> jobs;
  for (std::size_t i = config.i_first; i <= config.i_last; ++i)
    for (const auto& u : job_degrees(config, ideal.variables())) jobs.push_back({i, u});
  std::vector<StructureReport> reports(jobs.size());
  std::vector<std::string> diagnostics(jobs.size());
  parallel_for(jobs.size(), config.jobs, [&](std::size_t k) {
    std::ostringstream trace;
    if (config.dump_slice)
      trace << slice_to_json(build_slice(ideal, jobs[k].degree)).dump() << '\n';
    reports[k] = structure_report(ideal, jobs[k].i, jobs[k].degree, config.primes,
                                  config.trace ? &trace : nullptr);
    diagnostics[k] = trace.str();
  });
  for (const auto& d : diagnostics) err << d;

  if (config.format == Format::Json) {
    Json array = Json::array();
    for (const auto& r : reports) array.push_back(report_to_json(r, config.all_spots));
    out << array.dump(2) << '\n';
    return kOk;
  }
  std::vector<Int> primes;
  for (const auto& r : reports)
    for (const auto& [p, e] : r.locals) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"u", "i", "alpha"};
  for (const auto& p : primes) header.push_back("p=" + p.get_str());
  for (const auto& p : primes) header.push_back("bass p=" + p.get_str());
  rows.push_back(header);
  for (const auto& r : reports) {
    std::vector<std::string> row{format_degree(r.degree), std::to_string(r.i), std::to_string(r.alpha)};
    for (const auto& p : primes) row.push_back(r.locals.count(p) ? pelem_cell(r.locals.at(p)) : "-");
    for (const auto& p : primes)
      row.push_back(r.bass.count(p) ? std::to_string(r.bass.at(p).mu0) + "," +
                                          std::to_string(r.bass.at(p).mu1)
                                    : "-");
    rows.push_back(std::move(row));
    if (config.all_spots) {
      for (const auto& [p, homology] : r.spots) {
        std::string line = "  spots p=" + p.get_str() + ":";
        for (std::size_t s = 0; s < homology.size(); ++s)
          line += " H^" + std::to_string(s) + "=" + pelem_cell(homology[s]);
        rows.push_back({line});
      }
    }
  }
  print_table(out, rows);
  return kOk;
}

int run_alpha_table(const JobConfig& config, const CMonomialIdeal& ideal, std::ostream& out) {
  std::vector<AlphaTable> tables;
  for (std::size_t i = config.i_first; i <= config.i_last; ++i) tables.push_back(alpha_table(ideal, i));
  if (config.format == Format::Json) {
    if (tables.size() == 1) {
      out << alpha_table_to_json(tables.front()).dump() << '\n';
    } else {
      Json all = Json::object();
      for (const auto& t : tables) all[std::to_string(t.i)] = alpha_table_to_json(t);
      out << all.dump(2) << '\n';
    }
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"i", "block", "representative", "alpha"}};
  for (const auto& t : tables)
    for (const auto& e : t.entries)
      rows.push_back({std::to_string(t.i), e.block.label(), format_degree(e.block.representative()),
                      std::to_string(e.alpha)});
  print_table(out, rows);
  return kOk;
}

int run_scan(const JobConfig& config, const CMonomialIdeal& ideal, std::ostream& out) {
  std::vector<std::vector<BlockScan>> scans;
  for (std::size_t i = config.i_first; i <= config.i_last; ++i)
    scans.push_back(tame_scan(ideal, i, config.seed));
  if (config.format == Format::Json) {
    Json all = Json::object();
    for (std::size_t k = 0; k < scans.size(); ++k)
      all[std::to_string(config.i_first + k)] = scan_to_json(scans[k]);
    out << all.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"i", "block", "alpha", "torsion-free"}};
  for (std::size_t k = 0; k < scans.size(); ++k)
    for (const auto& s : scans[k])
      rows.push_back({std::to_string(config.i_first + k), s.block.label(), std::to_string(s.alpha),
                      s.torsion_free_present ? "yes" : "no"});
  print_table(out, rows);
  return kOk;
}

int run_verify(const JobConfig& config, const CMonomialIdeal& ideal, std::ostream& out) {
  const auto degrees = job_degrees(config, ideal.variables());
  std::vector<Verification> results(degrees.size());
  VerifyOptions options;
  options.Ks = config.Ks;
  options.max_K = config.max_K;
  parallel_for(degrees.size(), config.jobs, [&](std::size_t k) {
    const auto report = structure_report(ideal, config.i_first, degrees[k], config.primes);
    results[k] = verify_report(ideal, report, options);
  });

  bool passed = true;
  std::size_t checks = 0;
  std::vector<int> Ks;
  std::vector<std::string> failures, transcript;
  for (const auto& v : results) {
    passed = passed && v.passed;
    checks += v.transcript.size();
    Ks.insert(Ks.end(), v.Ks_used.begin(), v.Ks_used.end());
    for (const auto& line : v.transcript) {
      if (line.find("MISMATCH") != std::string::npos) failures.push_back(line);
      if (config.trace) transcript.push_back(line);
    }
  }
  std::sort(Ks.begin(), Ks.end());
  Ks.erase(std::unique(Ks.begin(), Ks.end()), Ks.end());

  if (config.format == Format::Json) {
    Json j{{"passed", passed}, {"degrees", degrees.size()}, {"checks", checks}, {"Ks", Ks},
           {"failures", failures}};
    if (config.trace) j["transcript"] = transcript;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& line : transcript) out << line << '\n';
    for (const auto& line : failures) out << line << '\n';
    out << (passed ? "PASS" : "FAIL") << ": " << degrees.size() << " degrees, " << checks
        << " checks\n";
  }
  return passed ? kOk : kVerifyFailed;
}

}  // namespace

std::vector<std::pair<int, int>> parse_box(const std::string& text) {
  std::vector<std::pair<int, int>> box;
  for (const auto& range : split(text, ',')) {
    const auto bounds = split(range, ':');
    if (bounds.size() != 2) throw Error(Errc::BadInput, "box range '" + range + "' is not lo:hi");
    const int lo = to_int(bounds[0]), hi = to_int(bounds[1]);
    if (lo > hi) throw Error(Errc::BadInput, "box range '" + range + "' has lo > hi");
    box.emplace_back(lo, hi);
  }
  if (box.empty()) throw Error(Errc::BadInput, "empty box");
  return box;
}

Exponents parse_degree(const std::string& text) {
  Exponents out;
  for (const auto& item : split(text, ',')) out.push_back(to_int(item));
  if (out.empty()) throw Error(Errc::BadInput, "empty degree");
  return out;
}

std::vector<Exponents> job_degrees(const JobConfig& config, int variables) {
  std::vector<Exponents> out;
  if (!config.degrees.empty()) {
    for (const auto& u : config.degrees)
      if (static_cast<int>(u.size()) != variables)
        throw Error(Errc::LengthMismatch,
                    "degree " + format_degree(u) + " does not have " + std::to_string(variables) + " entries");
    out = config.degrees;
  } else {
    auto box = config.box;
    if (box.empty()) box.assign(variables, {-8, 8});
    if (static_cast<int>(box.size()) != variables)
      throw Error(Errc::LengthMismatch, "box has " + std::to_string(box.size()) +
                                            " ranges, expected " + std::to_string(variables));
    Exponents u(variables);
    for (int k = 0; k < variables; ++k) u[k] = box[k].first;
    while (true) {
      out.push_back(u);
      int k = variables - 1;
      while (k >= 0 && u[k] == box[k].second) {
        u[k] = box[k].first;
        --k;
      }
      if (k < 0) break;
      ++u[k];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    CMonomialIdeal ideal = parse_ideal(read_file(config.ideal_path));
    if (config.simplify) ideal = ideal.simplified();
    if (config.i_first > config.i_last)
      throw Error(Errc::BadInput, "empty cohomological index range");
    if (config.mode != Mode::AlphaTable && config.mode != Mode::Scan && config.i_last > ideal.size())
      throw Error(Errc::BadInput, "cohomological index exceeds the generator count " +
                                      std::to_string(ideal.size()));
    switch (config.mode) {
      case Mode::Report: return run_report(config, ideal, out, err);
      case Mode::AlphaTable: return run_alpha_table(config, ideal, out);
      case Mode::Scan: return run_scan(config, ideal, out);
      case Mode::Verify: return run_verify(config, ideal, out);
    }
  } catch (const Error& e) {
    err << "lcstruct: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case Errc::NonStabilizing: return kNonStabilizing;
      case Errc::InvalidComplex:
      case Errc::InconsistentImage:
      case Errc::BlockInconsistency:
      case Errc::ValuationViolation: return kInternal;
      default: return kInvalidInput;
    }
  }
  return kInternal;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure of graded components of local cohomology supported on C-monomial ideals"};
  app.require_subcommand(1);

  JobConfig config;
  if (const char* env = std::getenv("LCSTRUCT_MAX_K")) {
    try {
      config.max_K = to_int(env);
    } catch (const Error& e) {
      err << "lcstruct: LCSTRUCT_MAX_K: " << e.what() << '\n';
      return kInvalidInput;
    }
  }

  std::string i_text = "0", box_text, primes_text = "auto", Ks_text, format_text = "json";
  std::vector<std::string> degree_texts;

  auto add_common = [&](CLI::App* sub, bool with_degrees) {
    sub->add_option("--ideal", config.ideal_path, "ideal JSON file")->required();
    sub->add_option("--i", i_text, "cohomological index or range lo:hi");
    sub->add_option("--format", format_text, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--simplify", config.simplify, "merge generators with equal monomials");
    if (with_degrees) {
      sub->add_option("--degree", degree_texts, "degree u as comma-separated integers (repeatable)");
      sub->add_option("--box", box_text, "degree box lo:hi,lo:hi,... (default -8:8 per variable)");
      sub->add_option("--primes", primes_text, "auto, or extra primes to probe: 3,5");
      sub->add_option("--jobs", config.jobs, "parallel width")->check(CLI::PositiveNumber);
      sub->add_flag("--trace", config.trace, "log reduction transcripts to stderr");
    }
  };
  CLI::App* report = app.add_subcommand("report", "structure report per degree");
  add_common(report, true);
  report->add_flag("--all-spots", config.all_spots, "include the homology at every spot");
  report->add_flag("--dump-slice", config.dump_slice, "print each Cech slice as JSON to stderr");
  CLI::App* scan = app.add_subcommand("scan", "blockwise alpha and torsion-free presence");
  add_common(scan, false);
  scan->add_option("--seed", config.seed, "sampling seed");
  CLI::App* verify = app.add_subcommand("verify", "finite-coefficient oracle check");
  add_common(verify, true);
  verify->add_option("--Ks", Ks_text, "oracle moduli exponents, e.g. 4,8 (default: stabilize)");
  CLI::App* table = app.add_subcommand("alpha-table", "alpha on each block representative");
  add_common(table, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "lcstruct: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (report->parsed()) config.mode = Mode::Report;
    if (scan->parsed()) config.mode = Mode::Scan;
    if (verify->parsed()) config.mode = Mode::Verify;
    if (table->parsed()) config.mode = Mode::AlphaTable;

    const auto i_parts = split(i_text, ':');
    if (i_parts.size() == 1) {
      config.i_first = config.i_last = static_cast<std::size_t>(std::max(0, to_int(i_parts[0])));
      if (to_int(i_parts[0]) < 0) throw Error(Errc::BadInput, "negative cohomological index");
    } else if (i_parts.size() == 2 && to_int(i_parts[0]) >= 0) {
      config.i_first = static_cast<std::size_t>(to_int(i_parts[0]));
      config.i_last = static_cast<std::size_t>(std::max(0, to_int(i_parts[1])));
    } else {
      throw Error(Errc::BadInput, "bad --i '" + i_text + "'");
    }
    config.format = format_text == "table" ? Format::Table : Format::Json;
    for (const auto& d : degree_texts) config.degrees.push_back(parse_degree(d));
    if (!box_text.empty()) config.box = parse_box(box_text);
    if (primes_text != "auto") {
      for (const auto& p : split(primes_text, ',')) {
        const Int prime = parse_int(p);
        if (!is_prime(prime)) throw Error(Errc::NotPrime, p + " is not prime");
        config.primes.push_back(prime);
      }
    }
    if (!Ks_text.empty()) {
      for (const auto& k : split(Ks_text, ',')) {
        const int K = to_int(k);
        if (K < 1) throw Error(Errc::NonpositiveK, "K must be positive");
        config.Ks.push_back(K);
      }
    }
  } catch (const Error& e) {
    err << "lcstruct: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalidInput;
  }
  return run(config, out, err);
}

}  // namespace lcstruct::cli
