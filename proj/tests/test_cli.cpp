#include "lcstruct/cli.hpp"
#include "lcstruct/error.hpp"
#include "lcstruct/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lcstruct;

namespace {

struct Output {
  int code;
  std::string out, err;
};

Output run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lcstruct");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lcstruct_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kEx61 = R"({"variables": 1, "generators": [{"coefficient": "2", "exponents": [1]}]})";
const std::string kEx62 =
    R"({"variables": 2, "generators": [{"coefficient": "2", "exponents": [1, 0]},
                                       {"coefficient": "1", "exponents": [0, 1]}]})";

}  // namespace

TEST(ParseIdeal, Schema) {
  const auto I = parse_ideal(kEx62);
  EXPECT_EQ(I.variables(), 2);
  EXPECT_EQ(I[0].coefficient, 2);
  EXPECT_EQ(parse_ideal(ideal_to_json(I).dump()), I);
  const auto big = parse_ideal(
      R"({"variables": 1, "generators": [{"coefficient": "-123456789012345678901234567890", "exponents": [2]}]})");
  EXPECT_EQ(big[0].coefficient, Int("123456789012345678901234567890"));
}

TEST(ParseIdeal, Errors) {
  try {
    parse_ideal("{\"variables\": 1,\n  \"generators\": [}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadInput);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_ideal(R"({"variables": 1, "generators": [{"coefficient": 2, "exponents": [1]}]})"), Error);
  EXPECT_THROW(parse_ideal(R"({"variables": 1, "generators": [{"coefficient": "2x", "exponents": [1]}]})"), Error);
  try {
    parse_ideal(R"({"variables": 1, "generators": [{"coefficient": "2", "exponents": [1]},
                                                   {"coefficient": "3", "exponents": [0]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConstantMonomial);
    EXPECT_EQ(e.generator(), 1u);
  }
}

TEST(Cli, ReportTable) {
  const auto path = write_temp("ex61.json", kEx61);
  const auto r = run_cli({"report", "--ideal", path, "--i", "1", "--degree", "0", "--format", "table"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_NE(header.find("p=2"), std::string::npos);
  EXPECT_EQ(row.rfind("(0)", 0), 0u);
  EXPECT_NE(row.find("  1  0  "), std::string::npos) << row;
  EXPECT_NE(row.find("E(2)"), std::string::npos) << row;
}

TEST(Cli, AlphaTable) {
  const auto path = write_temp("ex62.json", kEx62);
  const auto r = run_cli({"alpha-table", "--ideal", path, "--i", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"({"--": 1, "-+": 0, "+-": 0, "++": 0})"));
}

TEST(Cli, VerifyBox) {
  const auto path = write_temp("ex62.json", kEx62);
  const auto r = run_cli({"verify", "--ideal", path, "--i", "2", "--box", "-2:1,-2:1", "--Ks", "4,8"});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["degrees"].get<int>(), 16);
}

TEST(Cli, NegativeDegreesParse) {
  const auto path = write_temp("ex62.json", kEx62);
  const auto r = run_cli({"report", "--ideal", path, "--i", "2", "--degree", "-1,-1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j[0]["alpha"].get<int>(), 1);
  EXPECT_EQ(j[0]["locals"]["2"]["q"].get<int>(), 1);
}

TEST(Cli, ValidationExitCodes) {
  const auto constant = write_temp("constant.json",
      R"({"variables": 1, "generators": [{"coefficient": "2", "exponents": [1]}, {"coefficient": "3", "exponents": [0]}]})");
  auto r = run_cli({"report", "--ideal", constant, "--degree", "0"});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.err.find("generator 2"), std::string::npos) << r.err;

  const auto malformed = write_temp("malformed.json", "{\n \"variables\": 1,\n ]");
  r = run_cli({"report", "--ideal", malformed, "--degree", "0"});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

  const auto ok = write_temp("ex61.json", kEx61);
  EXPECT_EQ(run_cli({"report", "--ideal", ok, "--degree", "0", "--primes", "4"}).code, cli::kInvalidInput);
  EXPECT_EQ(run_cli({"report", "--ideal", ok, "--degree", "0,0"}).code, cli::kInvalidInput);
  EXPECT_EQ(run_cli({"report", "--ideal", ok, "--i", "5", "--degree", "0"}).code, cli::kInvalidInput);
  EXPECT_EQ(run_cli({"report", "--ideal", ok, "--box", "3:1"}).code, cli::kInvalidInput);
  EXPECT_EQ(run_cli({"report", "--ideal", "/nonexistent/x.json", "--degree", "0"}).code, cli::kInvalidInput);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInvalidInput);
}

TEST(Cli, NonStabilizingExitCode) {
  cli::JobConfig config;
  config.ideal_path = write_temp("ex61.json", kEx61);
  config.mode = cli::Mode::Verify;
  config.i_first = config.i_last = 1;
  config.degrees = {{0}};
  config.max_K = 2;
  std::ostringstream out, err;
  EXPECT_EQ(cli::run(config, out, err), cli::kNonStabilizing);
}

TEST(Cli, JsonRoundTrip) {
  const auto path = write_temp("ex62.json", kEx62);
  const auto I = parse_ideal(kEx62);
  for (bool all_spots : {false, true}) {
    std::vector<std::string> args{"report", "--ideal", path, "--i", "2", "--box", "-2:1,-2:1", "--primes", "3"};
    if (all_spots) args.push_back("--all-spots");
    const auto r = run_cli(args);
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto parsed = Json::parse(r.out);
    ASSERT_EQ(parsed.size(), 16u);
    for (const auto& entry : parsed) {
      const StructureReport back = report_from_json(entry);
      auto expected = structure_report(I, 2, back.degree, {Int(3)});
      if (!all_spots) {
        expected.spots.clear();
        expected.rational_ranks.clear();
      }
      EXPECT_EQ(back, expected);
    }
  }
}

TEST(Cli, DeterministicAcrossWidths) {
  const auto path = write_temp("mixed.json",
      R"({"variables": 2, "generators": [{"coefficient": "4", "exponents": [1, 1]}, {"coefficient": "6", "exponents": [0, 2]}, {"coefficient": "3", "exponents": [2, 0]}]})");
  const auto one = run_cli({"report", "--ideal", path, "--i", "0:3", "--box", "-2:2,-2:2", "--all-spots", "--jobs", "1"});
  const auto four = run_cli({"report", "--ideal", path, "--i", "0:3", "--box", "-2:2,-2:2", "--all-spots", "--jobs", "4"});
  ASSERT_EQ(one.code, cli::kOk);
  EXPECT_EQ(one.out, four.out);
  const auto again = run_cli({"report", "--ideal", path, "--i", "0:3", "--box", "-2:2,-2:2", "--all-spots", "--jobs", "3"});
  EXPECT_EQ(one.out, again.out);
}

TEST(Cli, ScanAndDumpSlice) {
  const auto path = write_temp("ex62.json", kEx62);
  const auto s = run_cli({"scan", "--ideal", path, "--i", "2", "--format", "table"});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  EXPECT_NE(s.out.find("--"), std::string::npos);
  const auto d = run_cli({"report", "--ideal", path, "--i", "2", "--degree", "-1,-1", "--dump-slice"});
  ASSERT_EQ(d.code, cli::kOk);
  const auto slice = Json::parse(d.err.substr(0, d.err.find('\n')));
  EXPECT_EQ(slice["terms"][2][0]["inverted"], "2");
}

TEST(Cli, JobDegreesOrdering) {
  cli::JobConfig config;
  config.box = cli::parse_box("-1:0,0:1");
  const auto degrees = cli::job_degrees(config, 2);
  EXPECT_EQ(degrees, (std::vector<Exponents>{{-1, 0}, {-1, 1}, {0, 0}, {0, 1}}));
  EXPECT_EQ(cli::parse_degree("-3,4"), (Exponents{-3, 4}));
  EXPECT_THROW(cli::parse_box("1:2:3"), Error);
}
