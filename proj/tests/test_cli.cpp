#include "cli.hpp"
#include "support.hpp"
#include "toric/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TORICSET_DATA_DIR;
const fs::path kGolden = TORICSET_GOLDEN_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = toricset::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string worked_example_file() { return (kData / "worked_example.json").string(); }

fs::path scratch(const std::string& name, const std::string& content) {
  const auto dir = fs::temp_directory_path() / "toricset_cli_test";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(CliValidate, WorkedExample) {
  auto r = run({"validate", worked_example_file()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "2 | d1, 3 | d2"));
  auto j = run({"validate", worked_example_file(), "--json"});
  EXPECT_EQ(j.code, 0);
  auto doc = io::json::parse(j.out);
  EXPECT_TRUE(doc["valid"].get<bool>());
  EXPECT_EQ(doc["witness"]["p"], 2);
  EXPECT_EQ(doc["witness"]["q"], 3);
}

TEST(CliValidate, DomainViolationExitsOne) {
  auto r = run({"validate", (kData / "pairwise_violation.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "pairwise_coprime_d violated at (1,2)"));
}

TEST(CliValidate, SchemaErrorsExitTwo) {
  auto missing = run({"validate", (kData / "missing_h.json").string()});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(contains(missing.err, "missing field \"h\""));
  EXPECT_EQ(run({"validate", scratch("broken.json", "{\"n\": 3,").string()}).code, 2);
  EXPECT_EQ(run({"validate", scratch("typed.json", R"({"n":3,"d":[2,"3"],"f":[3,5],"g":[1,1],"h":[3,5]})").string()}).code,
            2);
  EXPECT_EQ(run({"validate", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"validate"}).code, 2);
  EXPECT_EQ(run({"frobnicate", worked_example_file()}).code, 2);
}

TEST(CliEquations, TextJsonAndGolden) {
  auto r = run({"equations", worked_example_file(), "--golden", (kGolden / "worked_example_equations.txt").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "F1: y1^2 - x1^3*x3^2"));
  EXPECT_TRUE(contains(r.out, "F: y3^6 - x1^9*x2^10"));
  auto j = run({"equations", worked_example_file(), "--json"});
  auto doc = io::json::parse(j.out);
  ASSERT_EQ(doc["equations"].size(), 4u);
  EXPECT_EQ(doc["equations"][0]["name"], "F1");
  EXPECT_EQ(doc["equations"][0]["alpha"], io::json::parse("[-3,0,-2]"));
  EXPECT_EQ(doc["equations"][0]["beta"], io::json::parse("[2,0,0]"));
  EXPECT_EQ(doc["equations"][3]["beta"], io::json::parse("[1,1,-1]"));
  EXPECT_EQ(run({"equations", (kData / "pairwise_violation.json").string()}).code, 1);
  EXPECT_EQ(run({"equations", worked_example_file(), "--field", "F9"}).code, 2);
}

TEST(CliEquations, GoldenMatchesTheFirstFourGeneratorsUpToSign) {
  const auto ring = family_ring(3, RationalField{});
  const auto golden = io::read_lines(kGolden / "worked_example_equations.txt");
  ASSERT_EQ(golden.size(), 4u);
  const auto& listed = toric::testing::worked_example_generators();
  for (const auto& line : golden) {
    const auto g = Polynomial<RationalField>::parse(ring, line);
    bool found = false;
    for (std::size_t k = 0; k < 4; ++k) {
      found |= toric::testing::equal_up_to_sign(g, Polynomial<RationalField>::parse(ring, listed[k]));
    }
    EXPECT_TRUE(found) << line;
  }
}

TEST(CliIdeal, WorkedExampleAgainstGolden) {
  auto r = run({"ideal", worked_example_file(), "--golden", (kGolden / "worked_example_ideal_Q.txt").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "minimal generators (8)"));
  EXPECT_TRUE(contains(r.err, "match"));

  const auto ring = family_ring(3, RationalField{});
  const auto golden = io::read_lines(kGolden / "worked_example_ideal_Q.txt");
  ASSERT_EQ(golden.size(), 8u);
  for (const auto& line : golden) {
    const auto g = Polynomial<RationalField>::parse(ring, line);
    bool found = false;
    for (const auto& e : toric::testing::worked_example_generators()) {
      found |= toric::testing::equal_up_to_sign(g, Polynomial<RationalField>::parse(ring, e));
    }
    EXPECT_TRUE(found) << line;
  }
}

TEST(CliIdeal, GoldenMismatchAndBless) {
  const auto stale = scratch("stale.txt", "y1 - x1\n");
  auto r = run({"ideal", worked_example_file(), "--golden", stale.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "MISMATCH"));
  EXPECT_EQ(run({"ideal", worked_example_file(), "--golden", stale.string(), "--bless"}).code, 0);
  EXPECT_EQ(run({"ideal", worked_example_file(), "--golden", stale.string()}).code, 0);
  EXPECT_EQ(run({"ideal", worked_example_file(), "--bless"}).code, 2);  // --bless needs --golden
}

TEST(CliIdeal, PrimeFieldReportsTheReductionCheck) {
  auto r = run({"ideal", worked_example_file(), "--field", "F3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "reduction check: the basis over Q reduced mod 3 equals the basis over F3"));
  auto j = run({"ideal", worked_example_file(), "--field", "F2", "--json"});
  auto doc = io::json::parse(j.out);
  EXPECT_TRUE(doc["reduction_check"]["matches"].get<bool>());
  EXPECT_EQ(doc["reduction_check"]["prime"], 2);
  EXPECT_FALSE(run({"ideal", worked_example_file(), "--json"}).out.empty());
  EXPECT_FALSE(io::json::parse(run({"ideal", worked_example_file(), "--json"}).out).contains("reduction_check"));
}

TEST(CliIdeal, IdentityMatrixAndJson) {
  auto r = run({"ideal", (kData / "identity_matrix.json").string(), "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto doc = io::json::parse(r.out);
  EXPECT_TRUE(doc["generators"].empty());
  EXPECT_TRUE(doc["lattice_basis"].empty());
}

TEST(CliIdeal, PairBudgetExitsThree) {
  ::setenv(toricset::cli::kPairBudgetEnv, "2", 1);
  auto r = run({"ideal", worked_example_file()});
  ::unsetenv(toricset::cli::kPairBudgetEnv);
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.err, "lattice basis: 3"));
  EXPECT_TRUE(contains(r.err, "budget"));
}

TEST(CliVerify, FullSuitePasses) {
  auto r = run({"verify", worked_example_file(), "--golden", (kGolden / "worked_example_verify.txt").string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "PASS radical field=Q"));
  EXPECT_TRUE(contains(r.out, "PASS radical field=F2"));
  EXPECT_TRUE(contains(r.out, "PASS points q=5"));
  EXPECT_TRUE(contains(r.out, "PASS lift-audit q=7"));
  EXPECT_TRUE(contains(r.out, "verify: PASS"));
}

TEST(CliVerify, DroppingGIsReportedAsExpectedFailure) {
  auto r = run({"verify", worked_example_file(), "--drop-equation", "G"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "FAIL radical field=Q equations=F1,F2,F"));
  EXPECT_TRUE(contains(r.out, "expected"));
  EXPECT_EQ(run({"verify", worked_example_file(), "--drop-equation", "H"}).code, 2);
  EXPECT_EQ(run({"verify", worked_example_file(), "--drop-equation", "G", "--check", "lift"}).code, 2);
}

TEST(CliVerify, SamplingIsDeterministic) {
  std::vector<std::string> args{"verify", worked_example_file(), "--check", "points", "--q", "101", "--sample", "10000",
                                "--seed", "42", "--json"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto doc = io::json::parse(a.out);
  EXPECT_EQ(doc["checks"][0]["seed"], 42);
  EXPECT_EQ(doc["checks"][0]["points_examined"], 10000);
}

TEST(CliVerify, PointBudgetFromEnvironment) {
  ::setenv(toricset::cli::kPointBudgetEnv, "100", 1);
  auto r = run({"verify", worked_example_file(), "--check", "points", "--q", "5"});
  ::setenv(toricset::cli::kPointBudgetEnv, "zero", 1);
  auto bad = run({"verify", worked_example_file(), "--check", "points", "--q", "2"});
  ::unsetenv(toricset::cli::kPointBudgetEnv);
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(bad.code, 2);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({"verify", worked_example_file(), "--exhaustive", "--sample", "5"}).code, 2);
  EXPECT_EQ(run({"verify", worked_example_file(), "--q", "4"}).code, 2);
  EXPECT_EQ(run({"verify", worked_example_file(), "--check", "magic"}).code, 2);
  EXPECT_EQ(run({"verify", worked_example_file(), "--sample", "0", "--check", "points"}).code, 2);
}

TEST(CliVerify, OutputFile) {
  const auto target = fs::temp_directory_path() / "toricset_cli_test" / "report.json";
  fs::remove(target);
  auto r = run({"verify", worked_example_file(), "--check", "radical", "--field", "Q", "--json", "-o", target.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  auto doc = io::read_json(target);
  EXPECT_EQ(doc["verdict"], "PASS");
}
