#pragma once

// The toricset command line, kept in a library so tests can drive it
// in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toricset::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // invalid family, failed verification, golden mismatch
  kInputError = 2,
  kBudgetExceeded = 3,
};

/// Environment variables overriding the default budgets.
inline constexpr const char* kPointBudgetEnv = "TORICSET_POINT_BUDGET";
inline constexpr const char* kPairBudgetEnv = "TORICSET_PAIR_BUDGET";

struct RunConfig {
  std::string command;
  std::string input;
  std::vector<std::string> fields;  // "Q", "F7", "7"
  std::vector<std::uint64_t> qs;
  std::vector<std::string> checks;  // radical, points, lift
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::vector<std::string> drop;
  bool json = false;
  std::string golden;
  bool bless = false;
  std::string output;
  unsigned threads = 0;
  std::uint64_t point_budget = 0;
  std::uint64_t pair_budget = 0;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricset::cli
