#pragma once

// JSON input/output and golden files.

#include "toric/family.hpp"
#include "toric/lattice.hpp"
#include "toric/toricideal.hpp"
#include "toric/verify.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric::io {

using json = nlohmann::json;

/// Malformed input: unreadable files, bad JSON, schema violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input document: either family parameters
///   {"n": 3, "d": [2,3], "f": [3,5], "g": [1,1], "h": [3,5]}
/// or a bare exponent matrix {"matrix": [[...], ...]}.
struct Input {
  std::optional<FamilyParams> family;
  std::optional<IntMatrix> matrix;
};

json read_json(const std::filesystem::path& path);
/// Schema checks only; the family conditions are left to validate().
FamilyParams parse_family(const json& doc);
IntMatrix parse_matrix(const json& doc);
Input parse_input(const json& doc);
Input load_input(const std::filesystem::path& path);

json to_json(const FamilyParams& params);
json to_json(const ValidationReport& report);
json to_json(const BinomialVector& v);
json to_json(const SaturationCertificate& cert);
json to_json(const LatticeBasis& basis);
json to_json(const RadicalReport& report);
json to_json(const PointSetReport& report);
json to_json(const AuditSummary& summary);
json to_json(const LiftOutcome& outcome);
json to_json(const ReductionComparison& comparison);

/// [{"name", "polynomial", "alpha", "beta"}, ...] for F_1..F_{n-1}, F, G.
template <class K>
json equations_json(const FamilyParams& params, const EquationSet<K>& eqs);

template <class K>
json ideal_json(const ToricIdealResult<K>& result);

/// Text rendering with the positive term of a binomial first
/// ("y1^2 - x1^3*x3^2"); other polynomials use Polynomial::to_string.
template <class K>
std::string display(const Polynomial<K>& p);

/// Generators rendered one per line and sorted, so files compare textually.
template <class K>
std::vector<std::string> golden_lines(std::span<const Polynomial<K>> polys);

std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

struct GoldenDiff {
  std::vector<std::string> missing;     // in the golden file only
  std::vector<std::string> unexpected;  // in the computed output only

  bool empty() const { return missing.empty() && unexpected.empty(); }
};

GoldenDiff diff_lines(const std::vector<std::string>& golden, const std::vector<std::string>& actual);

}  // namespace toric::io
