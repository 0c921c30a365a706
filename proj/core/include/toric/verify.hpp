#pragma once

// Machine checks that the n+1 binomials F_1..F_{n-1}, F, G cut out V
// set-theoretically: radical-membership certificates, F_q point-set
// comparison, and the constructive lifting of solutions back to parameters.

#include "toric/exactmath.hpp"
#include "toric/family.hpp"
#include "toric/groebner.hpp"
#include "toric/polyring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Equations named in `drop` ("F1", ..., "F", "G") are left out.
/// Throws std::invalid_argument for unknown names.
template <class K>
std::vector<Polynomial<K>> equation_subset(const EquationSet<K>& eqs, std::span<const std::string> drop);

struct RadicalEntry {
  std::string generator;
  bool in_radical = false;
  bool budget_exceeded = false;
};

struct RadicalReport {
  std::string field;
  std::vector<std::string> equations;  // names of the equations used
  std::vector<RadicalEntry> entries;   // one per generator of I(V)
  double seconds = 0.0;

  bool all_true() const;
  bool any_budget_exceeded() const;
};

/// For each generator g of I(V): is g in the radical of the equation ideal?
/// Budget exhaustion in a membership test is recorded per generator; exhaustion
/// while computing I(V) itself propagates as BudgetExceeded.
template <class K>
RadicalReport radical_certificates(const FamilyParams& params, const K& field, std::span<const std::string> drop = {},
                                   const GroebnerOptions& options = {});

/// Polynomials over F_q compiled to power-table lookups for fast evaluation.
class CompiledSystem {
 public:
  CompiledSystem(std::span<const Polynomial<PrimeField>> polys, const PrimeField& field);

  std::size_t nvars() const { return nvars_; }
  /// True iff every polynomial vanishes at `point` (values in [0, q)).
  bool vanishes_at(std::span<const std::uint32_t> point) const;

 private:
  struct Factor {
    std::uint32_t var;
    std::uint32_t table;
  };
  struct Term {
    std::uint64_t coeff;
    std::vector<Factor> factors;
  };
  std::uint64_t q_;
  std::size_t nvars_;
  std::vector<std::vector<Term>> polys_;
  std::vector<std::vector<std::uint32_t>> tables_;  // tables_[k][a] = a^{e_k}
};

class PointBudgetExceeded : public std::runtime_error {
 public:
  PointBudgetExceeded(std::uint64_t required, std::uint64_t budget);
};

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct PointSetOptions {
  bool exhaustive = true;
  std::uint64_t samples = 10'000;  // sample mode only
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDefaultPointBudget;
  std::size_t max_recorded = 1000;  // mismatching points kept in the report
  unsigned threads = 0;             // 0: hardware concurrency
  std::vector<std::string> drop;
};

struct PointSetReport {
  std::uint64_t q = 0;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;  // sample mode only
  std::uint64_t points_examined = 0;
  std::uint64_t count_equations = 0;
  std::uint64_t count_ideal = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<std::vector<std::uint64_t>> mismatches;  // ascending, at most max_recorded
  std::vector<std::string> equations;

  bool passed() const { return mismatch_count == 0; }
};

/// Compares the F_q-points of the equations with those of I(V).
/// Exhaustive mode throws PointBudgetExceeded when q^{2n} exceeds the budget.
PointSetReport point_set_equality(const FamilyParams& params, std::uint64_t q, const PointSetOptions& options = {});

enum class LiftStatus { lifted, needs_extension, not_on_variety };

std::string to_string(LiftStatus s);

struct LiftOutcome {
  LiftStatus status = LiftStatus::not_on_variety;
  std::vector<FieldElement> u;              // lifted only
  std::optional<std::size_t> coordinate;    // needs_extension: 1-based index i of x_i
  std::optional<std::int64_t> root_degree;  // needs_extension: d_i
  std::string missing;                      // human-readable description
};

/// Reconstructs u with phi(u) == w for a solution w of the equations,
/// following the root-of-unity corrections: pick d_i-th roots of x_i, fix
/// y_n with a product of roots of unity, then fix y_1..y_{n-1} when x_n != 0.
/// Throws std::invalid_argument for malformed points and std::logic_error if
/// a computed lift fails to reproduce w.
LiftOutcome lift_point(const FamilyParams& params, std::span<const FieldElement> w);

struct AuditOptions {
  std::uint64_t budget = kDefaultPointBudget;
  unsigned threads = 0;
  std::size_t max_details = 20;
};

struct AuditSummary {
  std::uint64_t q = 0;
  std::uint64_t points_scanned = 0;
  std::uint64_t solutions = 0;
  std::uint64_t lifted = 0;
  std::uint64_t needs_extension = 0;
  std::uint64_t needs_extension_verified = 0;  // missing root confirmed by brute force
  std::uint64_t failures = 0;
  std::uint64_t parameter_points = 0;
  std::uint64_t forward_failures = 0;
  std::vector<std::string> details;

  bool passed() const {
    return failures == 0 && forward_failures == 0 && needs_extension == needs_extension_verified &&
           lifted + needs_extension == solutions;
  }
  std::string summary_line() const;
};

/// Lifts every F_q-solution of the equations and pushes every parameter
/// point of F_q^n forward through phi.
AuditSummary exhaustive_lift_audit(const FamilyParams& params, std::uint64_t q, const AuditOptions& options = {});

}  // namespace toric
