#include "support.hpp"
#include "toric/verify.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

std::vector<FieldElement> point(const PrimeField& f, std::initializer_list<long> vs) {
  std::vector<FieldElement> out;
  for (auto v : vs) out.push_back(f.element(v));
  return out;
}

}  // namespace

TEST(RadicalCertificates, FullEquationSetOverSeveralFields) {
  const auto p = FamilyParams::worked_example();
  EXPECT_TRUE(radical_certificates(p, RationalField{}).all_true());
  for (std::uint64_t q : {2, 3, 5}) {
    auto r = radical_certificates(p, PrimeField(q));
    EXPECT_TRUE(r.all_true()) << r.field;
    EXPECT_EQ(r.entries.size(), 9u);
    EXPECT_EQ(r.equations, (std::vector<std::string>{"F1", "F2", "F", "G"}));
  }
}

TEST(RadicalCertificates, DroppingGFails) {
  const auto p = FamilyParams::worked_example();
  std::vector<std::string> drop{"G"};
  auto r = radical_certificates(p, RationalField{}, drop);
  EXPECT_FALSE(r.all_true());
  EXPECT_EQ(r.equations, (std::vector<std::string>{"F1", "F2", "F"}));
  std::vector<std::string> bogus{"H"};
  EXPECT_THROW(radical_certificates(p, RationalField{}, bogus), std::invalid_argument);
}

TEST(RadicalCertificates, BudgetExhaustion) {
  const auto p = FamilyParams::worked_example();
  GroebnerOptions tiny;
  tiny.pair_budget = 40;
  // Computing I(V) itself exceeds the budget, which is not a per-generator event.
  EXPECT_THROW(radical_certificates(p, RationalField{}, {}, tiny), BudgetExceeded);
  // A Rabinowitsch run under the same budget throws; the report records that per generator.
  const auto ring = family_ring(3, RationalField{});
  const Ideal<RationalField> eqs(ring, equations(ring, p).all(), GroebnerOptions{.pair_budget = 100});
  const auto g = Polynomial<RationalField>::parse(ring, "x3*y3^3 - x1^3*x2^5*y1");
  EXPECT_THROW(radical_member(g, eqs), BudgetExceeded);
}

TEST(PointSet, ExhaustiveSmallFields) {
  const auto p = FamilyParams::worked_example();
  auto r2 = point_set_equality(p, 2);
  EXPECT_EQ(r2.points_examined, 64u);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(r2.count_equations, r2.count_ideal);
  EXPECT_FALSE(r2.seed.has_value());
  auto r5 = point_set_equality(p, 5);
  EXPECT_EQ(r5.points_examined, 15625u);
  EXPECT_TRUE(r5.mismatches.empty());
  EXPECT_GE(r5.count_equations, 1u);  // the origin
}

TEST(PointSet, ThreadCountDoesNotChangeTheReport) {
  const auto p = FamilyParams::worked_example();
  PointSetOptions one, four;
  one.threads = 1;
  four.threads = 4;
  one.drop = four.drop = {"G"};
  auto a = point_set_equality(p, 5, one);
  auto b = point_set_equality(p, 5, four);
  EXPECT_EQ(a.count_equations, b.count_equations);
  EXPECT_EQ(a.mismatch_count, b.mismatch_count);
  EXPECT_EQ(a.mismatches, b.mismatches);
  EXPECT_FALSE(a.passed());
  EXPECT_TRUE(std::is_sorted(a.mismatches.begin(), a.mismatches.end()));
}

TEST(PointSet, SamplingIsSeeded) {
  const auto p = FamilyParams::worked_example();
  PointSetOptions opts;
  opts.exhaustive = false;
  opts.samples = 2000;
  opts.seed = 42;
  auto a = point_set_equality(p, 101, opts);
  auto b = point_set_equality(p, 101, opts);
  EXPECT_EQ(a.seed, std::optional<std::uint64_t>(42));
  EXPECT_EQ(a.points_examined, 2000u);
  EXPECT_EQ(a.count_equations, b.count_equations);
  EXPECT_TRUE(a.passed());
}

TEST(PointSet, BudgetExceededSuggestsSampling) {
  const auto p = FamilyParams::worked_example();
  PointSetOptions opts;
  opts.budget = 1000;
  try {
    point_set_equality(p, 5, opts);
    FAIL() << "expected PointBudgetExceeded";
  } catch (const PointBudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("sample"), std::string::npos);
  }
}

TEST(LiftPoint, RoundTripOverF7) {
  const auto p = FamilyParams::worked_example();
  PrimeField f7(7);
  const auto u = point(f7, {2, 1, 3});
  const auto w = phi(p, u);
  auto out = lift_point(p, w);
  ASSERT_EQ(out.status, LiftStatus::lifted);
  EXPECT_EQ(phi(p, out.u), w);
  EXPECT_EQ(out.u, u);  // u_n != 0 and the d_i-th powers are injective here
}

TEST(LiftPoint, OriginAndOffVarietyPoints) {
  const auto p = FamilyParams::worked_example();
  PrimeField f5(5);
  auto origin = lift_point(p, point(f5, {0, 0, 0, 0, 0, 0}));
  ASSERT_EQ(origin.status, LiftStatus::lifted);
  for (const auto& x : origin.u) EXPECT_EQ(x.value(), 0u);
  EXPECT_EQ(lift_point(p, point(f5, {0, 0, 0, 1, 0, 0})).status, LiftStatus::not_on_variety);
  EXPECT_THROW(lift_point(p, point(f5, {0, 0, 0})), std::invalid_argument);
}

TEST(LiftPoint, NonresidueNeedsExtension) {
  const auto p = FamilyParams::worked_example();
  PrimeField f5(5);
  // Search the solutions for one whose x1 is a quadratic nonresidue mod 5.
  std::optional<std::vector<FieldElement>> found;
  const auto eqs = equations(family_ring(3, f5), p).all();
  for (std::uint64_t idx = 0; idx < 15625 && !found; ++idx) {
    std::vector<FieldElement> w;
    std::uint64_t rest = idx;
    for (int k = 0; k < 6; ++k, rest /= 5) w.emplace_back(rest % 5, f5);
    if (w[0].value() != 2 && w[0].value() != 3) continue;
    bool on = true;
    for (const auto& e : eqs) on &= evaluate(e, w).is_zero();
    if (on) found = w;
  }
  ASSERT_TRUE(found.has_value());
  auto out = lift_point(p, *found);
  EXPECT_EQ(out.status, LiftStatus::needs_extension);
  EXPECT_EQ(out.coordinate, std::optional<std::size_t>(1));
  EXPECT_EQ(out.root_degree, std::optional<std::int64_t>(2));
  EXPECT_FALSE(out.missing.empty());
}

TEST(LiftPoint, XnZeroStratum) {
  const auto p = FamilyParams::worked_example();
  PrimeField f7(7);
  // u_3 = 0 makes y1 = y2 = 0; the lift may differ from u but must round-trip.
  for (long a = 0; a < 7; ++a) {
    for (long b = 0; b < 7; ++b) {
      const auto w = phi(p, point(f7, {a, b, 0}));
      auto out = lift_point(p, w);
      ASSERT_EQ(out.status, LiftStatus::lifted);
      EXPECT_EQ(phi(p, out.u), w);
    }
  }
}

TEST(LiftPoint, NontrivialHExponentNeedsTheInverseTwist) {
  // h_1 = 3 is not 1 mod gcd(d_1, q - 1) = 5 here, so correcting y_n requires
  // the exponent s * h_1^{-1} rather than s.
  const FamilyParams p{3, {5, 2}, {2, 1}, {1, 1}, {3, 1}};
  ASSERT_TRUE(validate(p).ok());
  auto audit = exhaustive_lift_audit(p, 11);
  EXPECT_TRUE(audit.passed()) << audit.summary_line();
  EXPECT_GT(audit.lifted, 0u);
}

TEST(LiftAudit, WorkedExampleAtSevenAndThirteen) {
  const auto p = FamilyParams::worked_example();
  for (std::uint64_t q : {7, 13}) {
    auto s = exhaustive_lift_audit(p, q);
    EXPECT_TRUE(s.passed()) << s.summary_line();
    EXPECT_EQ(s.parameter_points, q * q * q);
    EXPECT_EQ(s.points_scanned, q * q * q * q * q * q);
    EXPECT_EQ(s.needs_extension, s.needs_extension_verified);
    EXPECT_EQ(s.lifted + s.needs_extension, s.solutions);
    EXPECT_EQ(s.summary_line().rfind("PASS", 0), 0u);
  }
}

TEST(LiftAudit, RandomFamilies) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 8; ++k) {
    const auto p = toric::testing::random_valid_family(rng, 5, 3);
    for (std::uint64_t q : {5, 7}) {
      auto s = exhaustive_lift_audit(p, q);
      EXPECT_TRUE(s.passed()) << s.summary_line();
    }
  }
}

TEST(CompiledSystem, AgreesWithDirectEvaluation) {
  const auto p = FamilyParams::worked_example();
  PrimeField f5(5);
  const auto eqs = equations(family_ring(3, f5), p).all();
  CompiledSystem system(eqs, f5);
  for (std::uint64_t idx = 0; idx < 15625; idx += 7) {
    std::vector<FieldElement> w;
    std::vector<std::uint32_t> raw;
    std::uint64_t rest = idx;
    for (int k = 0; k < 6; ++k, rest /= 5) {
      w.emplace_back(rest % 5, f5);
      raw.push_back(static_cast<std::uint32_t>(rest % 5));
    }
    bool direct = true;
    for (const auto& e : eqs) direct &= evaluate(e, w).is_zero();
    EXPECT_EQ(system.vanishes_at(raw), direct);
  }
}
