// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "random_instances.hpp"
#include "support.hpp"
#include "toric/toricideal.hpp"
#include "toric/verify.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace toric;
using namespace toric::testing;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 for none
  std::function<Outcome()> check;
};

Outcome ideal_reproduction() {
  const auto p = FamilyParams::worked_example();
  auto result = toric_ideal(p, RationalField{});
  const auto ring = result.ideal.ring_ptr();
  const auto eight = parse_all(ring, worked_example_generators());
  const Ideal<RationalField> listed(ring, eight);
  const bool equal = ideal_equal(result.ideal, listed);
  const bool minimal = verify_minimal_generation<RationalField>(eight, result.ideal);
  std::ostringstream d;
  d << "ideal_equal=" << equal << " minimal=" << minimal << " basis_size=" << result.certificate.final_basis_size;
  return {equal && minimal, d.str()};
}

Outcome equation_construction() {
  const auto p = FamilyParams::worked_example();
  const auto ring = family_ring(3, RationalField{});
  auto P = [&](const char* s) { return Polynomial<RationalField>::parse(ring, s); };
  const bool f1 = build_fi(ring, p, 1) == P("y1^2 - x1^3*x3^2");
  const bool f2 = build_fi(ring, p, 2) == P("y2^3 - x2^5*x3^3");
  const bool f = build_f(ring, p) == P("y3^6 - x1^9*x2^10");
  const bool g = equal_up_to_sign(build_g(ring, p), P("x3^2*y3 - y1*y2"));
  std::ostringstream d;
  d << "F1=" << f1 << " F2=" << f2 << " F=" << f << " G=" << g << " (G = " << build_g(ring, p).to_string() << ")";
  return {f1 && f2 && f && g, d.str()};
}

template <class K>
bool members_over(const K& field) {
  const auto p = FamilyParams::worked_example();
  auto result = toric_ideal(p, field);
  const auto all = equations(result.ideal.ring_ptr(), p).all();
  return std::all_of(all.begin(), all.end(), [&](const auto& e) { return ideal_member(e, result.ideal); });
}

Outcome membership() {
  std::ostringstream d;
  bool ok = members_over(RationalField{});
  d << "Q=" << ok;
  for (std::uint64_t q : {2, 3, 5, 7}) {
    const bool r = members_over(PrimeField(q));
    d << " F" << q << "=" << r;
    ok &= r;
  }
  return {ok, d.str()};
}

Outcome radical_form() {
  const auto p = FamilyParams::worked_example();
  std::ostringstream d;
  bool ok = true;
  auto record = [&](const RadicalReport& r) {
    std::size_t yes = 0;
    for (const auto& e : r.entries) yes += e.in_radical;
    d << r.field << "=" << yes << "/" << r.entries.size() << " ";
    ok &= r.all_true();
  };
  record(radical_certificates(p, RationalField{}));
  for (std::uint64_t q : {2, 3, 5}) record(radical_certificates(p, PrimeField(q)));
  return {ok, d.str()};
}

Outcome point_form() {
  const auto p = FamilyParams::worked_example();
  std::ostringstream d;
  bool ok = true;
  const std::uint64_t expected_points[] = {64, 729, 15625};
  int k = 0;
  for (std::uint64_t q : {2, 3, 5}) {
    auto r = point_set_equality(p, q);
    ok &= r.passed() && r.points_examined == expected_points[k++] && r.count_equations == r.count_ideal;
    d << "q=" << q << ":" << r.points_examined << " pts/" << r.count_equations << " sols/" << r.mismatch_count
      << " mism ";
  }
  return {ok, d.str()};
}

Outcome lift_audit() {
  const auto p = FamilyParams::worked_example();
  std::ostringstream d;
  bool ok = true;
  for (std::uint64_t q : {7, 13}) {
    auto s = exhaustive_lift_audit(p, q);
    ok &= s.passed();
    d << "q=" << q << ": " << s.solutions << " sols, " << s.lifted << " lifted, " << s.needs_extension
      << " need extension (" << s.needs_extension_verified << " verified), " << s.failures << " failures, "
      << s.forward_failures << " forward failures; ";
  }
  return {ok, d.str()};
}

Outcome non_redundancy() {
  const auto p = FamilyParams::worked_example();
  std::ostringstream d;
  bool ok = true;
  for (const auto& name : equation_names(p.n)) {
    std::vector<std::string> drop{name};
    auto r = radical_certificates(p, RationalField{}, drop);
    std::size_t no = 0;
    for (const auto& e : r.entries) no += !e.in_radical;
    ok &= no > 0;
    d << "-" << name << ":" << no << " false ";
  }
  return {ok, d.str()};
}

Outcome property_suite() {
  std::mt19937_64 rng(20240501);
  PrimeField f11(11);
  std::uniform_int_distribution<long> coord(0, 10);
  const int families = 30;
  int n3 = 0, n4 = 0;
  for (int k = 0; k < families; ++k) {
    const auto p = random_valid_family(rng, 7);
    (p.n == 3 ? n3 : n4)++;
    if (!validate(p).ok()) return {false, "sampled family failed validation"};
    for (const auto& v : equation_vectors(p)) {
      if (!check_relation(v, p)) return {false, "equation vector violates the relation"};
    }
    if (codim(p) != 2 * p.n - rank(exponent_matrix(p))) return {false, "codim mismatch"};
    const auto eqs = equations(family_ring(p.n, f11), p).all();
    for (int s = 0; s < 100; ++s) {
      std::vector<FieldElement> u;
      for (std::size_t i = 0; i < p.n; ++i) u.push_back(f11.element(coord(rng)));
      const auto w = phi(p, u);
      for (const auto& e : eqs) {
        if (!evaluate(e, w).is_zero()) return {false, "forward inclusion failed"};
      }
    }
  }
  std::ostringstream d;
  d << families << " families (n=3: " << n3 << ", n=4: " << n4 << "), 100 points each over F11";
  return {n3 > 0 && n4 > 0, d.str()};
}

Outcome infrastructure() {
  std::mt19937_64 rng(777);
  const int instances = 50;
  for (int k = 0; k < instances; ++k) {
    const auto m = random_matrix(rng);
    const auto r = hnf(m);
    const Int det = determinant(r.u);
    if (!(m * r.u == r.h) || !(det == 1 || det == -1)) return {false, "HNF postcondition failed on " + m.to_string()};
  }
  auto qring = make_ring(RationalField{}, {"a", "b", "c", "d"});
  for (int k = 0; k < instances; ++k) {
    auto gens = random_generators(rng, qring);
    const auto order = k % 2 ? TermOrder::grevlex() : TermOrder::lex();
    const auto base = buchberger<RationalField>(gens, order);
    std::shuffle(gens.begin(), gens.end(), rng);
    if (buchberger<RationalField>(gens, order) != base) return {false, "reduced basis depends on generator order"};
  }
  auto fring = make_ring(PrimeField(101), {"a", "b", "c", "d"});
  const auto product = variable_product(fring);
  for (int k = 0; k < instances; ++k) {
    Ideal<PrimeField> ideal(fring, random_binomials(rng, fring));
    const auto once = saturate(ideal, product);
    if (!ideal_equal(once, saturate(once, product))) return {false, "saturation not idempotent"};
  }
  return {true, "50 HNF, 50 shuffled Groebner, 50 saturation instances"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example ideal reproduction", 10, ideal_reproduction},
      {2, "equation construction", 0, equation_construction},
      {3, "equations are members of I(V) over Q, F2, F3, F5, F7", 0, membership},
      {4, "radical certificates over Q, F2, F3, F5", 60, radical_form},
      {5, "exhaustive point-set equality for q = 2, 3, 5", 5, point_form},
      {6, "exhaustive lift audit for q = 7, 13", 30, lift_audit},
      {7, "non-redundancy of the equation set", 0, non_redundancy},
      {8, "random family property suite", 60, property_suite},
      {9, "HNF, Groebner uniqueness, saturation idempotence", 0, infrastructure},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.passed = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(c.time_limit)) + " s limit]";
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  (" << std::fixed
              << std::setprecision(3) << secs << " s)  " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
