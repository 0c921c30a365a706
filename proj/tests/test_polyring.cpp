#include "toric/family.hpp"
#include "toric/polyring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

using QPoly = Polynomial<RationalField>;
using FPoly = Polynomial<PrimeField>;

RingPtr<RationalField> q_ring() { return family_ring(3, RationalField{}); }

QPoly P(const std::string& text) { return QPoly::parse(q_ring(), text); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Exponent> e(0, 4);
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, e(rng));
  return m;
}

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(P("x1 + y1") + P("-x1"), P("y1"));
  EXPECT_EQ(P("x1 - y1") * P("x1 + y1"), P("x1^2 - y1^2"));
  EXPECT_TRUE((P("0") * P("x1^3 + 2*y2")).is_zero());
  EXPECT_TRUE(P("x1 - x1").is_zero());
  EXPECT_EQ(P("x1 + x1"), P("2*x1"));
}

TEST(Polynomial, ParseRoundTrip) {
  for (std::string text : {"y1^2 - x1^3*x3^2", "3/2*x1 - 1", "-x1 + x2*y3^4 + 7", "0"}) {
    EXPECT_EQ(P(text), P(P(text).to_string())) << text;
  }
  EXPECT_THROW(P("x9"), std::invalid_argument);
  EXPECT_THROW(P("x1 +"), std::invalid_argument);
}

TEST(Polynomial, TermOrdersRenderDifferently) {
  const auto p = P("x1 + y1^2");
  EXPECT_EQ(p.to_string(TermOrder::grevlex()), "y1^2 + x1");
  EXPECT_EQ(p.to_string(TermOrder::lex()), "x1 + y1^2");
}

TEST(BinomialFromVector, SignConvention) {
  auto ring = q_ring();
  auto g = binomial_from_vector(ring, BinomialVector{ints({0, 0, -2}), ints({1, 1, -1})});
  EXPECT_EQ(g, P("y1*y2 - x3^2*y3"));
  auto f1 = binomial_from_vector(ring, BinomialVector{ints({-3, 0, -2}), ints({2, 0, 0})});
  EXPECT_EQ(f1, P("y1^2 - x1^3*x3^2"));
  auto unit = binomial_from_vector(ring, BinomialVector{ints({1, 0, 0}), ints({0, 0, 0})});
  EXPECT_EQ(unit, P("x1 - 1"));
  EXPECT_THROW(binomial_from_vector(ring, BinomialVector{ints({0, 0, 0}), ints({0, 0, 0})}), std::invalid_argument);
}

TEST(BinomialToVector, InvertsUpToSign) {
  auto ring = q_ring();
  BinomialVector v{ints({-3, 0, -2}), ints({2, 0, 0})};
  auto back = binomial_to_vector(binomial_from_vector(ring, v), 3);
  BinomialVector neg{ints({3, 0, 2}), ints({-2, 0, 0})};
  EXPECT_TRUE(back == v || back == neg);
}

TEST(Evaluate, FiniteFieldPoints) {
  PrimeField f5(5);
  auto ring = family_ring(3, f5);
  auto f1 = FPoly::parse(ring, "y1^2 - x1^3*x3^2");
  std::vector<FieldElement> ones(6, f5.element(1));
  EXPECT_EQ(evaluate(f1, ones).value(), 0u);
  std::vector<FieldElement> pt;
  for (long v : {4, 1, 1, 2, 1, 1}) pt.push_back(f5.element(v));
  EXPECT_EQ(evaluate(f1, pt).value(), 0u);
  std::vector<FieldElement> origin(6, f5.element(0));
  EXPECT_EQ(evaluate(FPoly::parse(ring, "x1 - 1"), origin).value(), 4u);
}

TEST(Divide, ReferenceCases) {
  const auto lex = TermOrder::lex();
  std::vector<QPoly> by_x1{P("x1")};
  auto a = divide(P("x1^2"), std::span<const QPoly>(by_x1), lex);
  EXPECT_EQ(a.quotients[0], P("x1"));
  EXPECT_TRUE(a.remainder.is_zero());
  auto b = divide(P("x1*y1 + 1"), std::span<const QPoly>(by_x1), lex);
  EXPECT_EQ(b.remainder, P("1"));
  std::vector<QPoly> by_f{P("y3^6 - x1^9*x2^10")};
  EXPECT_TRUE(divide(by_f[0], std::span<const QPoly>(by_f), TermOrder::grevlex()).remainder.is_zero());
}

TEST(Divide, FirstDivisorWins) {
  std::vector<QPoly> divisors{P("x1"), P("x1*y1")};
  auto r = divide(P("x1*y1"), std::span<const QPoly>(divisors), TermOrder::grevlex());
  EXPECT_EQ(r.quotients[0], P("y1"));
  EXPECT_TRUE(r.quotients[1].is_zero());
}

TEST(Divide, IdentityHoldsOnRandomInputs) {
  std::mt19937_64 rng(3);
  auto ring = q_ring();
  std::uniform_int_distribution<long> coeff(-5, 5);
  auto random_poly = [&](int terms) {
    std::vector<QPoly::Term> ts;
    for (int k = 0; k < terms; ++k) ts.push_back({random_monomial(rng, 6), Rat(coeff(rng))});
    return QPoly::from_terms(ring, ts);
  };
  for (const auto& order : {TermOrder::lex(), TermOrder::grevlex(), TermOrder::elimination_first(2, 6)}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto p = random_poly(6);
      std::vector<QPoly> ds;
      for (int k = 0; k < 3; ++k) {
        auto d = random_poly(2);
        if (!d.is_zero()) ds.push_back(d.with_order(order));
      }
      auto res = divide(p, std::span<const QPoly>(ds), order);
      QPoly sum = res.remainder;
      for (std::size_t k = 0; k < ds.size(); ++k) sum = sum + res.quotients[k] * ds[k];
      EXPECT_EQ(sum, p);
      for (const auto& t : res.remainder.terms()) {
        for (const auto& d : ds) EXPECT_FALSE(d.with_order(order).leading_monomial().divides(t.monomial));
      }
    }
  }
}

TEST(TermOrder, MultiplicativeAndWellFounded) {
  std::mt19937_64 rng(5);
  const Monomial one(6);
  for (const auto& order : {TermOrder::lex(), TermOrder::grevlex(), TermOrder::elimination_first(1, 6),
                            TermOrder::elimination({0, 1, 0, 1, 0, 0})}) {
    for (int k = 0; k < 500; ++k) {
      auto a = random_monomial(rng, 6), b = random_monomial(rng, 6), m = random_monomial(rng, 6);
      EXPECT_LE(order.compare(one, a), 0);
      const int ab = order.compare(a, b);
      EXPECT_EQ(order.compare(b, a), -ab);
      EXPECT_EQ(ab == 0, a == b);
      if (ab < 0) {
        EXPECT_LT(order.compare(a * m, b * m), 0) << order.name();
      }
    }
  }
}

TEST(TermOrder, EliminationBlockDominates) {
  auto order = TermOrder::elimination_first(1, 3);
  EXPECT_GT(order.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}), 0);
  EXPECT_GT(order.compare(Monomial{1, 1, 0}, Monomial{1, 0, 0}), 0);
}

TEST(ReduceMod, MapsCoefficients) {
  PrimeField f5(5);
  auto target = family_ring(3, f5);
  auto p = reduce_mod(P("3/2*x1 - 7"), target);
  EXPECT_EQ(p, FPoly::parse(target, "4*x1 + 3"));
}

TEST(Ring, ExtendMakesNamesUnique) {
  auto ring = make_ring(RationalField{}, {"t", "x"});
  auto bigger = extend_ring(ring, "t");
  ASSERT_EQ(bigger->nvars(), 3u);
  EXPECT_NE(bigger->names()[2], "t");
  EXPECT_EQ(bigger->index_of("x"), 1u);
}
