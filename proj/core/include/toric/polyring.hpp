#pragma once

// Multivariate polynomials over Q or F_p with dense exponent vectors.
//
// Variables are ordered x1 > x2 > ... > xn > y1 > ... > yn, followed by any
// auxiliary variables appended for elimination. Polynomial templates are
// instantiated for RationalField and PrimeField only.

#include "toric/exactmath.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::span<const Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e);
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  bool divides(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial extended(std::size_t extra) const;
  Monomial truncated(std::size_t nvars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  boost::container::small_vector<Exponent, 12> exps_;
  std::uint64_t degree_ = 0;
};

/// Lexicographic comparison of raw exponent vectors, used for tie-breaks.
bool lex_less(const Monomial& a, const Monomial& b);

class TermOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static TermOrder lex() { return TermOrder(Kind::lex, {}); }
  static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}); }
  /// Block order: variables with high[i] != 0 form a block that dominates the
  /// rest; grevlex inside each block. Variables past high.size() are low.
  static TermOrder elimination(std::vector<char> high);
  /// Block order with the first k of nvars variables greatest.
  static TermOrder elimination_first(std::size_t k, std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<char>& high() const { return high_; }
  bool is_high(std::size_t var) const { return var < high_.size() && high_[var] != 0; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  std::string name() const;

  friend auto operator<=>(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::vector<char> high) : kind_(kind), high_(std::move(high)) {}

  Kind kind_;
  std::vector<char> high_;
};

template <class K>
class Ring {
 public:
  Ring(K field, std::vector<std::string> names);

  const K& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.field_ == b.field_ && a.names_ == b.names_; }

 private:
  K field_;
  std::vector<std::string> names_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> names);

/// The 2n-variable ring with variables x1..xn, y1..yn.
template <class K>
RingPtr<K> family_ring(std::size_t n, K field);

/// Same field, one more variable appended last. The name is made unique.
template <class K>
RingPtr<K> extend_ring(const RingPtr<K>& ring, std::string name);

template <class K>
class Polynomial {
 public:
  using Element = typename K::Element;

  struct Term {
    Monomial monomial;
    Element coeff;
  };

  explicit Polynomial(RingPtr<K> ring, TermOrder order = TermOrder::grevlex());

  static Polynomial constant(RingPtr<K> ring, const Element& c);
  static Polynomial variable(RingPtr<K> ring, std::size_t index);
  static Polynomial term(RingPtr<K> ring, const Element& c, Monomial m);
  /// Combines like terms, drops zeros and sorts under `order`.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term> terms, TermOrder order = TermOrder::grevlex());
  /// Inverse of to_string(); variable names resolve against the ring.
  /// Throws std::invalid_argument on malformed text.
  static Polynomial parse(RingPtr<K> ring, std::string_view text);

  const RingPtr<K>& ring_ptr() const { return ring_; }
  const Ring<K>& ring() const { return *ring_; }
  const K& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const TermOrder& order() const { return order_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_binomial() const { return terms_.size() == 2; }
  std::uint64_t total_degree() const;
  bool involves(std::size_t var) const;

  /// Leading data under order(); the polynomial must be nonzero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Element& leading_coeff() const { return leading_term().coeff; }

  /// Same polynomial with terms re-sorted under `order`.
  Polynomial with_order(const TermOrder& order) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Element& c) const;
  /// this * c * m
  Polynomial mul_term(const Element& c, const Monomial& m) const;
  /// this + c * m * other, the reduction workhorse.
  Polynomial add_multiple(const Element& c, const Monomial& m, const Polynomial& other) const;
  Polynomial monic() const;

  Element evaluate(std::span<const Element> point) const;

  /// Copy into a ring with extra trailing variables (exponent zero).
  Polynomial embedded(const RingPtr<K>& bigger) const;
  /// Copy into a ring with fewer trailing variables; the dropped ones must be unused.
  Polynomial restricted(const RingPtr<K>& smaller) const;

  std::string to_string() const { return to_string(order_); }
  std::string to_string(const TermOrder& order) const;

  /// Same ring and same set of terms (independent of term order).
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.equals(b); }

 private:
  bool equals(const Polynomial& other) const;
  void check_ring(const Polynomial& other) const;
  void sort_terms();

  RingPtr<K> ring_;
  TermOrder order_;
  std::vector<Term> terms_;  // strictly decreasing under order_
};

/// Exponent vector (alpha_1..alpha_n, beta_1..beta_n) of a relation between
/// the semigroup generators. Entries may be negative.
struct BinomialVector {
  std::vector<Int> alpha;
  std::vector<Int> beta;

  std::size_t n() const { return alpha.size(); }
  std::vector<Int> entries() const;
  bool is_zero() const;
  static BinomialVector from_entries(std::span<const Int> entries);

  friend bool operator==(const BinomialVector&, const BinomialVector&) = default;
};

/// x^{v+} y^{v+} - x^{v-} y^{v-} over the first 2n variables of `ring`.
/// Throws std::invalid_argument for the zero vector or when the ring is too small.
template <class K>
Polynomial<K> binomial_from_vector(const RingPtr<K>& ring, const BinomialVector& v);
/// Same for a flat exponent vector over the first entries.size() variables.
template <class K>
Polynomial<K> binomial_from_entries(const RingPtr<K>& ring, std::span<const Int> entries);

/// Exponent vector of a binomial m1 - m2 (m1 - m2 as entries), the inverse of
/// binomial_from_vector up to sign. Requires exactly two terms.
template <class K>
BinomialVector binomial_to_vector(const Polynomial<K>& p, std::size_t n);

template <class K>
struct DivisionResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
};

/// Multivariate division with remainder. At each step the first divisor (in
/// list order) whose leading monomial divides the current lead term is used;
/// otherwise that term moves to the remainder.
template <class K>
DivisionResult<K> divide(const Polynomial<K>& p, std::span<const Polynomial<K>> divisors, const TermOrder& order);

/// Evaluation at a point of F_p^N given as field elements.
Polynomial<PrimeField>::Element evaluate_at(const Polynomial<PrimeField>& p, std::span<const FieldElement> point);
FieldElement evaluate(const Polynomial<PrimeField>& p, std::span<const FieldElement> point);

/// Coefficient-wise image of a rational polynomial in F_p; denominators must
/// be invertible modulo p.
Polynomial<PrimeField> reduce_mod(const Polynomial<RationalField>& p, const RingPtr<PrimeField>& target);

extern template class Ring<RationalField>;
extern template class Ring<PrimeField>;
extern template class Polynomial<RationalField>;
extern template class Polynomial<PrimeField>;

}  // namespace toric
