#pragma once

// Exact integer, rational and prime-field arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const Int& num, const Int& den);

Int gcd(const Int& a, const Int& b);

struct ExtGcd {
  Int g;
  Int s;
  Int t;
};

/// Iterative extended Euclid: s*a + t*b == g == gcd(a, b).
ExtGcd ext_gcd(const Int& a, const Int& b);

struct PrimePower {
  Int prime;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division. Primes come out strictly increasing; factorize(1) is empty.
/// Throws std::domain_error for a <= 0.
std::vector<PrimePower> factorize(const Int& a);

bool is_prime(std::uint64_t n);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<Int> mod_inverse(const Int& a, const Int& m);

/// Nonnegative residue of a modulo m > 0.
Int mod_floor(const Int& a, const Int& m);

/// Narrowing helpers; throw std::overflow_error when the value does not fit.
std::int64_t to_int64(const Int& v);
std::uint64_t to_uint64(const Int& v);

class FieldElement;

/// The field Z/pZ. Moduli are limited to p < 2^31 so that products of two
/// residues fit in 64 bits.
///
/// A multiplicative generator is always cached. For p <= kTableLimit the
/// discrete-log and power tables are built eagerly and nth-root extraction
/// goes through them; above that it brute-forces up to kBruteForceLimit and
/// refuses beyond.
class PrimeField {
 public:
  using Element = std::uint64_t;

  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;
  static constexpr std::uint64_t kTableLimit = 10'000;
  static constexpr std::uint64_t kBruteForceLimit = 10'000'000;

  explicit PrimeField(std::uint64_t p);
  explicit PrimeField(const Int& p);

  std::uint64_t modulus() const { return data_->p; }
  std::uint64_t characteristic() const { return data_->p; }
  std::uint64_t generator() const { return data_->generator; }
  bool has_tables() const { return !data_->log.empty(); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(const Int& v) const;
  Element from_int(std::int64_t v) const;
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= data_->p ? s - data_->p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + data_->p - b; }
  Element neg(Element a) const { return a == 0 ? 0 : data_->p - a; }
  Element mul(Element a, Element b) const { return (a * b) % data_->p; }
  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// Negative exponents invert; 0^e for e < 0 throws std::domain_error.
  Element pow(Element a, const Int& e) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t signed_value(Element a) const;
  std::string to_string(Element a) const;
  std::string name() const;

  /// Discrete log base generator(); requires a != 0 and has_tables().
  std::uint64_t log(Element a) const;

  FieldElement element(std::int64_t v) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.modulus() == b.modulus(); }

 private:
  struct Data {
    std::uint64_t p = 0;
    std::uint64_t generator = 0;
    std::vector<std::uint32_t> log;  // log[a] for a in [1, p)
    std::vector<std::uint32_t> exp;  // exp[k] = g^k for k in [0, p-1)
  };
  std::shared_ptr<const Data> data_;
};

/// A value of F_p bundled with its field.
class FieldElement {
 public:
  FieldElement(std::uint64_t value, PrimeField field);

  std::uint64_t value() const { return value_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.value_ < b.value_; }

 private:
  std::uint64_t value_;
  PrimeField field_;
};

/// Square-and-multiply in F_p; e < 0 requires a != 0.
FieldElement fp_pow(const FieldElement& a, const Int& e);

/// All x in F_p with x^r == a, ascending. Empty when a has no r-th root in F_p.
/// Throws std::domain_error for r < 1, std::range_error when the field has no
/// tables and p exceeds the brute-force limit.
std::vector<FieldElement> fp_nth_roots(const FieldElement& a, const Int& r);

struct RootsOfUnity {
  std::vector<FieldElement> roots;   // every x with x^r == 1, ascending
  bool primitive_exists = false;     // true iff r | p - 1
  std::optional<FieldElement> generator;  // generates the group `roots`
};

RootsOfUnity roots_of_unity(const Int& r, const PrimeField& field);

/// The field Q; elements are GMP rationals kept in lowest terms.
class RationalField {
 public:
  using Element = Rat;

  std::uint64_t characteristic() const { return 0; }
  Element zero() const { return Rat(0); }
  Element one() const { return Rat(1); }
  Element from_int(const Int& v) const { return Rat(v); }
  Element from_int(std::int64_t v) const { return Rat(static_cast<long>(v)); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace toric
