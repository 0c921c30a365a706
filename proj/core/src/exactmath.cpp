#include "toric/exactmath.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <stdexcept>

namespace toric {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncating
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::vector<PrimePower> factorize(const Int& a) {
  if (a <= 0) throw std::domain_error("factorize: argument must be positive");
  std::vector<PrimePower> out;
  Int rest = a;
  auto strip = [&](const Int& p) {
    unsigned m = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ++m;
    }
    if (m > 0) out.push_back({p, m});
  };
  strip(Int(2));
  for (Int p = 3; p * p <= rest; p += 2) strip(p);
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  auto [g, s, t] = ext_gcd(mod_floor(a, m), m);
  if (g != 1) return std::nullopt;
  return mod_floor(s, m);
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

std::uint64_t to_uint64(const Int& v) {
  if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("integer out of unsigned range: " + v.get_str());
  return v.get_ui();
}

// ---------------------------------------------------------------------------
// PrimeField

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t find_generator(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> prime_factors;
  for (const auto& pp : factorize(Int(static_cast<unsigned long>(p - 1)))) {
    prime_factors.push_back(pp.prime.get_ui());
  }
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(prime_factors.begin(), prime_factors.end(),
                          [&](std::uint64_t q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
  throw std::logic_error("no generator found");
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) {
  if (p > kMaxModulus) throw std::invalid_argument("prime modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  auto d = std::make_shared<Data>();
  d->p = p;
  d->generator = find_generator(p);
  if (p <= kTableLimit) {
    d->log.assign(p, 0);
    d->exp.assign(p - 1, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < p; ++k) {
      d->exp[k] = static_cast<std::uint32_t>(x);
      d->log[x] = static_cast<std::uint32_t>(k);
      x = x * d->generator % p;
    }
  }
  data_ = std::move(d);
}

PrimeField::PrimeField(const Int& p) : PrimeField(to_uint64(p)) {}

PrimeField::Element PrimeField::from_int(const Int& v) const {
  return mod_floor(v, Int(static_cast<unsigned long>(data_->p))).get_ui();
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = v % p;
  return static_cast<Element>(r < 0 ? r + p : r);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  if (has_tables()) {
    auto k = data_->log[a];
    return data_->exp[k == 0 ? 0 : (data_->p - 1) - k];
  }
  return powmod(a, data_->p - 2, data_->p);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const { return powmod(a, e, data_->p); }

PrimeField::Element PrimeField::pow(Element a, const Int& e) const {
  if (e < 0) {
    if (a == 0) throw std::domain_error("zero raised to a negative power");
    return pow(inv(a), Int(-e));
  }
  if (a == 0) return e == 0 ? 1 : 0;
  // Fermat: reduce the exponent modulo p - 1 for nonzero bases.
  Int r = mod_floor(e, Int(static_cast<unsigned long>(data_->p - 1)));
  return powmod(a, r.get_ui(), data_->p);
}

std::int64_t PrimeField::signed_value(Element a) const {
  auto p = static_cast<std::int64_t>(data_->p);
  auto v = static_cast<std::int64_t>(a);
  return v > p / 2 ? v - p : v;
}

std::string PrimeField::to_string(Element a) const { return std::to_string(signed_value(a)); }

std::string PrimeField::name() const { return "F" + std::to_string(data_->p); }

std::uint64_t PrimeField::log(Element a) const {
  if (a == 0 || !has_tables()) throw std::domain_error("discrete log unavailable");
  return data_->log[a];
}

FieldElement PrimeField::element(std::int64_t v) const { return FieldElement(from_int(v), *this); }

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::uint64_t value, PrimeField field) : value_(value), field_(std::move(field)) {
  if (value_ >= field_.modulus()) value_ %= field_.modulus();
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*this, o);
  return {field_.add(value_, o.value_), field_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(*this, o);
  return {field_.sub(value_, o.value_), field_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*this, o);
  return {field_.mul(value_, o.value_), field_};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(*this, o);
  return {field_.div(value_, o.value_), field_};
}

FieldElement FieldElement::operator-() const { return {field_.neg(value_), field_}; }

FieldElement fp_pow(const FieldElement& a, const Int& e) {
  return {a.field().pow(a.value(), e), a.field()};
}

std::vector<FieldElement> fp_nth_roots(const FieldElement& a, const Int& r) {
  if (r < 1) throw std::domain_error("fp_nth_roots: r must be >= 1");
  const PrimeField& field = a.field();
  const std::uint64_t p = field.modulus();
  if (a.is_zero()) return {FieldElement(0, field)};

  std::vector<FieldElement> roots;
  if (field.has_tables()) {
    // x = g^k solves x^r = a iff r*k == log(a) (mod p-1).
    const std::uint64_t order = p - 1;
    const std::uint64_t rr = mod_floor(r, Int(static_cast<unsigned long>(order))).get_ui();
    const std::uint64_t la = field.log(a.value());
    const std::uint64_t g = std::gcd(rr, order);  // gcd(0, m) = m
    if (la % g != 0) return {};
    const std::uint64_t step = order / g;
    // One solution k0 of (rr/g) * k == la/g (mod step), then k0 + j*step.
    std::uint64_t k0 = 0;
    if (step > 1) {
      auto inv = mod_inverse(Int(static_cast<unsigned long>(rr / g)), Int(static_cast<unsigned long>(step)));
      k0 = Int(*inv * Int(static_cast<unsigned long>(la / g)) % Int(static_cast<unsigned long>(step))).get_ui();
    }
    for (std::uint64_t j = 0; j < g; ++j) {
      std::uint64_t k = (k0 + j * step) % order;
      roots.emplace_back(field.pow(field.generator(), k), field);
    }
  } else {
    if (p > PrimeField::kBruteForceLimit) throw std::range_error("field too large for root extraction: " + field.name());
    for (std::uint64_t x = 1; x < p; ++x) {
      if (field.pow(x, r) == a.value()) roots.emplace_back(x, field);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootsOfUnity roots_of_unity(const Int& r, const PrimeField& field) {
  if (r < 1) throw std::domain_error("roots_of_unity: r must be >= 1");
  const std::uint64_t order = field.modulus() - 1;
  const std::uint64_t m = gcd(r, Int(static_cast<unsigned long>(order))).get_ui();
  RootsOfUnity out;
  const std::uint64_t zeta = field.pow(field.generator(), order / m);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    out.roots.emplace_back(x, field);
    x = field.mul(x, zeta);
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.primitive_exists = (Int(static_cast<unsigned long>(m)) == r);
  out.generator = FieldElement(zeta, field);
  return out;
}

Rat RationalField::inv(const Rat& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero in Q");
  return 1 / a;
}

}  // namespace toric
