#include "toric/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace toric {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += e;
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  q.degree_ = degree_ - divisor.degree_;
  return q;
}

Monomial Monomial::extended(std::size_t extra) const {
  Monomial m(*this);
  m.exps_.resize(exps_.size() + extra, 0);
  return m;
}

Monomial Monomial::truncated(std::size_t nvars) const {
  return Monomial(std::span<const Exponent>(exps_.data(), nvars));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (b.exps_[i] > std::numeric_limits<Exponent>::max() - a.exps_[i]) throw std::overflow_error("exponent overflow");
    m.exps_[i] += b.exps_[i];
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  m.degree_ = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder TermOrder::elimination(std::vector<char> high) { return TermOrder(Kind::block, std::move(high)); }

TermOrder TermOrder::elimination_first(std::size_t k, std::size_t nvars) {
  std::vector<char> high(nvars, 0);
  std::fill_n(high.begin(), std::min(k, nvars), 1);
  return elimination(std::move(high));
}

namespace {

// grevlex restricted to the variables selected by `in_block`.
template <class Pred>
int grevlex_compare(const Monomial& a, const Monomial& b, Pred in_block) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (in_block(i)) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!in_block(i)) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::block: {
      int c = grevlex_compare(a, b, [this](std::size_t i) { return is_high(i); });
      if (c != 0) return c;
      return grevlex_compare(a, b, [this](std::size_t i) { return !is_high(i); });
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::block: {
      std::string s = "block(";
      bool first = true;
      for (std::size_t i = 0; i < high_.size(); ++i) {
        if (!high_[i]) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
      }
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Ring

template <class K>
Ring<K>::Ring(K field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {}

template <class K>
std::optional<std::size_t> Ring<K>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> names) {
  return std::make_shared<const Ring<K>>(std::move(field), std::move(names));
}

template <class K>
RingPtr<K> family_ring(std::size_t n, K field) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return make_ring(std::move(field), std::move(names));
}

template <class K>
RingPtr<K> extend_ring(const RingPtr<K>& ring, std::string name) {
  std::string unique = name;
  for (int k = 0; ring->index_of(unique); ++k) unique = name + "_" + std::to_string(k);
  auto names = ring->names();
  names.push_back(unique);
  return make_ring(ring->field(), std::move(names));
}

// ---------------------------------------------------------------------------
// Polynomial

template <class K>
Polynomial<K>::Polynomial(RingPtr<K> ring, TermOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}

template <class K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, const Element& c) {
  Monomial one(ring->nvars());
  return term(std::move(ring), c, std::move(one));
}

template <class K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  auto one = ring->field().one();
  return term(std::move(ring), one, std::move(m));
}

template <class K>
Polynomial<K> Polynomial<K>::term(RingPtr<K> ring, const Element& c, Monomial m) {
  if (m.size() != ring->nvars()) throw std::invalid_argument("monomial length does not match ring");
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({std::move(m), c});
  return p;
}

template <class K>
void Polynomial<K>::sort_terms() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_.compare(a.monomial, b.monomial) > 0; });
}

template <class K>
Polynomial<K> Polynomial<K>::from_terms(RingPtr<K> ring, std::vector<Term> terms, TermOrder order) {
  Polynomial p(std::move(ring), std::move(order));
  for (const auto& t : terms) {
    if (t.monomial.size() != p.nvars()) throw std::invalid_argument("monomial length does not match ring");
  }
  p.terms_ = std::move(terms);
  p.sort_terms();
  const K& f = p.field();
  std::vector<Term> merged;
  merged.reserve(p.terms_.size());
  for (auto& t : p.terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = f.add(merged.back().coeff, t.coeff);
    } else {
      if (!merged.empty() && f.is_zero(merged.back().coeff)) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && f.is_zero(merged.back().coeff)) merged.pop_back();
  p.terms_ = std::move(merged);
  return p;
}

template <class K>
bool Polynomial<K>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

template <class K>
std::uint64_t Polynomial<K>::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

template <class K>
bool Polynomial<K>::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
}

template <class K>
const typename Polynomial<K>::Term& Polynomial<K>::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

template <class K>
Polynomial<K> Polynomial<K>::with_order(const TermOrder& order) const {
  Polynomial p(*this);
  if (p.order_ == order) return p;
  p.order_ = order;
  p.sort_terms();
  return p;
}

template <class K>
void Polynomial<K>::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) throw std::invalid_argument("ring mismatch");
}

template <class K>
Polynomial<K> Polynomial<K>::add_multiple(const Element& c, const Monomial& m, const Polynomial& other) const {
  check_ring(other);
  const K& f = field();
  const Polynomial& rhs = other.order_ == order_ ? other : other.with_order(order_);
  Polynomial out(ring_, order_);
  if (f.is_zero(c)) {
    out.terms_ = terms_;
    return out;
  }
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  const bool unit_monomial = m.is_one();
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end()) {
      out.terms_.push_back(*i++);
      continue;
    }
    Monomial mj = unit_monomial ? j->monomial : j->monomial * m;
    if (i == terms_.end()) {
      out.terms_.push_back({std::move(mj), f.mul(c, j->coeff)});
      ++j;
      continue;
    }
    int cmp = order_.compare(i->monomial, mj);
    if (cmp > 0) {
      out.terms_.push_back(*i++);
    } else if (cmp < 0) {
      out.terms_.push_back({std::move(mj), f.mul(c, j->coeff)});
      ++j;
    } else {
      auto s = f.add(i->coeff, f.mul(c, j->coeff));
      if (!f.is_zero(s)) out.terms_.push_back({std::move(mj), std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::operator+(const Polynomial& other) const {
  return add_multiple(field().one(), Monomial(nvars()), other);
}

template <class K>
Polynomial<K> Polynomial<K>::operator-(const Polynomial& other) const {
  return add_multiple(field().neg(field().one()), Monomial(nvars()), other);
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = field().neg(t.coeff);
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prod.push_back({a.monomial * b.monomial, field().mul(a.coeff, b.coeff)});
  }
  return from_terms(ring_, std::move(prod), order_);
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const Element& c) const {
  Polynomial p(ring_, order_);
  if (field().is_zero(c)) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff = field().mul(t.coeff, c);
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::mul_term(const Element& c, const Monomial& m) const {
  Polynomial p(ring_, order_);
  if (field().is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coeff()));
}

namespace {

template <class K>
typename K::Element power(const K& f, typename K::Element a, Exponent e) {
  auto r = f.one();
  while (e > 0) {
    if (e & 1u) r = f.mul(r, a);
    e >>= 1;
    if (e > 0) a = f.mul(a, a);
  }
  return r;
}

}  // namespace

template <class K>
typename K::Element Polynomial<K>::evaluate(std::span<const Element> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong dimension");
  const K& f = field();
  auto sum = f.zero();
  for (const auto& t : terms_) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < nvars() && !f.is_zero(v); ++i) {
      if (t.monomial[i] != 0) v = f.mul(v, power(f, point[i], t.monomial[i]));
    }
    sum = f.add(sum, v);
  }
  return sum;
}

template <class K>
Polynomial<K> Polynomial<K>::embedded(const RingPtr<K>& bigger) const {
  if (bigger->nvars() < nvars() || !(bigger->field() == field())) throw std::invalid_argument("cannot embed into ring");
  Polynomial p(bigger, order_);
  const std::size_t extra = bigger->nvars() - nvars();
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial.extended(extra), t.coeff});
  p.sort_terms();
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::restricted(const RingPtr<K>& smaller) const {
  if (smaller->nvars() > nvars() || !(smaller->field() == field())) throw std::invalid_argument("cannot restrict to ring");
  for (std::size_t v = smaller->nvars(); v < nvars(); ++v) {
    if (involves(v)) throw std::invalid_argument("polynomial involves dropped variable " + ring_->names()[v]);
  }
  Polynomial p(smaller, TermOrder::grevlex());
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial.truncated(smaller->nvars()), t.coeff});
  p.sort_terms();
  return p;
}

template <class K>
bool Polynomial<K>::equals(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  const Polynomial& rhs = other.order_ == order_ ? other : other.with_order(order_);
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (!(terms_[k].monomial == rhs.terms_[k].monomial)) return false;
    if (!field().equal(terms_[k].coeff, rhs.terms_[k].coeff)) return false;
  }
  return true;
}

// Text form: terms sorted by the order, e.g. "y1^2 - x1^3*x3^2" or "-3/2*x1 + 1".
template <class K>
std::string Polynomial<K>::to_string(const TermOrder& order) const {
  if (terms_.empty()) return "0";
  const Polynomial& p = order == order_ ? *this : with_order(order);
  const K& f = field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms_) {
    std::string c = f.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars(); ++i) {
      Exponent e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->names()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << c;
    } else if (c == "1") {
      out << mono;
    } else {
      out << c << "*" << mono;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what + " in '" +
                                std::string(s) + "'");
  }
  std::string_view digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  }
  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }
};

}  // namespace

template <class K>
Polynomial<K> Polynomial<K>::parse(RingPtr<K> ring, std::string_view text) {
  const K& f = ring->field();
  Cursor cur{text};
  std::vector<Term> terms;
  if (cur.done()) cur.fail("empty input");
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      negative = (c == '-');
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    Rat coeff(1);
    Monomial mono(ring->nvars());
    bool need_factor = true;
    while (need_factor) {
      char h = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(h))) {
        Int num(std::string(cur.digits()));
        Int den(1);
        if (cur.peek() == '/') {
          ++cur.pos;
          den = Int(std::string(cur.digits()));
          if (den == 0) cur.fail("zero denominator");
        }
        coeff *= make_rat(num, den);
      } else if (std::isalpha(static_cast<unsigned char>(h)) || h == '_') {
        auto name = cur.identifier();
        auto idx = ring->index_of(name);
        if (!idx) cur.fail("unknown variable '" + std::string(name) + "'");
        std::uint64_t e = 1;
        if (cur.peek() == '^') {
          ++cur.pos;
          auto d = cur.digits();
          auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), e);
          if (ec != std::errc() || e > std::numeric_limits<Exponent>::max()) cur.fail("bad exponent");
        }
        std::uint64_t total = mono[*idx] + e;
        if (total > std::numeric_limits<Exponent>::max()) cur.fail("exponent overflow");
        mono.set(*idx, static_cast<Exponent>(total));
      } else {
        cur.fail("expected coefficient or variable");
      }
      if (cur.peek() == '*') {
        ++cur.pos;
      } else {
        need_factor = false;
      }
    }
    if (negative) coeff = -coeff;
    Element value;
    if constexpr (std::is_same_v<K, RationalField>) {
      value = coeff;
    } else {
      value = f.div(f.from_int(Int(coeff.get_num())), f.from_int(Int(coeff.get_den())));
    }
    terms.push_back({std::move(mono), std::move(value)});
  }
  return from_terms(std::move(ring), std::move(terms));
}

// ---------------------------------------------------------------------------
// Binomials

std::vector<Int> BinomialVector::entries() const {
  std::vector<Int> e(alpha);
  e.insert(e.end(), beta.begin(), beta.end());
  return e;
}

bool BinomialVector::is_zero() const {
  auto nz = [](const Int& v) { return v != 0; };
  return std::none_of(alpha.begin(), alpha.end(), nz) && std::none_of(beta.begin(), beta.end(), nz);
}

BinomialVector BinomialVector::from_entries(std::span<const Int> entries) {
  if (entries.size() % 2 != 0) throw std::invalid_argument("binomial vector needs an even number of entries");
  const std::size_t n = entries.size() / 2;
  return {std::vector<Int>(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(n)),
          std::vector<Int>(entries.begin() + static_cast<std::ptrdiff_t>(n), entries.end())};
}

template <class K>
Polynomial<K> binomial_from_entries(const RingPtr<K>& ring, std::span<const Int> entries) {
  if (std::all_of(entries.begin(), entries.end(), [](const Int& e) { return e == 0; })) {
    throw std::invalid_argument("binomial of the zero vector");
  }
  if (entries.size() > ring->nvars()) throw std::invalid_argument("binomial vector longer than the ring");
  Monomial pos(ring->nvars()), neg(ring->nvars());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Int& e = entries[i];
    Int mag = abs(e);
    if (!mag.fits_uint_p()) throw std::overflow_error("binomial exponent too large: " + e.get_str());
    (e > 0 ? pos : neg).set(i, static_cast<Exponent>(mag.get_ui()));
  }
  const K& f = ring->field();
  return Polynomial<K>::from_terms(ring, {{pos, f.one()}, {neg, f.neg(f.one())}});
}

template <class K>
Polynomial<K> binomial_from_vector(const RingPtr<K>& ring, const BinomialVector& v) {
  if (v.alpha.size() != v.beta.size()) throw std::invalid_argument("alpha and beta lengths differ");
  auto entries = v.entries();
  return binomial_from_entries<K>(ring, entries);
}

template <class K>
BinomialVector binomial_to_vector(const Polynomial<K>& p, std::size_t n) {
  if (p.size() != 2) throw std::invalid_argument("not a binomial: " + p.to_string());
  if (2 * n > p.nvars()) throw std::invalid_argument("ring too small for n");
  const auto& a = p.terms()[0].monomial;
  const auto& b = p.terms()[1].monomial;
  for (std::size_t i = 2 * n; i < p.nvars(); ++i) {
    if (a[i] != 0 || b[i] != 0) throw std::invalid_argument("binomial uses auxiliary variables");
  }
  std::vector<Int> e(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) e[i] = Int(static_cast<unsigned long>(a[i])) - Int(static_cast<unsigned long>(b[i]));
  return BinomialVector::from_entries(e);
}

// ---------------------------------------------------------------------------
// Division

template <class K>
DivisionResult<K> divide(const Polynomial<K>& p, std::span<const Polynomial<K>> divisors, const TermOrder& order) {
  const K& f = p.field();
  std::vector<Polynomial<K>> divs;
  divs.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    divs.push_back(d.with_order(order));
  }
  DivisionResult<K> res{std::vector<Polynomial<K>>(divs.size(), Polynomial<K>(p.ring_ptr(), order)),
                        Polynomial<K>(p.ring_ptr(), order)};
  std::vector<typename Polynomial<K>::Term> rem;
  Polynomial<K> rest = p.with_order(order);
  const Monomial one(p.nvars());
  while (!rest.is_zero()) {
    const auto lt = rest.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      const auto& lead = divs[k].leading_term();
      if (!lead.monomial.divides(lt.monomial)) continue;
      auto c = f.div(lt.coeff, lead.coeff);
      auto m = lt.monomial.quotient(lead.monomial);
      res.quotients[k] = res.quotients[k] + Polynomial<K>::term(p.ring_ptr(), c, m).with_order(order);
      rest = rest.add_multiple(f.neg(c), m, divs[k]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      rest = rest.add_multiple(f.neg(lt.coeff), one, Polynomial<K>::term(p.ring_ptr(), f.one(), lt.monomial));
    }
  }
  res.remainder = Polynomial<K>::from_terms(p.ring_ptr(), std::move(rem), order);
  return res;
}

// ---------------------------------------------------------------------------
// Prime-field helpers

PrimeField::Element evaluate_at(const Polynomial<PrimeField>& p, std::span<const FieldElement> point) {
  std::vector<PrimeField::Element> raw;
  raw.reserve(point.size());
  for (const auto& x : point) {
    if (!(x.field() == p.field())) throw std::invalid_argument("evaluation point lies in a different field");
    raw.push_back(x.value());
  }
  return p.evaluate(raw);
}

FieldElement evaluate(const Polynomial<PrimeField>& p, std::span<const FieldElement> point) {
  return FieldElement(evaluate_at(p, point), p.field());
}

Polynomial<PrimeField> reduce_mod(const Polynomial<RationalField>& p, const RingPtr<PrimeField>& target) {
  if (target->nvars() != p.nvars()) throw std::invalid_argument("variable count mismatch");
  const PrimeField& f = target->field();
  std::vector<Polynomial<PrimeField>::Term> terms;
  for (const auto& t : p.terms()) {
    auto den = f.from_int(Int(t.coeff.get_den()));
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(f.modulus()));
    terms.push_back({t.monomial, f.div(f.from_int(Int(t.coeff.get_num())), den)});
  }
  return Polynomial<PrimeField>::from_terms(target, std::move(terms), p.order());
}

// ---------------------------------------------------------------------------
// Instantiations

template class Ring<RationalField>;
template class Ring<PrimeField>;
template class Polynomial<RationalField>;
template class Polynomial<PrimeField>;

#define TORIC_INSTANTIATE(K)                                                                           \
  template RingPtr<K> make_ring<K>(K, std::vector<std::string>);                                      \
  template RingPtr<K> family_ring<K>(std::size_t, K);                                                 \
  template RingPtr<K> extend_ring<K>(const RingPtr<K>&, std::string);                                 \
  template Polynomial<K> binomial_from_vector<K>(const RingPtr<K>&, const BinomialVector&);           \
  template Polynomial<K> binomial_from_entries<K>(const RingPtr<K>&, std::span<const Int>);            \
  template BinomialVector binomial_to_vector<K>(const Polynomial<K>&, std::size_t);                   \
  template DivisionResult<K> divide<K>(const Polynomial<K>&, std::span<const Polynomial<K>>, const TermOrder&);

TORIC_INSTANTIATE(RationalField)
TORIC_INSTANTIATE(PrimeField)

#undef TORIC_INSTANTIATE

}  // namespace toric
