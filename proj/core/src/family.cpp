#include "toric/family.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace {

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

std::string summarize(const ValidationReport& report) {
  std::string s = "invalid family parameters:";
  for (const auto& v : report.violations) s += " " + v.message + ";";
  return s;
}

void check_shape(const FamilyParams& params) {
  const std::size_t m = params.n == 0 ? 0 : params.n - 1;
  if (params.n < 2 || params.d.size() != m || params.f.size() != m || params.g.size() != m || params.h.size() != m) {
    throw std::invalid_argument("family parameters are not structurally well formed");
  }
}

}  // namespace

FamilyParams FamilyParams::worked_example() { return {3, {2, 3}, {3, 5}, {1, 1}, {3, 5}}; }

ValidationReport validate(const FamilyParams& params) {
  ValidationReport report;
  auto add = [&](const char* cond, std::vector<std::size_t> idx, const std::string& detail) {
    std::string msg = std::string(cond) + " violated";
    if (!idx.empty()) msg += " at " + index_list(idx);
    if (!detail.empty()) msg += ": " + detail;
    report.violations.push_back({cond, std::move(idx), std::move(msg)});
  };

  if (params.n < 3) add(conditions::kStructure, {}, "n must be at least 3, got " + std::to_string(params.n));
  const std::size_t m = params.n == 0 ? 0 : params.n - 1;
  const std::pair<const char*, const std::vector<std::int64_t>*> fields[] = {
      {"d", &params.d}, {"f", &params.f}, {"g", &params.g}, {"h", &params.h}};
  bool shape_ok = params.n >= 2;
  for (const auto& [name, vec] : fields) {
    if (vec->size() != m) {
      add(conditions::kStructure, {},
          std::string(name) + " must have n-1 = " + std::to_string(m) + " entries, got " + std::to_string(vec->size()));
      shape_ok = false;
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if ((*vec)[i] < 1) {
        add(conditions::kStructure, {i + 1}, std::string(name) + " entries must be positive");
        shape_ok = false;
      }
    }
  }
  if (!shape_ok) return report;

  for (std::size_t i = 0; i < m; ++i) {
    if (gcd(big(params.d[i]), big(params.f[i])) != 1) add(conditions::kCoprimeDF, {i + 1}, "");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (gcd(big(params.d[i]), big(params.h[i])) != 1) add(conditions::kCoprimeDH, {i + 1}, "");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (gcd(big(params.d[i]), big(params.d[j])) != 1) add(conditions::kPairwiseD, {i + 1, j + 1}, "");
    }
  }

  // First prime (by index, then size) and the first different prime after it.
  std::optional<std::pair<Int, std::size_t>> first;
  std::optional<PrimeWitness> witness;
  for (std::size_t i = 0; i < m && !witness; ++i) {
    for (const auto& pp : factorize(big(params.d[i]))) {
      if (!first) {
        first = {pp.prime, i + 1};
      } else if (pp.prime != first->first) {
        witness = PrimeWitness{first->first, pp.prime, first->second, i + 1};
        break;
      }
    }
  }
  if (!witness) {
    add(conditions::kTwoPrimes, {}, "no two distinct primes divide the d_i");
  } else if (report.ok()) {
    report.witness = witness;
  }
  return report;
}

InvalidFamily::InvalidFamily(ValidationReport report)
    : std::invalid_argument(summarize(report)), report_(std::move(report)) {}

void require_valid(const FamilyParams& params) {
  auto report = validate(params);
  if (!report.ok()) throw InvalidFamily(std::move(report));
}

IntMatrix exponent_matrix(const FamilyParams& params) {
  check_shape(params);
  const std::size_t n = params.n;
  IntMatrix t(n, 2 * n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t(i, i) = big(params.d[i]);
    t(i, n + i) = big(params.f[i]);
    t(n - 1, n + i) = big(params.g[i]);
    t(i, 2 * n - 1) = big(params.h[i]);
  }
  t(n - 1, n - 1) = 1;
  return t;
}

template <class K>
std::vector<typename K::Element> phi(const FamilyParams& params, const K& field,
                                     std::span<const typename K::Element> u) {
  check_shape(params);
  const std::size_t n = params.n;
  if (u.size() != n) throw std::invalid_argument("parameter vector must have length n");
  auto pw = [&](typename K::Element a, std::int64_t e) {
    auto r = field.one();
    while (e > 0) {
      if (e & 1) r = field.mul(r, a);
      e >>= 1;
      if (e > 0) a = field.mul(a, a);
    }
    return r;
  };
  std::vector<typename K::Element> point(2 * n, field.zero());
  auto yn = field.one();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    point[i] = pw(u[i], params.d[i]);
    point[n + i] = field.mul(pw(u[i], params.f[i]), pw(u[n - 1], params.g[i]));
    yn = field.mul(yn, pw(u[i], params.h[i]));
  }
  point[n - 1] = u[n - 1];
  point[2 * n - 1] = yn;
  return point;
}

template std::vector<Rat> phi<RationalField>(const FamilyParams&, const RationalField&, std::span<const Rat>);
template std::vector<PrimeField::Element> phi<PrimeField>(const FamilyParams&, const PrimeField&,
                                                         std::span<const PrimeField::Element>);

std::vector<FieldElement> phi(const FamilyParams& params, std::span<const FieldElement> u) {
  if (u.empty()) throw std::invalid_argument("empty parameter vector");
  const PrimeField field = u.front().field();
  std::vector<PrimeField::Element> raw;
  for (const auto& x : u) {
    if (!(x.field() == field)) throw std::invalid_argument("parameters lie in different fields");
    raw.push_back(x.value());
  }
  auto image = phi<PrimeField>(params, field, raw);
  std::vector<FieldElement> out;
  out.reserve(image.size());
  for (auto v : image) out.emplace_back(v, field);
  return out;
}

std::vector<BezoutPair> bezout_pairs(const FamilyParams& params) {
  check_shape(params);
  std::vector<BezoutPair> out;
  for (std::size_t i = 0; i + 1 < params.n; ++i) {
    const Int d = big(params.d[i]), f = big(params.f[i]), h = big(params.h[i]);
    auto finv = mod_inverse(f, d);
    if (!finv) throw std::domain_error("gcd(d_" + std::to_string(i + 1) + ", f_" + std::to_string(i + 1) + ") != 1");
    Int beta = mod_floor(h * *finv, d);
    Int alpha = (h - beta * f) / d;
    out.push_back({alpha, beta});
  }
  return out;
}

BinomialVector fi_vector(const FamilyParams& params, std::size_t i) {
  check_shape(params);
  const std::size_t n = params.n;
  if (i < 1 || i >= n) throw std::out_of_range("F_i index must lie in [1, n-1]");
  BinomialVector v{std::vector<Int>(n), std::vector<Int>(n)};
  const std::size_t k = i - 1;
  v.alpha[k] = -big(params.f[k]);
  v.alpha[n - 1] = -big(params.d[k]) * big(params.g[k]);
  v.beta[k] = big(params.d[k]);
  return v;
}

BinomialVector f_vector(const FamilyParams& params) {
  check_shape(params);
  const std::size_t n = params.n;
  BinomialVector v{std::vector<Int>(n), std::vector<Int>(n)};
  Int prod = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) prod *= big(params.d[k]);
  for (std::size_t i = 0; i + 1 < n; ++i) v.alpha[i] = -big(params.h[i]) * (prod / big(params.d[i]));
  v.beta[n - 1] = prod;
  return v;
}

BinomialVector g_vector(const FamilyParams& params) {
  const auto pairs = bezout_pairs(params);
  const std::size_t n = params.n;
  BinomialVector v{std::vector<Int>(n), std::vector<Int>(n)};
  Int beta_g = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v.alpha[i] = pairs[i].alpha;
    v.beta[i] = pairs[i].beta;
    beta_g += pairs[i].beta * big(params.g[i]);
  }
  v.alpha[n - 1] = -beta_g;
  v.beta[n - 1] = -1;
  return v;
}

std::vector<BinomialVector> equation_vectors(const FamilyParams& params) {
  std::vector<BinomialVector> out;
  for (std::size_t i = 1; i < params.n; ++i) out.push_back(fi_vector(params, i));
  out.push_back(f_vector(params));
  out.push_back(g_vector(params));
  return out;
}

std::vector<std::string> equation_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i < n; ++i) names.push_back("F" + std::to_string(i));
  names.emplace_back("F");
  names.emplace_back("G");
  return names;
}

template <class K>
Polynomial<K> build_fi(const RingPtr<K>& ring, const FamilyParams& params, std::size_t i) {
  return binomial_from_vector(ring, fi_vector(params, i));
}

template <class K>
Polynomial<K> build_f(const RingPtr<K>& ring, const FamilyParams& params) {
  return binomial_from_vector(ring, f_vector(params));
}

template <class K>
Polynomial<K> build_g(const RingPtr<K>& ring, const FamilyParams& params) {
  return binomial_from_vector(ring, g_vector(params));
}

template <class K>
std::vector<Polynomial<K>> EquationSet<K>::all() const {
  std::vector<Polynomial<K>> out(f_list);
  out.push_back(f);
  out.push_back(g);
  return out;
}

template <class K>
EquationSet<K> equations(const RingPtr<K>& ring, const FamilyParams& params) {
  require_valid(params);
  if (ring->nvars() < 2 * params.n) throw std::invalid_argument("ring has fewer than 2n variables");
  std::vector<Polynomial<K>> fl;
  for (std::size_t i = 1; i < params.n; ++i) fl.push_back(build_fi(ring, params, i));
  return {std::move(fl), build_f(ring, params), build_g(ring, params)};
}

std::size_t codim(const FamilyParams& params) {
  require_valid(params);
  const std::size_t from_rank = 2 * params.n - rank(exponent_matrix(params));
  if (from_rank != params.n) throw std::logic_error("codimension check failed: 2n - rank(T) != n");
  return params.n;
}

#define TORIC_INSTANTIATE(K)                                                                   \
  template Polynomial<K> build_fi<K>(const RingPtr<K>&, const FamilyParams&, std::size_t);    \
  template Polynomial<K> build_f<K>(const RingPtr<K>&, const FamilyParams&);                  \
  template Polynomial<K> build_g<K>(const RingPtr<K>&, const FamilyParams&);                  \
  template struct EquationSet<K>;                                                            \
  template EquationSet<K> equations<K>(const RingPtr<K>&, const FamilyParams&);

TORIC_INSTANTIATE(RationalField)
TORIC_INSTANTIATE(PrimeField)

#undef TORIC_INSTANTIATE

}  // namespace toric
