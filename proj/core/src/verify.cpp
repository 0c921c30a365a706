#include "toric/verify.hpp"

#include "toric/toricideal.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace toric {

template <class K>
std::vector<Polynomial<K>> equation_subset(const EquationSet<K>& eqs, std::span<const std::string> drop) {
  const auto names = eqs.names();
  for (const auto& d : drop) {
    if (std::find(names.begin(), names.end(), d) == names.end()) throw std::invalid_argument("unknown equation: " + d);
  }
  const auto all = eqs.all();
  std::vector<Polynomial<K>> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (std::find(drop.begin(), drop.end(), names[k]) == drop.end()) out.push_back(all[k]);
  }
  return out;
}

namespace {

std::vector<std::string> kept_names(std::size_t n, std::span<const std::string> drop) {
  std::vector<std::string> out;
  for (auto& name : equation_names(n)) {
    if (std::find(drop.begin(), drop.end(), name) == drop.end()) out.push_back(name);
  }
  return out;
}

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t checked_power(std::uint64_t q, std::size_t e, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (total > budget / q) throw PointBudgetExceeded(0, budget);
    total *= q;
  }
  if (total > budget) throw PointBudgetExceeded(total, budget);
  return total;
}

// Odometer over [begin, end) in base q, most significant coordinate first.
template <class Fn>
void for_each_point(std::uint64_t q, std::size_t dim, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  std::vector<std::uint32_t> point(dim, 0);
  std::uint64_t idx = begin;
  for (std::size_t k = dim; k-- > 0;) {
    point[k] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  for (std::uint64_t i = begin; i < end; ++i) {
    fn(std::span<const std::uint32_t>(point));
    for (std::size_t k = dim; k-- > 0;) {
      if (++point[k] < q) break;
      point[k] = 0;
    }
  }
}

// Splits [0, total) into contiguous chunks, runs `work(chunk, begin, end)` on
// each and returns per-chunk results in index order.
template <class Result, class Work>
std::vector<Result> run_partitioned(std::uint64_t total, unsigned threads, Work work) {
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<Result> results(chunks);
  std::vector<std::thread> pool;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    if (chunks == 1) {
      work(results[c], begin, end);
    } else {
      pool.emplace_back([&, c, begin, end] { work(results[c], begin, end); });
    }
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

bool RadicalReport::all_true() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.in_radical; });
}

bool RadicalReport::any_budget_exceeded() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.budget_exceeded; });
}

template <class K>
RadicalReport radical_certificates(const FamilyParams& params, const K& field, std::span<const std::string> drop,
                                   const GroebnerOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(params);
  auto ring = family_ring(params.n, field);
  auto eqs = equations(ring, params);
  Ideal<K> equation_ideal(ring, equation_subset(eqs, drop), options);
  auto toric = toric_ideal(params, field, options);

  RadicalReport report;
  report.field = field.name();
  report.equations = kept_names(params.n, drop);
  for (const auto& g : toric.ideal.generators()) {
    RadicalEntry entry{g.to_string(), false, false};
    try {
      entry.in_radical = radical_member(g, equation_ideal);
    } catch (const BudgetExceeded&) {
      entry.budget_exceeded = true;
    }
    report.entries.push_back(std::move(entry));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Compiled evaluation

CompiledSystem::CompiledSystem(std::span<const Polynomial<PrimeField>> polys, const PrimeField& field)
    : q_(field.modulus()), nvars_(polys.empty() ? 0 : polys.front().nvars()) {
  std::map<Exponent, std::uint32_t> table_of;
  for (const auto& p : polys) {
    if (!(p.field() == field)) throw std::invalid_argument("polynomial over a different field");
    if (p.nvars() != nvars_) throw std::invalid_argument("polynomials in different rings");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Term ct{t.coeff, {}};
      for (std::size_t v = 0; v < p.nvars(); ++v) {
        const Exponent e = t.monomial[v];
        if (e == 0) continue;
        auto [it, inserted] = table_of.emplace(e, static_cast<std::uint32_t>(tables_.size()));
        if (inserted) {
          std::vector<std::uint32_t> table(q_);
          for (std::uint64_t a = 0; a < q_; ++a) table[a] = static_cast<std::uint32_t>(field.pow(a, std::uint64_t{e}));
          tables_.push_back(std::move(table));
        }
        ct.factors.push_back({static_cast<std::uint32_t>(v), it->second});
      }
      terms.push_back(std::move(ct));
    }
    polys_.push_back(std::move(terms));
  }
}

bool CompiledSystem::vanishes_at(std::span<const std::uint32_t> point) const {
  for (const auto& poly : polys_) {
    std::uint64_t sum = 0;
    for (const auto& t : poly) {
      std::uint64_t v = t.coeff;
      for (const auto& f : t.factors) {
        v = v * tables_[f.table][point[f.var]] % q_;
        if (v == 0) break;
      }
      sum += v;
      if (sum >= q_) sum -= q_;
    }
    if (sum != 0) return false;
  }
  return true;
}

PointBudgetExceeded::PointBudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error(required == 0
                             ? "point enumeration exceeds budget of " + std::to_string(budget) + "; use sample mode"
                             : "point enumeration needs " + std::to_string(required) + " points, budget is " +
                                   std::to_string(budget) + "; use sample mode") {}

PointSetReport point_set_equality(const FamilyParams& params, std::uint64_t q, const PointSetOptions& options) {
  require_valid(params);
  PrimeField field(q);
  const std::size_t dim = 2 * params.n;
  PointSetReport report;
  report.q = q;
  report.exhaustive = options.exhaustive;
  report.equations = kept_names(params.n, options.drop);

  std::uint64_t total = 0;
  if (options.exhaustive) {
    total = checked_power(q, dim, options.budget);
  } else {
    if (options.samples > options.budget) throw PointBudgetExceeded(options.samples, options.budget);
    total = options.samples;
    report.seed = options.seed;
  }

  auto ring = family_ring(params.n, field);
  auto eqs = equations(ring, params);
  const auto kept = equation_subset(eqs, options.drop);
  const CompiledSystem eq_system(kept, field);
  auto toric = toric_ideal(params, field);
  const CompiledSystem ideal_system(toric.ideal.generators(), field);

  struct Partial {
    std::uint64_t examined = 0, eq = 0, id = 0, mismatches = 0;
    std::vector<std::vector<std::uint64_t>> recorded;
  };
  auto visit = [&](Partial& part, std::span<const std::uint32_t> pt) {
    ++part.examined;
    const bool a = eq_system.vanishes_at(pt);
    const bool b = ideal_system.vanishes_at(pt);
    part.eq += a;
    part.id += b;
    if (a != b) {
      ++part.mismatches;
      if (part.recorded.size() < options.max_recorded) part.recorded.emplace_back(pt.begin(), pt.end());
    }
  };

  std::vector<Partial> parts;
  if (options.exhaustive) {
    parts = run_partitioned<Partial>(total, worker_count(options.threads),
                                     [&](Partial& part, std::uint64_t begin, std::uint64_t end) {
                                       for_each_point(q, dim, begin, end,
                                                      [&](std::span<const std::uint32_t> pt) { visit(part, pt); });
                                     });
  } else {
    // Sampling stays sequential so the stream depends on the seed alone.
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> coord(0, static_cast<std::uint32_t>(q - 1));
    Partial part;
    std::vector<std::uint32_t> pt(dim);
    for (std::uint64_t s = 0; s < total; ++s) {
      for (auto& c : pt) c = coord(rng);
      visit(part, pt);
    }
    std::sort(part.recorded.begin(), part.recorded.end());
    parts.push_back(std::move(part));
  }

  for (auto& part : parts) {
    report.points_examined += part.examined;
    report.count_equations += part.eq;
    report.count_ideal += part.id;
    report.mismatch_count += part.mismatches;
    for (auto& m : part.recorded) {
      if (report.mismatches.size() < options.max_recorded) report.mismatches.push_back(std::move(m));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Lifting

std::string to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::lifted:
      return "lifted";
    case LiftStatus::needs_extension:
      return "needs_extension";
    case LiftStatus::not_on_variety:
      return "not_on_variety";
  }
  return "?";
}

namespace {

std::uint64_t ui(const Int& v) { return to_uint64(v); }
Int big(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

// Core of the lift on raw residues; `eqs` are the n+1 equations over F_q.
LiftOutcome lift_raw(const FamilyParams& params, const PrimeField& field, const std::vector<std::uint64_t>& w,
                     const EquationSet<PrimeField>& eqs) {
  const std::size_t n = params.n;
  const std::size_t m = n - 1;
  const std::uint64_t q = field.modulus();
  LiftOutcome out;
  for (const auto& e : eqs.all()) {
    if (e.evaluate(w) != 0) {
      out.status = LiftStatus::not_on_variety;
      return out;
    }
  }

  // Step 1: u_i a d_i-th root of x_i (least representative), u_n = x_n.
  std::vector<std::uint64_t> u(n, 0);
  u[m] = w[m];
  for (std::size_t i = 0; i < m; ++i) {
    auto roots = fp_nth_roots(FieldElement(w[i], field), Int(static_cast<long>(params.d[i])));
    if (roots.empty()) {
      out.status = LiftStatus::needs_extension;
      out.coordinate = i + 1;
      out.root_degree = params.d[i];
      out.missing = std::to_string(params.d[i]) + "-th root of x" + std::to_string(i + 1) + " = " +
                    std::to_string(w[i]) + " in " + field.name();
      return out;
    }
    u[i] = roots.front().value();
  }

  // mu_{d_i}(F_q) is cyclic of order gcd(d_i, q-1), generated by eta_i.
  std::vector<std::uint64_t> eta(m), order(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto rou = roots_of_unity(Int(static_cast<long>(params.d[i])), field);
    eta[i] = rou.generator->value();
    order[i] = rou.roots.size();
  }
  auto inverse_mod_order = [&](std::int64_t a, std::size_t i) -> std::uint64_t {
    if (order[i] == 1) return 0;
    return ui(*mod_inverse(Int(static_cast<long>(a)), big(order[i])));
  };

  // Step 2: y_n = (prod u_i^{h_i}) * eta with eta^{d_1...d_{n-1}} = 1. The
  // orders are pairwise coprime, so eta' = prod eta_i generates all such eta
  // in F_q and eta = eta'^s. Replacing u_i by u_i eta_i^{s k_i} with
  // k_i = h_i^{-1} mod ord(eta_i) multiplies prod u_i^{h_i} by exactly eta'^s.
  auto yn_from_u = [&] {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < m; ++i) prod = field.mul(prod, field.pow(u[i], static_cast<std::uint64_t>(params.h[i])));
    return prod;
  };
  const std::uint64_t base = yn_from_u();
  if (base != w[2 * n - 1]) {
    if (base == 0) throw std::logic_error("y_n nonzero while some x_i vanishes");
    const std::uint64_t target = field.div(w[2 * n - 1], base);
    std::uint64_t eta_prime = 1, group = 1;
    for (std::size_t i = 0; i < m; ++i) {
      eta_prime = field.mul(eta_prime, eta[i]);
      group *= order[i];
    }
    std::optional<std::uint64_t> s;
    std::uint64_t acc = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
      if (acc == target) {
        s = k;
        break;
      }
      acc = field.mul(acc, eta_prime);
    }
    if (!s) throw std::logic_error("y_n / prod u_i^h_i is not a root of unity of the expected order");
    for (std::size_t i = 0; i < m; ++i) {
      if (order[i] == 1) continue;
      const std::uint64_t k = (*s % order[i]) * inverse_mod_order(params.h[i], i) % order[i];
      u[i] = field.mul(u[i], field.pow(eta[i], k));
    }
  }

  // Step 3: with x_n != 0, y_i = u_i^{f_i} u_n^{g_i} theta_i, theta_i a root of
  // unity; theta_i = omega_i^{f_i} for omega_i = theta_i^{f_i^{-1}}, and u_i
  // becomes u_i omega_i. G then forces y_n back into place.
  if (u[m] != 0) {
    for (std::size_t i = 0; i < m; ++i) {
      if (u[i] == 0) continue;
      const std::uint64_t expected = field.mul(field.pow(u[i], static_cast<std::uint64_t>(params.f[i])),
                                               field.pow(u[m], static_cast<std::uint64_t>(params.g[i])));
      const std::uint64_t theta = field.div(w[n + i], expected);
      if (theta == 1) continue;
      const std::uint64_t omega = field.pow(theta, inverse_mod_order(params.f[i], i));
      u[i] = field.mul(u[i], omega);
    }
  }

  std::vector<FieldElement> lifted;
  for (auto v : u) lifted.emplace_back(v, field);
  auto image = phi<PrimeField>(params, field, u);
  if (image != w) {
    std::ostringstream msg;
    msg << "lift does not reproduce the point in " << field.name();
    throw std::logic_error(msg.str());
  }
  out.status = LiftStatus::lifted;
  out.u = std::move(lifted);
  (void)q;
  return out;
}

}  // namespace

LiftOutcome lift_point(const FamilyParams& params, std::span<const FieldElement> w) {
  require_valid(params);
  if (w.size() != 2 * params.n) throw std::invalid_argument("point must have 2n coordinates");
  const PrimeField field = w.front().field();
  std::vector<std::uint64_t> raw;
  for (const auto& x : w) {
    if (!(x.field() == field)) throw std::invalid_argument("point coordinates lie in different fields");
    raw.push_back(x.value());
  }
  auto eqs = equations(family_ring(params.n, field), params);
  return lift_raw(params, field, raw, eqs);
}

std::string AuditSummary::summary_line() const {
  std::ostringstream s;
  s << (passed() ? "PASS" : "FAIL") << " lift-audit q=" << q << " solutions=" << solutions << " lifted=" << lifted
    << " needs_extension=" << needs_extension << " (verified " << needs_extension_verified << ")"
    << " failures=" << failures << " parameter_points=" << parameter_points
    << " forward_failures=" << forward_failures;
  return s.str();
}

AuditSummary exhaustive_lift_audit(const FamilyParams& params, std::uint64_t q, const AuditOptions& options) {
  require_valid(params);
  PrimeField field(q);
  const std::size_t n = params.n;
  const std::uint64_t total = checked_power(q, 2 * n, options.budget);
  const std::uint64_t params_total = checked_power(q, n, options.budget);

  auto ring = family_ring(n, field);
  auto eqs = equations(ring, params);
  const auto all = eqs.all();
  const CompiledSystem system(all, field);

  AuditSummary summary;
  summary.q = q;
  const unsigned threads = worker_count(options.threads);

  auto parts = run_partitioned<AuditSummary>(total, threads, [&](AuditSummary& part, std::uint64_t b, std::uint64_t e) {
    for_each_point(q, 2 * n, b, e, [&](std::span<const std::uint32_t> pt) {
      ++part.points_scanned;
      if (!system.vanishes_at(pt)) return;
      ++part.solutions;
      std::vector<std::uint64_t> w(pt.begin(), pt.end());
      auto describe = [&] {
        std::string s = "(";
        for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
        return s + ")";
      };
      try {
        auto outcome = lift_raw(params, field, w, eqs);
        if (outcome.status == LiftStatus::lifted) {
          ++part.lifted;
        } else if (outcome.status == LiftStatus::needs_extension) {
          ++part.needs_extension;
          const std::size_t i = *outcome.coordinate - 1;
          bool has_root = false;
          for (std::uint64_t x = 0; x < q && !has_root; ++x) {
            has_root = field.pow(x, static_cast<std::uint64_t>(params.d[i])) == w[i];
          }
          if (!has_root) {
            ++part.needs_extension_verified;
          } else if (part.details.size() < options.max_details) {
            part.details.push_back("needs_extension but a root exists at " + describe());
          }
        } else {
          ++part.failures;
          if (part.details.size() < options.max_details) part.details.push_back("not on variety: " + describe());
        }
      } catch (const std::logic_error& err) {
        ++part.failures;
        if (part.details.size() < options.max_details) part.details.push_back(std::string(err.what()) + " " + describe());
      }
    });
  });

  auto forward = run_partitioned<AuditSummary>(params_total, threads,
                                               [&](AuditSummary& part, std::uint64_t b, std::uint64_t e) {
                                                 std::vector<std::uint64_t> u(n);
                                                 std::vector<std::uint32_t> image(2 * n);
                                                 for_each_point(q, n, b, e, [&](std::span<const std::uint32_t> pt) {
                                                   ++part.parameter_points;
                                                   std::copy(pt.begin(), pt.end(), u.begin());
                                                   auto img = phi<PrimeField>(params, field, u);
                                                   std::copy(img.begin(), img.end(), image.begin());
                                                   if (!system.vanishes_at(image)) ++part.forward_failures;
                                                 });
                                               });

  for (auto* group : {&parts, &forward}) {
    for (auto& p : *group) {
      summary.points_scanned += p.points_scanned;
      summary.solutions += p.solutions;
      summary.lifted += p.lifted;
      summary.needs_extension += p.needs_extension;
      summary.needs_extension_verified += p.needs_extension_verified;
      summary.failures += p.failures;
      summary.parameter_points += p.parameter_points;
      summary.forward_failures += p.forward_failures;
      for (auto& d : p.details) {
        if (summary.details.size() < options.max_details) summary.details.push_back(std::move(d));
      }
    }
  }
  return summary;
}

#define TORIC_INSTANTIATE(K)                                                                                      \
  template std::vector<Polynomial<K>> equation_subset<K>(const EquationSet<K>&, std::span<const std::string>);   \
  template RadicalReport radical_certificates<K>(const FamilyParams&, const K&, std::span<const std::string>,     \
                                                 const GroebnerOptions&);

TORIC_INSTANTIATE(RationalField)
TORIC_INSTANTIATE(PrimeField)

#undef TORIC_INSTANTIATE

}  // namespace toric
