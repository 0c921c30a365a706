#include "toric/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace toric {

BudgetExceeded::BudgetExceeded(std::size_t budget, std::size_t basis_size)
    : std::runtime_error("S-pair budget of " + std::to_string(budget) + " exceeded (basis size " +
                         std::to_string(basis_size) + ")"),
      budget_(budget),
      basis_size_(basis_size) {}

template <class K>
Polynomial<K> normalize(const Polynomial<K>& p) {
  if (p.is_zero()) return p;
  if constexpr (std::is_same_v<K, RationalField>) {
    Int den_lcm = 1;
    Int num_gcd = 0;
    for (const auto& t : p.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Rat scale = make_rat(den_lcm, num_gcd);
    if (sgn(p.leading_coeff()) < 0) scale = -scale;
    return p.scaled(scale);
  } else {
    return p.monic();
  }
}

namespace {

template <class K>
std::optional<std::size_t> find_reducer(const Monomial& m, const std::vector<Polynomial<K>>& basis,
                                        const std::vector<char>* active = nullptr) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active != nullptr && !(*active)[k]) continue;
    if (basis[k].leading_monomial().divides(m)) return k;
  }
  return std::nullopt;
}

// Full reduction; `basis` must already be sorted under `order`.
template <class K>
Polynomial<K> reduce(Polynomial<K> rest, const std::vector<Polynomial<K>>& basis, const TermOrder& order,
                     const std::vector<char>* active = nullptr) {
  const K& f = rest.field();
  std::vector<typename Polynomial<K>::Term> remainder;
  const Monomial one(rest.nvars());
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (auto k = find_reducer(lt.monomial, basis, active)) {
      const auto& g = basis[*k];
      auto c = f.div(lt.coeff, g.leading_coeff());
      auto m = lt.monomial.quotient(g.leading_monomial());
      rest = rest.add_multiple(f.neg(c), m, g);
    } else {
      remainder.push_back(lt);
      auto head = Polynomial<K>::term(rest.ring_ptr(), lt.coeff, lt.monomial);
      rest = rest - head.with_order(order);
    }
  }
  return Polynomial<K>::from_terms(rest.ring_ptr(), std::move(remainder), order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (!(a.lcm == b.lcm)) return lex_less(a.lcm, b.lcm);
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }
};

}  // namespace

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, std::span<const Polynomial<K>> basis, const TermOrder& order) {
  std::vector<Polynomial<K>> sorted;
  sorted.reserve(basis.size());
  for (const auto& b : basis) {
    if (!b.is_zero()) sorted.push_back(b.with_order(order));
  }
  return reduce(p.with_order(order), sorted, order);
}

template <class K>
std::vector<Polynomial<K>> buchberger(std::span<const Polynomial<K>> gens, const TermOrder& order,
                                      const GroebnerOptions& options, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats != nullptr ? *stats : local;

  std::vector<Polynomial<K>> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) basis.push_back(g.with_order(order).monic());
  }
  if (basis.empty()) return {};
  const RingPtr<K> ring = basis.front().ring_ptr();
  auto unit_ideal = [&] {
    return std::vector<Polynomial<K>>{Polynomial<K>::constant(ring, ring->field().one()).with_order(order)};
  };
  if (std::any_of(basis.begin(), basis.end(), [](const auto& g) { return g.is_constant(); })) return unit_ideal();

  std::set<Pair, PairLess> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  const K& f = ring->field();
  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    if (++st.pairs_processed > options.pair_budget) throw BudgetExceeded(options.pair_budget, basis.size());

    const auto& gi = basis[pr.i];
    const auto& gj = basis[pr.j];
    if (coprime(gi.leading_monomial(), gj.leading_monomial())) {
      ++st.coprime_skips;
      continue;
    }
    if (options.chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        skip = !pending.contains(key(pr.i, k)) && !pending.contains(key(pr.j, k));
      }
      if (skip) {
        ++st.chain_skips;
        continue;
      }
    }

    auto s = gi.mul_term(f.one(), pr.lcm.quotient(gi.leading_monomial()))
                 .add_multiple(f.neg(f.one()), pr.lcm.quotient(gj.leading_monomial()), gj);
    auto r = reduce(std::move(s), basis, order);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (r.is_constant()) return unit_ideal();
    basis.push_back(r.monic());
    st.max_basis_size = std::max(st.max_basis_size, basis.size());
    add_pairs_for(basis.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const auto& la = basis[a].leading_monomial();
      const auto& lb = basis[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) keep[a] = 0;
    }
  }
  std::vector<Polynomial<K>> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (keep[a]) minimal.push_back(basis[a]);
  }

  // Inter-reduce tails against the other minimal elements.
  std::vector<Polynomial<K>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<char> others(minimal.size(), 1);
    others[a] = 0;
    const auto& lt = minimal[a].leading_term();
    auto head = Polynomial<K>::term(ring, lt.coeff, lt.monomial).with_order(order);
    auto tail = reduce(minimal[a] - head, minimal, order, &others);
    reduced.push_back(normalize(head + tail));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const auto& a, const auto& b) { return order.less(a.leading_monomial(), b.leading_monomial()); });
  return reduced;
}

// ---------------------------------------------------------------------------
// Ideal

template <class K>
Ideal<K>::Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> generators, GroebnerOptions options)
    : ring_(std::move(ring)), generators_(std::move(generators)), options_(options), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (!(g.ring() == *ring_)) throw std::invalid_argument("generator lives in a different ring");
  }
}

template <class K>
const std::vector<Polynomial<K>>& Ideal<K>::basis(const TermOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->bases.find(order);
  if (it == cache_->bases.end()) {
    auto gb = buchberger<K>(generators_, order, options_);
    it = cache_->bases.emplace(order, std::move(gb)).first;
  }
  return it->second;
}

template <class K>
bool Ideal<K>::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant() && !b.front().is_zero();
}

template <class K>
bool ideal_member(const Polynomial<K>& p, const Ideal<K>& ideal, const TermOrder& order) {
  if (!(p.ring() == *ideal.ring_ptr())) throw std::invalid_argument("ring mismatch");
  const auto& gb = ideal.basis(order);
  return normal_form<K>(p, gb, order).is_zero();
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  if (!(*a.ring_ptr() == *b.ring_ptr())) throw std::invalid_argument("ring mismatch");
  const auto& ba = a.basis();
  const auto& bb = b.basis();
  return ba.size() == bb.size() && std::equal(ba.begin(), ba.end(), bb.begin());
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::span<const std::size_t> drop) {
  const std::size_t n = ideal.ring_ptr()->nvars();
  std::vector<char> high(n, 0);
  for (auto v : drop) {
    if (v >= n) throw std::out_of_range("eliminated variable out of range");
    high[v] = 1;
  }
  const auto& gb = ideal.basis(TermOrder::elimination(high));
  std::vector<Polynomial<K>> kept;
  for (const auto& g : gb) {
    bool uses = std::any_of(drop.begin(), drop.end(), [&](std::size_t v) { return g.involves(v); });
    if (!uses) kept.push_back(g.with_order(TermOrder::grevlex()));
  }
  return Ideal<K>(ideal.ring_ptr(), std::move(kept), ideal.options());
}

template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Polynomial<K>& m) {
  const auto& ring = ideal.ring_ptr();
  if (!(m.ring() == *ring)) throw std::invalid_argument("ring mismatch");
  auto big = extend_ring(ring, "t");
  const std::size_t t = ring->nvars();
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embedded(big));
  const K& f = ring->field();
  gens.push_back(Polynomial<K>::variable(big, t) * m.embedded(big) - Polynomial<K>::constant(big, f.one()));
  const std::size_t drop[] = {t};
  auto elim = eliminate(Ideal<K>(big, std::move(gens), ideal.options()), drop);
  std::vector<Polynomial<K>> back;
  for (const auto& g : elim.generators()) back.push_back(g.restricted(ring));
  return Ideal<K>(ring, std::move(back), ideal.options());
}

template <class K>
bool radical_member(const Polynomial<K>& p, const Ideal<K>& ideal) {
  const auto& ring = ideal.ring_ptr();
  if (!(p.ring() == *ring)) throw std::invalid_argument("ring mismatch");
  if (p.is_zero()) return true;
  auto big = extend_ring(ring, "t");
  const std::size_t t = ring->nvars();
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embedded(big));
  const K& f = ring->field();
  gens.push_back(Polynomial<K>::constant(big, f.one()) - Polynomial<K>::variable(big, t) * p.embedded(big));
  std::vector<char> high(big->nvars(), 0);
  high[t] = 1;
  Ideal<K> rabinowitsch(big, std::move(gens), ideal.options());
  const auto& gb = rabinowitsch.basis(TermOrder::elimination(high));
  return gb.size() == 1 && gb.front().is_constant();
}

template class Ideal<RationalField>;
template class Ideal<PrimeField>;

#define TORIC_INSTANTIATE(K)                                                                                     \
  template Polynomial<K> normalize<K>(const Polynomial<K>&);                                                    \
  template Polynomial<K> normal_form<K>(const Polynomial<K>&, std::span<const Polynomial<K>>, const TermOrder&); \
  template std::vector<Polynomial<K>> buchberger<K>(std::span<const Polynomial<K>>, const TermOrder&,           \
                                                    const GroebnerOptions&, GroebnerStats*);                     \
  template bool ideal_member<K>(const Polynomial<K>&, const Ideal<K>&, const TermOrder&);                        \
  template bool ideal_equal<K>(const Ideal<K>&, const Ideal<K>&);                                                \
  template Ideal<K> eliminate<K>(const Ideal<K>&, std::span<const std::size_t>);                                 \
  template Ideal<K> saturate<K>(const Ideal<K>&, const Polynomial<K>&);                                          \
  template bool radical_member<K>(const Polynomial<K>&, const Ideal<K>&);

TORIC_INSTANTIATE(RationalField)
TORIC_INSTANTIATE(PrimeField)

#undef TORIC_INSTANTIATE

}  // namespace toric
