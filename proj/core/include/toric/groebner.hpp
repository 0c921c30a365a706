#pragma once

// Buchberger's algorithm and the ideal-theoretic decisions built on it:
// membership, equality, elimination, saturation and radical membership.

#include "toric/polyring.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

namespace toric {

struct GroebnerOptions {
  /// Maximum number of S-pairs taken from the queue before giving up.
  std::size_t pair_budget = 1'000'000;
  /// Buchberger's chain criterion. The coprime-leading-term criterion is always on.
  bool chain_criterion = true;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t coprime_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};

/// Thrown when the S-pair budget runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t budget, std::size_t basis_size);
  std::size_t budget() const { return budget_; }
  std::size_t basis_size() const { return basis_size_; }

 private:
  std::size_t budget_;
  std::size_t basis_size_;
};

/// Canonical scaling: monic over F_p; integral, content-free and with a
/// positive leading coefficient over Q.
template <class K>
Polynomial<K> normalize(const Polynomial<K>& p);

/// Full reduction of p modulo `basis` under `order`.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, std::span<const Polynomial<K>> basis, const TermOrder& order);

/// Reduced Groebner basis of the ideal generated by `gens`, normalized and
/// sorted by increasing leading monomial. Zero generators are ignored; the
/// zero ideal yields an empty basis.
///
/// Pairs are processed by the normal strategy (smallest lcm degree first,
/// ties broken lexicographically on the lcm). Throws BudgetExceeded.
template <class K>
std::vector<Polynomial<K>> buchberger(std::span<const Polynomial<K>> gens, const TermOrder& order,
                                      const GroebnerOptions& options = {}, GroebnerStats* stats = nullptr);

/// A generator list with lazily computed reduced bases, cached per order.
/// Copies share the cache; the cache is filled under a lock.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> generators, GroebnerOptions options = {});

  const RingPtr<K>& ring_ptr() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return generators_; }
  const GroebnerOptions& options() const { return options_; }

  const std::vector<Polynomial<K>>& basis(const TermOrder& order = TermOrder::grevlex()) const;
  bool is_zero() const { return basis().empty(); }
  bool is_unit() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::vector<Polynomial<K>>> bases;
  };

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> generators_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
bool ideal_member(const Polynomial<K>& p, const Ideal<K>& ideal, const TermOrder& order = TermOrder::grevlex());

/// Equal reduced grevlex bases. Throws std::invalid_argument on ring mismatch.
template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b);

/// Elimination ideal: basis elements (under the block order with `drop`
/// greatest) that do not involve any variable in `drop`.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::span<const std::size_t> drop);

/// I : m^infinity, via an auxiliary variable t, the extra generator t*m - 1
/// and elimination of t.
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Polynomial<K>& m);

/// p in sqrt(I), decided by 1 in I + (1 - t*p) in one more variable.
template <class K>
bool radical_member(const Polynomial<K>& p, const Ideal<K>& ideal);

extern template class Ideal<RationalField>;
extern template class Ideal<PrimeField>;

}  // namespace toric
