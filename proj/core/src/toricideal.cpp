#include "toric/toricideal.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

namespace toric {

template <class K>
Polynomial<K> variable_product(const RingPtr<K>& ring) {
  Monomial m(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, 1);
  return Polynomial<K>::term(ring, ring->field().one(), std::move(m));
}

template <class K>
std::vector<Polynomial<K>> minimal_generators(std::span<const Polynomial<K>> gens, const GroebnerOptions& options) {
  std::vector<Polynomial<K>> kept(gens.begin(), gens.end());
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.total_degree() > b.total_degree(); });
  for (std::size_t k = 0; k < kept.size();) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != k) others.push_back(kept[j]);
    }
    if (!kept[k].is_zero() && others.empty()) {
      ++k;
      continue;
    }
    if (kept[k].is_zero() || ideal_member(kept[k], Ideal<K>(kept[k].ring_ptr(), std::move(others), options))) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

template <class K>
ToricIdealResult<K> toric_ideal(const RingPtr<K>& ring, const IntMatrix& matrix, const GroebnerOptions& options) {
  if (matrix.cols() != ring->nvars()) throw std::invalid_argument("matrix columns must match ring variables");
  LatticeBasis lattice = kernel_basis(matrix);
  std::vector<Polynomial<K>> binomials;
  binomials.reserve(lattice.size());
  for (const auto& v : lattice.vectors) binomials.push_back(binomial_from_entries<K>(ring, v));
  SaturationCertificate cert;
  cert.lattice_generators = binomials.size();
  Ideal<K> lattice_ideal(ring, std::move(binomials), options);
  Ideal<K> saturated = saturate(lattice_ideal, variable_product(ring));
  const auto& gb = saturated.basis(TermOrder::grevlex());
  cert.order = TermOrder::grevlex().name();
  cert.final_basis_size = gb.size();
  cert.all_binomial = std::all_of(gb.begin(), gb.end(), [](const auto& g) { return g.is_binomial(); });
  auto minimal = minimal_generators<K>(gb, options);
  return {Ideal<K>(ring, gb, options), std::move(minimal), std::move(lattice), std::move(cert)};
}

template <class K>
ToricIdealResult<K> toric_ideal(const FamilyParams& params, const K& field, const GroebnerOptions& options) {
  require_valid(params);
  return toric_ideal(family_ring(params.n, field), exponent_matrix(params), options);
}

template <class K>
bool verify_minimal_generation(std::span<const Polynomial<K>> gens, const Ideal<K>& ideal) {
  Ideal<K> candidate(ideal.ring_ptr(), std::vector<Polynomial<K>>(gens.begin(), gens.end()), ideal.options());
  if (!ideal_equal(candidate, ideal)) return false;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != k) others.push_back(gens[j]);
    }
    if (ideal_member(gens[k], Ideal<K>(ideal.ring_ptr(), std::move(others), ideal.options()))) return false;
  }
  return true;
}

template <class K>
bool contains_equation_set(const Ideal<K>& ideal, const EquationSet<K>& eqs) {
  auto all = eqs.all();
  return std::all_of(all.begin(), all.end(), [&](const auto& e) { return ideal_member(e, ideal); });
}

template <class K>
bool is_saturated(const Ideal<K>& ideal) {
  return ideal_equal(saturate(ideal, variable_product(ideal.ring_ptr())), ideal);
}

#define TORIC_INSTANTIATE(K)                                                                                    \
  template Polynomial<K> variable_product<K>(const RingPtr<K>&);                                               \
  template std::vector<Polynomial<K>> minimal_generators<K>(std::span<const Polynomial<K>>, const GroebnerOptions&); \
  template ToricIdealResult<K> toric_ideal<K>(const RingPtr<K>&, const IntMatrix&, const GroebnerOptions&);    \
  template ToricIdealResult<K> toric_ideal<K>(const FamilyParams&, const K&, const GroebnerOptions&);          \
  template bool verify_minimal_generation<K>(std::span<const Polynomial<K>>, const Ideal<K>&);                 \
  template bool contains_equation_set<K>(const Ideal<K>&, const EquationSet<K>&);                              \
  template bool is_saturated<K>(const Ideal<K>&);

TORIC_INSTANTIATE(RationalField)
TORIC_INSTANTIATE(PrimeField)

#undef TORIC_INSTANTIATE

ReductionComparison compare_reduction(const Ideal<RationalField>& rational, const Ideal<PrimeField>& prime) {
  const auto& ring = prime.ring_ptr();
  if (rational.ring_ptr()->names() != ring->names()) throw std::invalid_argument("rings have different variables");
  const PrimeField& k = ring->field();
  ReductionComparison out;
  out.prime = k.modulus();

  std::set<std::string> reduced;
  for (const auto& g : rational.basis(TermOrder::grevlex())) {
    std::vector<Polynomial<PrimeField>::Term> terms;
    for (const auto& t : g.terms()) {
      terms.push_back({t.monomial, k.div(k.from_int(t.coeff.get_num()), k.from_int(t.coeff.get_den()))});
    }
    const auto r = Polynomial<PrimeField>::from_terms(ring, std::move(terms));
    reduced.insert(r.is_zero() ? std::string("0") : r.monic().to_string());
  }
  std::set<std::string> native;
  for (const auto& g : prime.basis(TermOrder::grevlex())) native.insert(g.to_string());

  std::set_difference(reduced.begin(), reduced.end(), native.begin(), native.end(),
                      std::back_inserter(out.only_rational));
  std::set_difference(native.begin(), native.end(), reduced.begin(), reduced.end(),
                      std::back_inserter(out.only_prime));
  out.matches = out.only_rational.empty() && out.only_prime.empty();
  return out;
}

}  // namespace toric
