#pragma once

// The defining ideal I(V) as the lattice ideal of the exponent matrix:
// kernel basis -> binomials -> saturation by the product of all variables.

#include "toric/family.hpp"
#include "toric/groebner.hpp"
#include "toric/lattice.hpp"
#include "toric/polyring.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace toric {

struct SaturationCertificate {
  std::string order;                      // order of the final basis
  std::size_t lattice_generators = 0;     // binomials fed into the saturation
  std::size_t final_basis_size = 0;
  bool all_binomial = false;
};

template <class K>
struct ToricIdealResult {
  Ideal<K> ideal;  // generators: the reduced grevlex basis
  std::vector<Polynomial<K>> minimal_generators;
  LatticeBasis lattice_basis;
  SaturationCertificate certificate;
};

/// x1 * x2 * ... over every variable of the ring.
template <class K>
Polynomial<K> variable_product(const RingPtr<K>& ring);

/// Drops, largest degree first, every generator lying in the ideal of the
/// remaining ones. For ideals homogeneous under a positive grading (every
/// toric ideal of a family) the result is a minimal generating set.
template <class K>
std::vector<Polynomial<K>> minimal_generators(std::span<const Polynomial<K>> gens, const GroebnerOptions& options = {});

/// Toric ideal of the matrix whose columns index the ring variables.
/// Throws BudgetExceeded from the Groebner runs.
template <class K>
ToricIdealResult<K> toric_ideal(const RingPtr<K>& ring, const IntMatrix& matrix, const GroebnerOptions& options = {});

/// Toric ideal of a valid family, in family_ring(n, field).
template <class K>
ToricIdealResult<K> toric_ideal(const FamilyParams& params, const K& field, const GroebnerOptions& options = {});

/// ideal(gens) == ideal and no generator lies in the ideal of the others.
template <class K>
bool verify_minimal_generation(std::span<const Polynomial<K>> gens, const Ideal<K>& ideal);

/// Every equation of the set is a member of the ideal.
template <class K>
bool contains_equation_set(const Ideal<K>& ideal, const EquationSet<K>& eqs);

/// Saturating again by the product of all variables changes nothing.
template <class K>
bool is_saturated(const Ideal<K>& ideal);

/// The reduced grevlex basis over Q (content-free, so integral), reduced mod p,
/// against the reduced grevlex basis over F_p.
/// They agree for all but finitely many p; a disagreement is reported, not hidden.
struct ReductionComparison {
  std::uint64_t prime = 0;
  bool matches = false;
  std::vector<std::string> only_rational;  // Q basis elements mod p (made monic) missing over F_p
  std::vector<std::string> only_prime;     // F_p basis elements with no Q counterpart
};

/// Both ideals must live in rings with the same variable names.
ReductionComparison compare_reduction(const Ideal<RationalField>& rational, const Ideal<PrimeField>& prime);

}  // namespace toric
