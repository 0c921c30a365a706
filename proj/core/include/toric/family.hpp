#pragma once

// The parametric family of affine toric varieties V in K^{2n}:
//
//   x_i = u_i^{d_i}              (i < n)      y_i = u_i^{f_i} u_n^{g_i}   (i < n)
//   x_n = u_n                                 y_n = u_1^{h_1} ... u_{n-1}^{h_{n-1}}
//
// together with its n+1 binomial equations F_1..F_{n-1}, F, G.
//
// Index arguments and reported indices are 1-based, matching variable names.

#include "toric/exactmath.hpp"
#include "toric/lattice.hpp"
#include "toric/polyring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct FamilyParams {
  std::size_t n = 0;
  std::vector<std::int64_t> d;
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> g;
  std::vector<std::int64_t> h;

  /// n = 3, d = (2,3), f = (3,5), g = (1,1), h = (3,5).
  static FamilyParams worked_example();

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Condition names used in validation reports.
namespace conditions {
inline constexpr const char* kStructure = "structure";
inline constexpr const char* kCoprimeDF = "coprime_d_f";        // gcd(d_i, f_i) = 1
inline constexpr const char* kCoprimeDH = "coprime_d_h";        // gcd(d_i, h_i) = 1
inline constexpr const char* kPairwiseD = "pairwise_coprime_d";  // gcd(d_i, d_j) = 1, i != j
inline constexpr const char* kTwoPrimes = "two_primes";         // distinct primes p | d_i, q | d_j
}  // namespace conditions

struct Violation {
  std::string condition;
  std::vector<std::size_t> indices;
  std::string message;
};

/// Distinct primes p | d_i and q | d_j.
struct PrimeWitness {
  Int p;
  Int q;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::optional<PrimeWitness> witness;

  bool ok() const { return violations.empty(); }
};

/// Every violated condition is reported, not just the first.
ValidationReport validate(const FamilyParams& params);

class InvalidFamily : public std::invalid_argument {
 public:
  explicit InvalidFamily(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Throws InvalidFamily unless validate(params).ok().
void require_valid(const FamilyParams& params);

/// n x 2n matrix whose columns are d_1e_1, ..., d_{n-1}e_{n-1}, e_n,
/// f_1e_1 + g_1e_n, ..., f_{n-1}e_{n-1} + g_{n-1}e_n, h_1e_1 + ... + h_{n-1}e_{n-1}.
/// Only the structural shape of params is required.
IntMatrix exponent_matrix(const FamilyParams& params);

/// The parametrization at u in K^n.
template <class K>
std::vector<typename K::Element> phi(const FamilyParams& params, const K& field,
                                     std::span<const typename K::Element> u);
std::vector<FieldElement> phi(const FamilyParams& params, std::span<const FieldElement> u);

struct BezoutPair {
  Int alpha;
  Int beta;
};

/// h_i = alpha_i d_i + beta_i f_i with beta_i the representative of
/// h_i f_i^{-1} mod d_i in [0, d_i). Throws std::domain_error if gcd(d_i, f_i) != 1.
std::vector<BezoutPair> bezout_pairs(const FamilyParams& params);

BinomialVector fi_vector(const FamilyParams& params, std::size_t i);
BinomialVector f_vector(const FamilyParams& params);
BinomialVector g_vector(const FamilyParams& params);
/// F_1..F_{n-1}, F, G in that order.
std::vector<BinomialVector> equation_vectors(const FamilyParams& params);
/// "F1".."F{n-1}", "F", "G".
std::vector<std::string> equation_names(std::size_t n);

/// F_i = y_i^{d_i} - x_i^{f_i} x_n^{d_i g_i}. Throws std::out_of_range for i outside [1, n-1].
template <class K>
Polynomial<K> build_fi(const RingPtr<K>& ring, const FamilyParams& params, std::size_t i);
/// F = y_n^{d_1...d_{n-1}} - prod_i x_i^{h_i prod_{k != i} d_k}.
template <class K>
Polynomial<K> build_f(const RingPtr<K>& ring, const FamilyParams& params);
/// G = B(alpha_1..alpha_{n-1}, -sum beta_i g_i, beta_1..beta_{n-1}, -1).
template <class K>
Polynomial<K> build_g(const RingPtr<K>& ring, const FamilyParams& params);

template <class K>
struct EquationSet {
  std::vector<Polynomial<K>> f_list;
  Polynomial<K> f;
  Polynomial<K> g;

  /// F_1..F_{n-1}, F, G.
  std::vector<Polynomial<K>> all() const;
  std::vector<std::string> names() const { return equation_names(f_list.size() + 1); }
};

/// The n+1 equations in `ring` (which must have at least 2n variables).
/// Throws InvalidFamily for invalid parameters.
template <class K>
EquationSet<K> equations(const RingPtr<K>& ring, const FamilyParams& params);

/// Codimension of V; n, cross-checked against 2n - rank of the exponent matrix.
std::size_t codim(const FamilyParams& params);

}  // namespace toric
