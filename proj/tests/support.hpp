#pragma once

// Shared fixtures: worked-example reference data and random family generators.

#include "toric/family.hpp"
#include "toric/polyring.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace toric::testing {

inline const std::vector<std::string>& worked_example_generators() {
  static const std::vector<std::string> gens = {
      "y1^2 - x1^3*x3^2",       "y2^3 - x2^5*x3^3",       "y3^6 - x1^9*x2^10",
      "x3^2*y3 - y1*y2",        "y1*y3 - x1^3*y2",        "y2*y3^2 - x1^3*x2^5*x3",
      "y2^2*y3 - x2^5*x3*y1",   "x3*y3^3 - x1^3*x2^5*y1",
  };
  return gens;
}

template <class K>
std::vector<Polynomial<K>> parse_all(const RingPtr<K>& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial<K>> out;
  for (const auto& t : texts) out.push_back(Polynomial<K>::parse(ring, t));
  return out;
}

/// p == c * q for some nonzero scalar c (here: c = +-1 suffices for binomials).
template <class K>
bool equal_up_to_sign(const Polynomial<K>& p, const Polynomial<K>& q) {
  return p == q || p == -q;
}

/// Draws valid families with n in {3, 4} and entries in [1, max_entry] by
/// rejection against validate().
/// n = 0 picks n from {3, 4}.
inline FamilyParams random_valid_family(std::mt19937_64& rng, std::int64_t max_entry = 7, std::size_t n = 0) {
  std::uniform_int_distribution<int> pick_n(3, 4);
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  for (;;) {
    FamilyParams p;
    p.n = n ? n : static_cast<std::size_t>(pick_n(rng));
    for (std::size_t i = 0; i + 1 < p.n; ++i) {
      p.d.push_back(entry(rng));
      p.f.push_back(entry(rng));
      p.g.push_back(entry(rng));
      p.h.push_back(entry(rng));
    }
    if (validate(p).ok()) return p;
  }
}

}  // namespace toric::testing
