#pragma once

// Random nerves and exact twists F = ∂η for property tests.

#include <algorithm>
#include <random>

#include "twcech/twist.hpp"

namespace twcech::testing {

/// Up to `max_vertices` vertices, a few random facets of size 2..5.
inline Nerve random_nerve(std::mt19937_64& rng, int max_vertices = 6) {
  std::uniform_int_distribution<int> nv(3, max_vertices), nf(2, 5), size(2, 5);
  const int v = nv(rng);
  std::vector<std::vector<int>> facets;
  const int count = nf(rng);
  for (int f = 0; f < count; ++f) {
    std::vector<int> all(v);
    for (int i = 0; i < v; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(v, size(rng)));
    std::sort(all.begin(), all.end());
    facets.push_back(all);
  }
  return Nerve::from_facets(facets);
}

inline Cochain<IntegerVector> random_eta(const Nerve& nerve, int n,
                                         std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  Cochain<IntegerVector> eta(1, IntegerVector::zero(n));
  for (const auto& e : nerve.simplices(1)) {
    IntegerVector v(n);
    for (int i = 0; i < n; ++i) v[i] = d(rng);
    eta.set(e, v);
  }
  return eta;
}

/// A validated twist F = ∂η.
inline TwistCocycle random_exact_twist(const Nerve& nerve, int n,
                                       std::mt19937_64& rng) {
  return validate_twist(nerve, n, cech_differential(nerve, random_eta(nerve, n, rng)));
}

}  // namespace twcech::testing
