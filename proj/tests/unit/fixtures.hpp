#pragma once

#include <random>
#include <vector>

#include "trisurf/comb_map.hpp"
#include "trisurf/oracle.hpp"

namespace fixtures {

using trisurf::CombMap;
using trisurf::Dart;

// sigma = (1 2 3)(4 5 6) with the given alpha images.
inline CombMap two_triangles(std::vector<Dart> alpha) { return {{2, 3, 1, 5, 6, 4}, std::move(alpha), 1}; }

// alpha = (1 4)(2 6)(3 5): the sphere with three vertices.
inline CombMap sphere2() { return two_triangles({4, 6, 5, 1, 3, 2}); }
// alpha = (1 4)(2 5)(3 6): the one-vertex torus.
inline CombMap torus1() { return two_triangles({4, 5, 6, 1, 2, 3}); }

inline std::vector<CombMap> oracle_maps(int max_n = 3) {
  std::vector<CombMap> out;
  for (int n = 1; n <= max_n; ++n)
    for (int g = 0; g <= (n + 1) / 2; ++g)
      for (auto& m : trisurf::enumerate_rooted(n, g)) out.push_back(std::move(m));
  return out;
}

inline std::vector<Dart> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Dart> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace fixtures
