#pragma once

#include "topo/complex.hpp"
#include "topo/geometry.hpp"

#include <random>
#include <vector>

namespace topo::test {

inline SimplicialComplex cx(const std::vector<Face>& facets) { return SimplicialComplex::from_facets(facets); }

inline std::vector<long> fv(std::initializer_list<long> l) { return std::vector<long>(l); }

inline Vec pt(std::initializer_list<Q> l) { return Vec(l); }

// Random pure 2-complex on n vertices: k random triangles.
inline SimplicialComplex random_2complex(int n, int k, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Face> fs;
  while (static_cast<int>(fs.size()) < k) {
    int a = rng() % n, b = rng() % n, c = rng() % n;
    if (a == b || b == c || a == c) continue;
    fs.push_back(make_face({a, b, c}));
  }
  return SimplicialComplex::from_facets(fs);
}

}  // namespace topo::test
