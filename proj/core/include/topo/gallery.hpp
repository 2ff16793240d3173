#pragma once

#include "topo/cubical.hpp"
#include "topo/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topo::gallery {

GeometricComplex simplex(int d);
GeometricComplex boundary_sphere(int d);  // ∂Δ^d
SimplicialComplex cone_over(const SimplicialComplex& base, int apex);
SimplicialComplex dunce_hat();
GeometricComplex bing_house();
CubicalComplex grid(int m, int n);
// pattern 0: all "/", 1: all "\", 2: alternating
GeometricComplex tri_grid(int m, int n, int pattern);
// pi[i-1] = j means hole i is joined to hole j' (1-based).
SimplicialComplex surface_Mg(int g, const std::vector<int>& pi);
std::vector<int> random_bijection(int g, uint64_t seed);
GeometricComplex wheel(int k);
GeometricComplex lshape_2d(int arm);
GeometricComplex lshape_3d(int arm);
GeometricComplex star_ball(int d);  // a cross of unit cubes
Vec lshape_center(int d);
Vec star_ball_center(int d);
GeometricComplex random_convex(int n, int d, uint64_t seed);
GeometricComplex stellar(const GeometricComplex& G, const Face& f, int new_vertex);
GeometricComplex random_stellar(int d, int k, uint64_t seed);
CubicalComplex staircase(int k);
// Triangulates unit boxes consistently (Freudenthal); vertex ids follow
// lexicographic order of the corners.
GeometricComplex triangulate_boxes(const std::vector<IntPoint>& lower_corners, int d);

struct Spec {
  std::string name;
  std::map<std::string, long> params;
  long get(const std::string& key, long fallback) const;
};

struct Item {
  std::string name;
  bool cubical = false;
  GeometricComplex complex;          // positions may be empty
  std::optional<CubicalComplex> cubes;
  std::optional<Vec> center;         // a star center when known
};

Item generate(const Spec& spec);
std::vector<std::string> names();

}  // namespace topo::gallery
