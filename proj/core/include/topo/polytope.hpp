#pragma once

#include "topo/cell_complex.hpp"
#include "topo/rational.hpp"

#include <map>
#include <vector>

namespace topo {

// Full-dimensional convex polytope in R^d (d <= 3) with its face lattice.
// Faces are identified by the ids of the extreme points they contain.
struct Polytope {
  struct Plane {
    Vec normal;  // outward: <normal, y> <= offset on the polytope
    Q offset;
  };
  int dim = 0;
  std::map<int, Vec> points;  // all input points, by id
  std::vector<int> vertices;  // extreme points
  std::vector<Plane> planes;  // one per facet
  std::vector<Face> facets;   // extreme-point sets, aligned with planes
  std::vector<Face> faces;    // every face including the polytope itself
  std::map<Face, int> face_dim;

  Face whole() const;
  // Smallest face containing all the given points.
  Face carrier(const std::vector<Vec>& pts) const;
  bool contains(const Vec& p) const;
  bool is_simplex() const { return static_cast<int>(vertices.size()) == dim + 1; }
};

// Convex hull of the points; throws DegenerateInput unless the points span R^d.
Polytope convex_hull(const std::map<int, Vec>& points);
Q polytope_volume(const Polytope& P);
CellComplex polytope_cells(const Polytope& P);
int affine_rank(const std::vector<Vec>& pts);  // dimension of the affine hull

}  // namespace topo
