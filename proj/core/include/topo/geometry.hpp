#pragma once

#include "topo/cell_complex.hpp"
#include "topo/complex.hpp"
#include "topo/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace topo {

struct GeometricComplex {
  SimplicialComplex complex;
  std::map<int, Vec> pos;

  int ambient_dim() const { return pos.empty() ? 0 : static_cast<int>(pos.begin()->second.size()); }
  const Vec& at(int v) const;
  std::vector<Vec> points(const Face& f) const;
  Vec barycenter(const Face& f) const;
  GeometricComplex restricted_to(const SimplicialComplex& sub) const;
};

// Vertices as rays in R^n; a point of the sphere is a ray up to positive scaling.
struct SphericalComplex {
  SimplicialComplex complex;
  std::map<int, Vec> ray;
};

// Closed halfspace {y : <y, normal> >= offset}.
struct Halfspace {
  Vec normal;
  Q offset;
};

struct ClosestPoint {
  Vec point;
  Face carrier;  // face containing the point in its relative interior
  Q dist2;
};

// Orthogonal projection of w onto the affine hull of pts; lambda gets the
// affine (barycentric) coordinates.
Vec project_affine(const std::vector<Vec>& pts, const Vec& w, Vec& lambda);

// Minimizer of |y - w|^2 over the union of the given faces (a downward-closed set).
ClosestPoint closest_point_on_faces(const Vec& w, const std::vector<Face>& faces, const GeometricComplex& G);
ClosestPoint closest_point_on_star(const Vec& w, const Face& s, const GeometricComplex& G);

Q simplex_volume(const std::vector<Vec>& pts);  // |det| / d!
bool is_convex_support(const GeometricComplex& G);

// Exact point/segment membership for a pure complex of full ambient dimension.
class SupportOracle {
 public:
  explicit SupportOracle(const GeometricComplex& G);
  bool contains(const Vec& p) const;
  bool contains_segment(const Vec& a, const Vec& b) const;

 private:
  std::vector<Mat> bary_;  // per facet: affine map to barycentric coordinates
  size_t d_ = 0;
  Vec coords(size_t facet, const Vec& p) const;
};

struct StarShapedResult {
  bool star_shaped = false;
  std::optional<Vec> witness;  // a point y whose segment [x,y] leaves |G|
};

StarShapedResult star_shaped_check(const GeometricComplex& G, const Vec& x);
bool is_star_shaped(const GeometricComplex& G, const Vec& x);

bool is_generic_direction(const GeometricComplex& G, const Vec& nu);
Vec generic_direction(const GeometricComplex& G, uint64_t seed, int max_attempts = 1000);

struct SplitLink {
  CellComplex cells;           // cut cells, identified by vertex sets
  std::map<int, Vec> dirs;     // direction vectors at v for every vertex of the split link
  std::map<int, Face> origin;  // new vertex id -> crossing link edge
};

SplitLink split_link(int v, const Vec& nu, const GeometricComplex& G);
SimplicialComplex lower_link(int v, const Vec& nu, const GeometricComplex& G);

SimplicialComplex restrict_to_halfspace(const GeometricComplex& G, const Halfspace& H, bool open = false);

// Compares the angular distances of rays a and b to ray x: negative when a is
// closer, zero when equal, positive when b is closer.
int spherical_distance_compare(const Vec& a, const Vec& b, const Vec& x);
inline bool spherical_distance_less(const Vec& a, const Vec& b, const Vec& x) {
  return spherical_distance_compare(a, b, x) < 0;
}

}  // namespace topo
