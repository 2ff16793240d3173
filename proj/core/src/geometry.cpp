#include "topo/geometry.hpp"

#include "topo/errors.hpp"
#include "topo/polytope.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace topo {

const Vec& GeometricComplex::at(int v) const {
  auto it = pos.find(v);
  if (it == pos.end()) throw TopoError(ErrorKind::InputError, "vertex " + std::to_string(v) + " has no position");
  return it->second;
}

std::vector<Vec> GeometricComplex::points(const Face& f) const {
  std::vector<Vec> out;
  out.reserve(f.size());
  for (int v : f) out.push_back(at(v));
  return out;
}

Vec GeometricComplex::barycenter(const Face& f) const { return centroid(points(f)); }

GeometricComplex GeometricComplex::restricted_to(const SimplicialComplex& sub) const {
  GeometricComplex g;
  g.complex = sub;
  for (int v : sub.vertices()) g.pos[v] = at(v);
  return g;
}

Vec project_affine(const std::vector<Vec>& pts, const Vec& w, Vec& lambda) {
  if (pts.size() == 1) {
    lambda = Vec{Q(1)};
    return pts[0];
  }
  std::vector<Vec> rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  Vec coef;
  Vec off = sub(w, pts[0]);
  Vec proj;
  try {
    proj = add(pts[0], project_onto_span(rows, off, &coef));
  } catch (const TopoError&) {
    throw TopoError(ErrorKind::DegenerateFacet, "affinely dependent face");
  }
  lambda.assign(pts.size(), Q(0));
  Q s = 0;
  for (size_t i = 0; i < coef.size(); ++i) {
    lambda[i + 1] = coef[i];
    s += coef[i];
  }
  lambda[0] = 1 - s;
  return proj;
}

ClosestPoint closest_point_on_faces(const Vec& w, const std::vector<Face>& faces, const GeometricComplex& G) {
  std::optional<ClosestPoint> best;
  std::optional<Face> rival;  // another face attaining best->dist2 at a different point
  for (const Face& f : faces) {
    Vec lambda;
    Vec p = project_affine(G.points(f), w, lambda);
    bool interior = true;
    for (auto& l : lambda)
      if (sgn(l) <= 0) {
        interior = false;
        break;
      }
    if (!interior) continue;
    Q d2 = norm2(sub(p, w));
    if (!best || d2 < best->dist2) {
      best = ClosestPoint{p, f, d2};
      rival.reset();
    } else if (d2 == best->dist2 && p != best->point && !rival) {
      rival = f;
    }
  }
  if (!best) throw TopoError(ErrorKind::EmptyInput, "no faces to minimize over");
  if (rival)
    throw TopoError(ErrorKind::NonUniqueMinimum,
                    "faces " + to_string(best->carrier) + " and " + to_string(*rival) + " both attain the minimum");
  return *best;
}

ClosestPoint closest_point_on_star(const Vec& w, const Face& s, const GeometricComplex& G) {
  SimplicialComplex st = star(s, G.complex);
  std::vector<Face> faces = st.sorted_faces();
  return closest_point_on_faces(w, faces, G);
}

Q simplex_volume(const std::vector<Vec>& pts) {
  Mat rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  Q det = abs(determinant(rows));
  for (size_t i = 2; i < pts.size(); ++i) det /= static_cast<unsigned long>(i);
  return det;
}

bool is_convex_support(const GeometricComplex& G) {
  const SimplicialComplex& C = G.complex;
  int d = G.ambient_dim();
  if (C.empty()) throw TopoError(ErrorKind::EmptyInput, "empty complex");
  if (!C.is_pure() || C.dim() != d) throw TopoError(ErrorKind::Precondition, "complex must be pure and full-dimensional");
  Q total = 0;
  for (const Face& f : C.facets()) {
    Q v = simplex_volume(G.points(f));
    if (v == 0) throw TopoError(ErrorKind::DegenerateFacet, "facet " + to_string(f) + " has zero volume");
    total += v;
  }
  if (d == 0) return C.vertices().size() == 1;
  std::map<int, Vec> pts;
  for (int v : C.vertices()) pts[v] = G.at(v);
  Polytope P = convex_hull(pts);
  return total == polytope_volume(P);
}

SupportOracle::SupportOracle(const GeometricComplex& G) {
  const SimplicialComplex& C = G.complex;
  d_ = static_cast<size_t>(G.ambient_dim());
  if (C.empty()) throw TopoError(ErrorKind::EmptyInput, "empty complex");
  if (!C.is_pure() || C.dim() != static_cast<int>(d_))
    throw TopoError(ErrorKind::Precondition, "complex must be pure and full-dimensional");
  for (const Face& f : C.facets()) {
    // columns are (p_i, 1); invert by solving against unit vectors
    size_t n = d_ + 1;
    Mat M(n, Vec(n));
    for (size_t j = 0; j < n; ++j) {
      const Vec& p = G.at(f[j]);
      for (size_t i = 0; i < d_; ++i) M[i][j] = p[i];
      M[d_][j] = 1;
    }
    Mat inv(n, Vec(n));
    for (size_t k = 0; k < n; ++k) {
      Vec e(n, Q(0)), x;
      e[k] = 1;
      if (!solve(M, e, x)) throw TopoError(ErrorKind::DegenerateFacet, "facet " + to_string(f) + " is degenerate");
      for (size_t i = 0; i < n; ++i) inv[i][k] = x[i];
    }
    bary_.push_back(std::move(inv));
  }
}

Vec SupportOracle::coords(size_t facet, const Vec& p) const {
  const Mat& A = bary_[facet];
  Vec out(d_ + 1, Q(0));
  for (size_t i = 0; i <= d_; ++i) {
    Q s = A[i][d_];
    for (size_t k = 0; k < d_; ++k) s += A[i][k] * p[k];
    out[i] = s;
  }
  return out;
}

bool SupportOracle::contains(const Vec& p) const {
  for (size_t f = 0; f < bary_.size(); ++f) {
    Vec l = coords(f, p);
    if (std::all_of(l.begin(), l.end(), [](const Q& q) { return sgn(q) >= 0; })) return true;
  }
  return false;
}

bool SupportOracle::contains_segment(const Vec& a, const Vec& b) const {
  std::vector<std::pair<Q, Q>> spans;
  for (size_t f = 0; f < bary_.size(); ++f) {
    Vec la = coords(f, a), lb = coords(f, b);
    Q lo = 0, hi = 1;
    bool empty = false;
    for (size_t i = 0; i < la.size() && !empty; ++i) {
      Q slope = lb[i] - la[i];
      // la + t*slope >= 0
      if (slope == 0) {
        if (la[i] < 0) empty = true;
      } else if (slope > 0) {
        lo = std::max(lo, Q(-la[i] / slope));
      } else {
        hi = std::min(hi, Q(-la[i] / slope));
      }
      if (lo > hi) empty = true;
    }
    if (!empty) spans.push_back({lo, hi});
  }
  std::sort(spans.begin(), spans.end());
  Q reach = 0;
  bool started = false;
  for (auto& [lo, hi] : spans) {
    if (!started) {
      if (lo > 0) return false;
      started = true;
    } else if (lo > reach) {
      return false;
    }
    reach = std::max(reach, hi);
  }
  return started && reach >= 1;
}

StarShapedResult star_shaped_check(const GeometricComplex& G, const Vec& x) {
  SupportOracle S(G);
  if (!S.contains(x)) throw TopoError(ErrorKind::PointOutsideComplex, "star center is not in the complex");
  StarShapedResult r;
  std::vector<Vec> witnesses;
  for (int v : G.complex.vertices()) witnesses.push_back(G.at(v));
  for (const Face& f : G.complex.facets()) witnesses.push_back(G.barycenter(f));
  for (const Vec& y : witnesses) {
    if (!S.contains_segment(x, y)) {
      r.witness = y;
      return r;
    }
  }
  r.star_shaped = true;
  return r;
}

bool is_star_shaped(const GeometricComplex& G, const Vec& x) { return star_shaped_check(G, x).star_shaped; }

bool is_generic_direction(const GeometricComplex& G, const Vec& nu) {
  if (is_zero(nu)) return false;
  std::set<Q> seen;
  for (int v : G.complex.vertices())
    if (!seen.insert(dot(G.at(v), nu)).second) return false;
  return true;
}

Vec generic_direction(const GeometricComplex& G, uint64_t seed, int max_attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-1000, 1000);
  int d = G.ambient_dim();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Vec nu(d);
    for (auto& x : nu) x = coord(rng);
    if (is_generic_direction(G, nu)) return nu;
  }
  throw TopoError(ErrorKind::RetryBudgetExceeded, "no generic direction found");
}

SplitLink split_link(int v, const Vec& nu, const GeometricComplex& G) {
  SimplicialComplex L = link({v}, G.complex);
  const Vec& pv = G.at(v);
  std::map<int, Q> h;
  int next_id = 0;
  for (int u : G.complex.vertices()) next_id = std::max(next_id, u + 1);
  for (int u : L.vertices()) {
    Q s = dot(sub(G.at(u), pv), nu);
    if (s == 0) throw TopoError(ErrorKind::NonGenericDirection, "edge to " + std::to_string(u) + " is orthogonal to the direction");
    h[u] = s;
  }
  SplitLink out;
  FaceMap<int> cross;
  for (const Face& e : L.faces_of_dim(1)) {
    int a = e[0], b = e[1];
    if (sgn(h[a]) == sgn(h[b])) continue;
    Q lam = h[b] / (h[b] - h[a]);
    Vec dir = add(scale(sub(G.at(a), pv), lam), scale(sub(G.at(b), pv), 1 - lam));
    cross[e] = next_id;
    out.dirs[next_id] = dir;
    out.origin[next_id] = e;
    ++next_id;
  }
  for (int u : L.vertices())
    if (h[u] < 0) out.dirs[u] = sub(G.at(u), pv);
  std::vector<std::pair<Face, int>> cells;
  for (const Face& r : L.sorted_faces()) {
    Face below, above;
    for (int u : r) (h[u] < 0 ? below : above).push_back(u);
    if (below.empty()) continue;
    Face cut = below;
    Face eq;
    for (int b : below)
      for (int a : above) eq.push_back(cross.at(make_face({a, b})));
    eq = make_face(eq);
    cut = make_face(face_union(cut, eq));
    cells.push_back({cut, face_dim(r)});
    if (!eq.empty()) cells.push_back({eq, face_dim(r) - 1});
  }
  std::stable_sort(cells.begin(), cells.end(), [](auto& a, auto& b) { return a.second < b.second; });
  for (auto& [c, d] : cells) out.cells.add_cell(c, d);
  return out;
}

SimplicialComplex lower_link(int v, const Vec& nu, const GeometricComplex& G) {
  SimplicialComplex L = link({v}, G.complex);
  const Vec& pv = G.at(v);
  std::vector<int> below;
  for (int u : L.vertices()) {
    Q s = dot(sub(G.at(u), pv), nu);
    if (s == 0) throw TopoError(ErrorKind::NonGenericDirection, "edge to " + std::to_string(u) + " is orthogonal to the direction");
    if (s < 0) below.push_back(u);
  }
  return induced(L, below);
}

SimplicialComplex restrict_to_halfspace(const GeometricComplex& G, const Halfspace& H, bool open) {
  std::vector<int> keep;
  for (int v : G.complex.vertices()) {
    int s = sgn(dot(G.at(v), H.normal) - H.offset);
    if (s > 0 || (!open && s == 0)) keep.push_back(v);
  }
  return induced(G.complex, keep);
}

int spherical_distance_compare(const Vec& a, const Vec& b, const Vec& x) {
  if (is_zero(a) || is_zero(b) || is_zero(x)) throw TopoError(ErrorKind::InputError, "zero ray");
  auto key = [&](const Vec& r) {
    Q c = dot(r, x);
    return Q(sgn(c) * c * c / norm2(r));
  };
  auto antipodal = [&](const Vec& r) {
    Q c = dot(r, x);
    return c < 0 && c * c == norm2(r) * norm2(x);
  };
  if (antipodal(a) && antipodal(b)) throw TopoError(ErrorKind::AntipodalAmbiguity, "both rays are antipodal to the reference");
  Q ka = key(a), kb = key(b);
  return sgn(kb - ka);
}

}  // namespace topo
