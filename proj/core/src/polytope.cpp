#include "topo/polytope.hpp"

#include "topo/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace topo {

namespace {

// Normal of the hyperplane through d points in R^d (zero if dependent).
Vec hyperplane_normal(const std::vector<Vec>& pts) {
  size_t d = pts.front().size();
  if (d == 1) return Vec{Q(1)};
  Mat rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  Vec n(d);
  // cofactor expansion along a virtual first row of unit vectors
  for (size_t j = 0; j < d; ++j) {
    Mat minor;
    for (auto& r : rows) {
      Vec m;
      for (size_t k = 0; k < d; ++k)
        if (k != j) m.push_back(r[k]);
      minor.push_back(m);
    }
    Q c = determinant(minor);
    n[j] = (j % 2 == 0) ? c : Q(-c);
  }
  return n;
}

void normalize_plane(Vec& n, Q& off) {
  for (auto& x : n) {
    if (x != 0) {
      Q s = abs(x);
      for (auto& y : n) y /= s;
      off /= s;
      return;
    }
  }
}

void combinations(int n, int k, int start, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == k) {
    f(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, f);
    cur.pop_back();
  }
}

Vec centroid_of(const Polytope& P, const Face& f) {
  std::vector<Vec> pts;
  for (int v : f) pts.push_back(P.points.at(v));
  return centroid(pts);
}

}  // namespace

int affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  Mat rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  return rank(rows);
}

Polytope convex_hull(const std::map<int, Vec>& points) {
  if (points.empty()) throw TopoError(ErrorKind::EmptyInput, "no points");
  Polytope P;
  P.points = points;
  P.dim = static_cast<int>(points.begin()->second.size());
  if (P.dim < 1 || P.dim > 3) throw TopoError(ErrorKind::DegenerateInput, "hull supports dimensions 1..3");
  std::vector<int> ids;
  std::vector<Vec> pts;
  for (auto& [id, p] : points) {
    ids.push_back(id);
    pts.push_back(p);
  }
  if (affine_rank(pts) != P.dim) throw TopoError(ErrorKind::DegenerateInput, "points do not span the ambient space");
  int n = static_cast<int>(pts.size());
  std::set<std::pair<Vec, Q>> seen;
  std::vector<int> cur;
  combinations(n, P.dim, 0, cur, [&](const std::vector<int>& idx) {
    std::vector<Vec> sel;
    for (int i : idx) sel.push_back(pts[i]);
    Vec nrm = hyperplane_normal(sel);
    if (is_zero(nrm)) return;
    Q off = dot(nrm, sel[0]);
    int side = 0;
    for (int i = 0; i < n; ++i) {
      int s = sign(dot(nrm, pts[i]) - off);
      if (s == 0) continue;
      if (side == 0) side = s;
      else if (s != side) return;
    }
    if (side > 0) {
      for (auto& x : nrm) x = -x;
      off = -off;
    }
    normalize_plane(nrm, off);
    if (!seen.insert({nrm, off}).second) return;
    P.planes.push_back({nrm, off});
  });
  // extreme points: the normals of the facets through them have full rank
  std::vector<std::vector<int>> on(n);
  for (size_t f = 0; f < P.planes.size(); ++f)
    for (int i = 0; i < n; ++i)
      if (dot(P.planes[f].normal, pts[i]) == P.planes[f].offset) on[i].push_back(static_cast<int>(f));
  std::set<int> extreme;
  for (int i = 0; i < n; ++i) {
    Mat normals;
    for (int f : on[i]) normals.push_back(P.planes[f].normal);
    if (rank(normals) == P.dim) extreme.insert(ids[i]);
  }
  P.vertices.assign(extreme.begin(), extreme.end());
  for (size_t f = 0; f < P.planes.size(); ++f) {
    Face fv;
    for (int i = 0; i < n; ++i)
      if (extreme.count(ids[i]) && dot(P.planes[f].normal, pts[i]) == P.planes[f].offset) fv.push_back(ids[i]);
    P.facets.push_back(make_face(fv));
  }
  std::set<Face> faces(P.facets.begin(), P.facets.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Face> cur_faces(faces.begin(), faces.end());
    for (size_t i = 0; i < cur_faces.size(); ++i)
      for (size_t j = i + 1; j < cur_faces.size(); ++j) {
        Face g = face_intersection(cur_faces[i], cur_faces[j]);
        if (!g.empty() && faces.insert(g).second) grew = true;
      }
  }
  faces.insert(P.whole());
  for (const Face& f : faces) {
    std::vector<Vec> fp;
    for (int v : f) fp.push_back(P.points.at(v));
    P.face_dim[f] = affine_rank(fp);
    P.faces.push_back(f);
  }
  std::sort(P.faces.begin(), P.faces.end(), [&](const Face& a, const Face& b) {
    int da = P.face_dim.at(a), db = P.face_dim.at(b);
    if (da != db) return da < db;
    return a < b;
  });
  return P;
}

Face Polytope::whole() const { return make_face(vertices); }

bool Polytope::contains(const Vec& p) const {
  for (auto& pl : planes)
    if (dot(pl.normal, p) > pl.offset) return false;
  return true;
}

Face Polytope::carrier(const std::vector<Vec>& pts) const {
  Face f = whole();
  for (size_t i = 0; i < planes.size(); ++i) {
    bool all_on = true;
    for (auto& p : pts)
      if (dot(planes[i].normal, p) != planes[i].offset) {
        all_on = false;
        break;
      }
    if (all_on) f = face_intersection(f, facets[i]);
  }
  return f;
}

Q polytope_volume(const Polytope& P) {
  Vec c = centroid_of(P, P.whole());
  Q total = 0;
  // sum over full flags F_{d-1} > ... > F_0 of the simplex spanned by face centroids
  std::function<void(const Face&, int, Mat&)> rec = [&](const Face& f, int d, Mat& rows) {
    if (d < 0) {
      total += abs(determinant(rows));
      return;
    }
    for (auto& [g, gd] : P.face_dim) {
      if (gd != d || !is_subface(g, f) || g == f) continue;
      rows.push_back(sub(centroid_of(P, g), c));
      rec(g, d - 1, rows);
      rows.pop_back();
    }
  };
  Mat rows;
  rec(P.whole(), P.dim - 1, rows);
  Q fact = 1;
  for (int i = 2; i <= P.dim; ++i) fact *= i;
  return total / fact;
}

CellComplex polytope_cells(const Polytope& P) {
  CellComplex X;
  for (const Face& f : P.faces) X.add_cell(f, P.face_dim.at(f));
  return X;
}

}  // namespace topo
