#include "topo/gallery.hpp"

#include "topo/errors.hpp"
#include "topo/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace topo::gallery {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw TopoError(ErrorKind::BadParameters, what);
}

Vec to_vec(const IntPoint& p) {
  Vec v;
  for (int c : p) v.push_back(Q(c));
  return v;
}

// Sign of the orientation of d points relative to p (d-dimensional determinant).
int side(const std::vector<Vec>& pts, const Vec& p) {
  Mat M;
  for (size_t i = 1; i < pts.size(); ++i) M.push_back(sub(pts[i], pts[0]));
  M.push_back(sub(p, pts[0]));
  return sgn(determinant(M));
}

}  // namespace

GeometricComplex simplex(int d) {
  require(d >= 0 && d <= 8, "simplex dimension out of range");
  GeometricComplex G;
  Face f;
  for (int i = 0; i <= d; ++i) {
    Vec p(d, Q(0));
    if (i > 0) p[i - 1] = 1;
    G.pos[i] = p;
    f.push_back(i);
  }
  G.complex = SimplicialComplex::from_facets({f});
  return G;
}

GeometricComplex boundary_sphere(int d) {
  require(d >= 1 && d <= 8, "sphere dimension out of range");
  GeometricComplex G = simplex(d);
  G.complex = boundary(G.complex);
  return G;
}

SimplicialComplex cone_over(const SimplicialComplex& base, int apex) { return cone(apex, base); }

SimplicialComplex dunce_hat() {
  return SimplicialComplex::from_facets({{1, 2, 4}, {1, 2, 7}, {1, 2, 8}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6},
                                         {1, 5, 6}, {1, 7, 8}, {2, 3, 5}, {2, 3, 7}, {2, 3, 8}, {2, 4, 5},
                                         {3, 4, 8}, {3, 6, 7}, {4, 5, 6}, {4, 6, 8}, {6, 7, 8}});
}

GeometricComplex bing_house() {
  // Box [0,5]x[0,3]x[0,2] split by the floor z=1. The upper room is entered by
  // a tube rising from the bottom through the lower room, the lower room by a
  // tube coming down through the upper one; each room has one wall tying its
  // tube to the outside wall.
  struct Square {
    int axis, c, a, b;
    bool operator<(const Square& o) const { return std::tie(axis, c, a, b) < std::tie(o.axis, o.c, o.a, o.b); }
  };
  std::set<Square> sq;
  const int X = 5, Y = 3, Z = 2;
  for (int x = 0; x < X; ++x)
    for (int y = 0; y < Y; ++y) {
      if (!(x == 1 && y == 1)) sq.insert({2, 0, x, y});
      if (!(x == 3 && y == 1)) sq.insert({2, 2, x, y});
      if (!(x == 1 && y == 1) && !(x == 3 && y == 1)) sq.insert({2, 1, x, y});
    }
  for (int x = 0; x < X; ++x)
    for (int z = 0; z < Z; ++z) {
      sq.insert({1, 0, x, z});
      sq.insert({1, Y, x, z});
    }
  for (int y = 0; y < Y; ++y)
    for (int z = 0; z < Z; ++z) {
      sq.insert({0, 0, y, z});
      sq.insert({0, X, y, z});
    }
  for (auto [cx, cy, z] : {std::tuple{1, 1, 0}, std::tuple{3, 1, 1}}) {
    sq.insert({0, cx, cy, z});
    sq.insert({0, cx + 1, cy, z});
    sq.insert({1, cy, cx, z});
    sq.insert({1, cy + 1, cx, z});
  }
  sq.insert({1, 1, 0, 0});
  sq.insert({1, 1, 4, 1});

  std::map<IntPoint, int> ids;
  std::vector<std::array<IntPoint, 4>> quads;
  for (const Square& s : sq) {
    std::array<IntPoint, 4> q;
    int k = 0;
    for (auto [da, db] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
      IntPoint p(3);
      int o = 0;
      for (int i = 0; i < 3; ++i) {
        if (i == s.axis) {
          p[i] = s.c;
        } else {
          p[i] = (o == 0 ? s.a + da : s.b + db);
          ++o;
        }
      }
      ids[p] = 0;
      q[k++] = p;
    }
    quads.push_back(q);
  }
  int next = 0;
  GeometricComplex G;
  for (auto& [p, id] : ids) {
    id = next++;
    G.pos[id] = to_vec(p);
  }
  std::vector<Face> facets;
  for (const auto& q : quads) {
    facets.push_back(make_face({ids[q[0]], ids[q[1]], ids[q[2]]}));
    facets.push_back(make_face({ids[q[0]], ids[q[2]], ids[q[3]]}));
  }
  G.complex = SimplicialComplex::from_facets(facets);
  return G;
}

CubicalComplex grid(int m, int n) {
  require(m >= 1 && n >= 1, "grid needs m, n >= 1");
  std::vector<Box> boxes;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) boxes.push_back({{i, i + 1}, {j, j + 1}});
  return CubicalComplex::from_boxes(boxes);
}

GeometricComplex tri_grid(int m, int n, int pattern) {
  require(m >= 1 && n >= 1, "tri_grid needs m, n >= 1");
  require(pattern >= 0 && pattern <= 2, "pattern must be 0, 1 or 2");
  GeometricComplex G;
  auto id = [&](int i, int j) { return i * (n + 1) + j; };
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) G.pos[id(i, j)] = {Q(i), Q(j)};
  std::vector<Face> facets;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      bool slash = pattern == 0 || (pattern == 2 && (i + j) % 2 == 0);
      int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      if (slash) {
        facets.push_back(make_face({a, b, c}));
        facets.push_back(make_face({a, c, d}));
      } else {
        facets.push_back(make_face({a, b, d}));
        facets.push_back(make_face({b, c, d}));
      }
    }
  G.complex = SimplicialComplex::from_facets(facets);
  return G;
}

std::vector<int> random_bijection(int g, uint64_t seed) {
  std::vector<int> p(g);
  std::iota(p.begin(), p.end(), 1);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
  }
  return p;
}

SimplicialComplex surface_Mg(int g, const std::vector<int>& pi) {
  require(g >= 1, "genus must be positive");
  require(static_cast<int>(pi.size()) == g, "bijection has the wrong size");
  std::vector<int> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g; ++i) require(sorted[i] == i + 1, "pi is not a bijection of 1..g");
  const int W = 4 * g;
  auto b = [](int k) { return k; };
  auto t = [W](int k) { return W + 1 + k; };
  const int apex = 2 * W + 2;
  // triangles of the strip, left to right
  std::vector<Face> strip;
  for (int k = 1; k <= W; ++k) {
    if (k <= 2 * g) {  // backslash
      strip.push_back(make_face({t(k - 1), b(k - 1), b(k)}));
      strip.push_back(make_face({t(k - 1), t(k), b(k)}));
    } else {  // slash
      strip.push_back(make_face({b(k - 1), t(k - 1), t(k)}));
      strip.push_back(make_face({b(k - 1), b(k), t(k)}));
    }
  }
  strip.pop_back();
  SimplicialComplex B = SimplicialComplex::from_facets(strip);
  std::vector<Face> facets = strip;
  SimplicialComplex rim = boundary(B);
  for (const Face& e : rim.facets()) facets.push_back(face_with(e, apex));
  auto a = [g](int j) { return j <= g ? 4 * j - 2 : 4 * j - 1; };
  std::set<Face> holes;
  for (int j = 1; j <= 2 * g; ++j) holes.insert(strip[a(j) - 1]);
  std::vector<Face> kept;
  for (const Face& f : facets)
    if (!holes.count(f)) kept.push_back(f);
  for (int i = 1; i <= g; ++i) {
    int j = g + pi[i - 1];
    // hole i is {t(2i-2), t(2i-1), b(2i-1)}: leftmost t(2i-2), other top vertex t(2i-1)
    // hole j is {b(2j-1), t(2j-1), t(2j)}: rightmost t(2j), other top vertex t(2j-1)
    int x1 = t(2 * i - 2), u1 = t(2 * i - 1), r1 = b(2 * i - 1);
    int x2 = t(2 * j), u2 = t(2 * j - 1), r2 = b(2 * j - 1);
    std::array<std::pair<int, int>, 3> rim{{{x1, x2}, {u1, u2}, {r1, r2}}};
    for (int e = 0; e < 3; ++e) {
      auto [p, p2] = rim[e];
      auto [q, q2] = rim[(e + 1) % 3];
      kept.push_back(make_face({p, q, q2}));
      kept.push_back(make_face({p, q2, p2}));
    }
  }
  return SimplicialComplex::from_facets(kept);
}

GeometricComplex wheel(int k) {
  require(k >= 3, "wheel needs k >= 3");
  GeometricComplex G;
  G.pos[0] = {Q(0), Q(0)};
  // rational points on the unit circle, t = tan(angle / 2)
  for (int i = 0; i < k; ++i) {
    double ang = -3.14159265358979 + 2 * 3.14159265358979 * (i + 0.5) / k;
    Q tq = ratio(static_cast<long>(std::tan(ang / 2) * 1000), 1000);
    Q den = 1 + tq * tq;
    G.pos[i + 1] = {(1 - tq * tq) / den, 2 * tq / den};
  }
  std::vector<Face> facets;
  for (int i = 0; i < k; ++i) facets.push_back(make_face({0, i + 1, (i + 1) % k + 1}));
  G.complex = SimplicialComplex::from_facets(facets);
  return G;
}

GeometricComplex triangulate_boxes(const std::vector<IntPoint>& lower, int d) {
  std::set<IntPoint> corners;
  std::vector<std::vector<IntPoint>> simplices;
  std::vector<int> perm(d);
  for (const IntPoint& a : lower) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<IntPoint> s{a};
      IntPoint p = a;
      for (int axis : perm) {
        p[axis] += 1;
        s.push_back(p);
      }
      for (auto& q : s) corners.insert(q);
      simplices.push_back(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::map<IntPoint, int> ids;
  GeometricComplex G;
  for (const IntPoint& p : corners) {
    int id = static_cast<int>(ids.size());
    ids[p] = id;
    G.pos[id] = to_vec(p);
  }
  std::vector<Face> facets;
  for (const auto& s : simplices) {
    std::vector<int> f;
    for (const auto& q : s) f.push_back(ids[q]);
    facets.push_back(make_face(f));
  }
  G.complex = SimplicialComplex::from_facets(facets);
  return G;
}

GeometricComplex lshape_2d(int arm) {
  require(arm >= 2, "arm must be at least 2");
  std::vector<IntPoint> cells;
  for (int i = 0; i < arm; ++i) cells.push_back({i, 0});
  for (int j = 1; j < arm; ++j) cells.push_back({0, j});
  return triangulate_boxes(cells, 2);
}

GeometricComplex lshape_3d(int arm) {
  require(arm >= 2, "arm must be at least 2");
  std::vector<IntPoint> cells;
  for (int i = 0; i < arm; ++i) cells.push_back({i, 0, 0});
  for (int j = 1; j < arm; ++j) cells.push_back({0, j, 0});
  return triangulate_boxes(cells, 3);
}

Vec lshape_center(int d) {
  Vec c;
  Q vals[3] = {Q(1, 3), Q(2, 5), Q(3, 7)};
  for (int i = 0; i < d; ++i) c.push_back(vals[i]);
  return c;
}

GeometricComplex star_ball(int d) {
  require(d == 2 || d == 3, "star_ball is defined for d = 2, 3");
  std::vector<IntPoint> cells{IntPoint(d, 1)};
  for (int i = 0; i < d; ++i)
    for (int s : {0, 2}) {
      IntPoint p(d, 1);
      p[i] = s;
      cells.push_back(p);
    }
  return triangulate_boxes(cells, d);
}

Vec star_ball_center(int d) {
  Vec c = lshape_center(d);
  for (Q& x : c) x += 1;
  return c;
}

GeometricComplex random_convex(int n, int d, uint64_t seed) {
  require(d == 2 || d == 3, "random_convex supports d = 2, 3");
  require(n >= d + 1, "need at least d+1 points");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-1000, 1000);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<IntPoint> pts;
    while (static_cast<int>(pts.size()) < n) {
      IntPoint p(d);
      for (int& c : p) c = coord(rng);
      pts.insert(p);
    }
    std::vector<Vec> P;
    for (const auto& p : pts) P.push_back(to_vec(p));  // lexicographic
    std::vector<Vec> first(P.begin(), P.begin() + d + 1);
    if (affine_rank(first) != d) continue;
    std::vector<Face> simplices;
    Face f0(d + 1);
    std::iota(f0.begin(), f0.end(), 0);
    simplices.push_back(f0);
    bool ok = true;
    for (int i = d + 1; i < n && ok; ++i) {
      SimplicialComplex cur = SimplicialComplex::from_facets(simplices);
      SimplicialComplex bd = boundary(cur);
      bool any = false;
      for (const Face& F : bd.facets()) {
        const Face& S = cur.facets()[cur.facets_containing(F).front()];
        int q = face_minus(S, F).front();
        std::vector<Vec> fp;
        for (int v : F) fp.push_back(P[v]);
        int sp = side(fp, P[i]), sq = side(fp, P[q]);
        if (sp == 0) {
          ok = false;
          break;
        }
        if (sp != sq) {
          simplices.push_back(face_with(F, i));
          any = true;
        }
      }
      ok = ok && any;
    }
    if (!ok) continue;
    GeometricComplex G;
    for (int i = 0; i < n; ++i) G.pos[i] = P[i];
    G.complex = SimplicialComplex::from_facets(simplices);
    return G;
  }
  throw TopoError(ErrorKind::RetryBudgetExceeded, "no point set in general position");
}

GeometricComplex stellar(const GeometricComplex& G, const Face& f, int new_vertex) {
  if (!G.complex.contains(f)) throw TopoError(ErrorKind::FaceNotInComplex, to_string(f));
  if (G.complex.has_vertex(new_vertex)) throw TopoError(ErrorKind::VertexClash, std::to_string(new_vertex));
  GeometricComplex out = G;
  out.pos[new_vertex] = G.barycenter(f);
  std::vector<Face> facets;
  for (const Face& F : G.complex.facets()) {
    if (!is_subface(f, F)) {
      facets.push_back(F);
      continue;
    }
    for (int u : f) facets.push_back(face_with(face_without(F, u), new_vertex));
  }
  out.complex = SimplicialComplex::from_facets(facets);
  return out;
}

GeometricComplex random_stellar(int d, int k, uint64_t seed) {
  GeometricComplex G = simplex(d);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < k; ++i) {
    std::vector<Face> faces;
    for (const Face& f : G.complex.faces())
      if (f.size() > 1) faces.push_back(f);
    std::sort(faces.begin(), faces.end(), dim_lex_less);
    const Face& f = faces[rng() % faces.size()];
    G = stellar(G, f, d + 1 + i);
  }
  return G;
}

CubicalComplex staircase(int k) {
  require(k >= 1, "staircase needs k >= 1");
  std::vector<Box> boxes;
  for (int i = 0; i < k; ++i)
    for (int j = 0; i + j < k; ++j) boxes.push_back({{i, i + 1}, {j, j + 1}});
  return CubicalComplex::from_boxes(boxes);
}

long Spec::get(const std::string& key, long fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::vector<std::string> names() {
  return {"simplex",     "boundary_sphere", "cone",      "dunce_hat", "bing_house",    "grid",
          "tri_grid",    "surface_Mg",      "wheel",     "lshape_2d", "lshape_3d",     "star_ball",
          "random_convex", "stellar",       "staircase"};
}

Item generate(const Spec& spec) {
  Item it;
  it.name = spec.name;
  const std::string& n = spec.name;
  auto p = [&](const char* k, long dflt) { return static_cast<int>(spec.get(k, dflt)); };
  auto cubical = [&](CubicalComplex K) {
    it.cubical = true;
    it.cubes = K;
    for (size_t v = 0; v < K.num_vertices(); ++v) {
      Vec q;
      for (int c : K.point(static_cast<int>(v))) q.push_back(Q(c));
      it.complex.pos[static_cast<int>(v)] = q;
    }
  };
  if (n == "simplex") {
    it.complex = simplex(p("d", 2));
  } else if (n == "boundary_sphere") {
    it.complex = boundary_sphere(p("d", 2));
  } else if (n == "cone") {
    int base = p("base", 0);
    SimplicialComplex B;
    if (base == 0) B = boundary_sphere(p("d", 2)).complex;
    else if (base == 1) B = dunce_hat();
    else if (base == 2) B = bing_house().complex;
    else require(false, "cone base must be 0 (sphere), 1 (dunce hat) or 2 (Bing's house)");
    int apex = B.vertices().back() + 1;
    it.complex.complex = cone_over(B, apex);
  } else if (n == "dunce_hat") {
    it.complex.complex = dunce_hat();
  } else if (n == "bing_house") {
    it.complex = bing_house();
  } else if (n == "grid") {
    cubical(grid(p("m", 2), p("n", 2)));
  } else if (n == "tri_grid") {
    it.complex = tri_grid(p("m", 2), p("n", 2), p("pattern", 0));
  } else if (n == "surface_Mg") {
    int g = p("g", 1);
    require(g >= 1 && g <= 50, "genus out of range");
    it.complex.complex = surface_Mg(g, random_bijection(g, spec.get("seed", 0)));
  } else if (n == "wheel") {
    it.complex = wheel(p("k", 5));
  } else if (n == "lshape_2d" || n == "lshape_3d") {
    int d = n == "lshape_2d" ? 2 : 3;
    it.complex = d == 2 ? lshape_2d(p("arm", 2)) : lshape_3d(p("arm", 2));
    it.center = lshape_center(d);
  } else if (n == "star_ball") {
    int d = p("d", 3);
    it.complex = star_ball(d);
    it.center = star_ball_center(d);
  } else if (n == "random_convex") {
    it.complex = random_convex(p("n", 8), p("d", 2), spec.get("seed", 0));
  } else if (n == "stellar") {
    it.complex = random_stellar(p("d", 2), p("k", 3), spec.get("seed", 0));
  } else if (n == "staircase") {
    cubical(staircase(p("k", 3)));
  } else {
    throw TopoError(ErrorKind::UnknownSpec, "unknown gallery item '" + n + "'");
  }
  return it;
}

}  // namespace topo::gallery
