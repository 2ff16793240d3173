#include "topo/star_shaped.hpp"

#include "topo/errors.hpp"
#include "topo/lemmas.hpp"
#include "topo/subdivision.hpp"

#include <algorithm>

namespace topo {

namespace {

// Central projection onto the plane <p, -nu> = 1 followed by dropping the
// coordinate where nu is largest.
Vec chart(const Vec& p, const Vec& nu, size_t drop, bool central) {
  Vec q = p;
  if (central) q = scale(p, Q(1) / -dot(p, nu));
  Vec out;
  for (size_t i = 0; i < q.size(); ++i)
    if (i != drop) out.push_back(q[i]);
  return out;
}

size_t largest_coord(const Vec& nu) {
  size_t j = 0;
  for (size_t i = 0; i < nu.size(); ++i)
    if (abs(nu[i]) > abs(nu[j])) j = i;
  return j;
}

}  // namespace

bool is_locally_embedded_2d(const GeometricComplex& G) {
  const SimplicialComplex& C = G.complex;
  if (G.ambient_dim() != 2 || C.dim() != 2 || !C.is_pure()) return false;
  auto orient = [&](int a, int b, int c) {
    Vec u = sub(G.at(b), G.at(a)), w = sub(G.at(c), G.at(a));
    return sgn(u[0] * w[1] - u[1] * w[0]);
  };
  for (const Face& f : C.facets())
    if (orient(f[0], f[1], f[2]) == 0) return false;
  for (const Face& e : C.faces_of_dim(1)) {
    std::vector<int> apex;
    for (int fi : C.facets_containing(e))
      for (int u : C.facets()[fi])
        if (!contains_vertex(e, u)) apex.push_back(u);
    if (apex.size() > 2) return false;
    if (apex.size() == 2 && orient(e[0], e[1], apex[0]) == orient(e[0], e[1], apex[1])) return false;
  }
  return true;
}

GeometricComplex realize_lower_link(const GeometricComplex& G, int v, const Vec& nu, const Q& eps,
                                    const std::function<int(const Face&)>& label, Vec* center_dir, const Vec* center) {
  SimplicialComplex L = link(Face{v}, G.complex);
  const Vec& pv = G.at(v);
  std::map<int, Vec> dir;
  std::map<int, Q> height;
  for (int u : L.vertices()) {
    dir[u] = sub(G.at(u), pv);
    height[u] = dot(dir[u], nu);
    if (height[u] == 0) throw TopoError(ErrorKind::NonGenericDirection, "link edge orthogonal to the direction");
  }
  auto lower = [&](int u) { return height[u] < 0; };
  std::vector<Face> touching;
  for (const Face& f : L.faces())
    if (std::any_of(f.begin(), f.end(), lower)) touching.push_back(f);
  size_t drop = largest_coord(nu);
  GeometricComplex R;
  std::vector<Face> faces;
  for (const Face& rho : touching) {
    std::vector<Vec> lo, cuts;
    for (int a : rho)
      if (lower(a)) lo.push_back(dir[a]);
    Vec bl = centroid(lo);
    Vec p = bl;
    if (lo.size() != rho.size()) {
      for (int a : rho)
        for (int b : rho)
          if (lower(a) && !lower(b)) {
            Q t = height[b] / (height[b] - height[a]);
            cuts.push_back(add(scale(dir[a], t), scale(dir[b], Q(1) - t)));
          }
      Vec c = centroid(cuts);
      p = add(c, scale(sub(bl, c), eps));
    }
    R.pos[label(rho)] = chart(p, nu, drop, true);
  }
  // chains of touching faces
  SimplicialComplex sdL = labelled_sd(L, label);
  for (const Face& f : sdL.faces()) {
    bool ok = true;
    for (int x : f) ok = ok && R.pos.count(x);
    if (ok) faces.push_back(f);
  }
  R.complex = SimplicialComplex::closure_of(faces);
  if (center_dir && center) *center_dir = chart(sub(*center, pv), nu, drop, true);
  return R;
}

namespace {

NECertificate chain_steps(const std::vector<NEStep>& steps, NECertificate tail) {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) tail = ne_node(it->vertex, it->link, tail);
  return tail;
}

SimplicialComplex remove_vertex(const SimplicialComplex& K, int v) { return deletion(K, v); }

}  // namespace

StarCollapse collapse_star_shaped(const GeometricComplex& G, const Vec& x, const StarCollapseOptions& opt) {
  int d = G.ambient_dim();
  if (d < 2) throw TopoError(ErrorKind::Precondition, "dimension must be at least 2");
  if (G.complex.dim() != d) throw TopoError(ErrorKind::Precondition, "complex must be full-dimensional");
  if (d > 3) throw TopoError(ErrorKind::Precondition, "only dimensions 2 and 3 are supported");
  if (!is_star_shaped(G, x)) throw TopoError(ErrorKind::Precondition, "complex is not star-shaped around the center");
  StarCollapse out;
  out.subdivisions = d - 2;
  if (d == 2) {
    out.complex = G;
    out.cert = non_evasive_certificate(G.complex, opt.budget);
    return out;
  }
  std::string last_error;
  for (int attempt = 0; attempt < opt.max_directions; ++attempt) {
    Vec nu = generic_direction(G, opt.seed + 7919 * attempt);
    Halfspace H{nu, dot(x, nu)};
    DerivedComplex S;
    try {
      S = h_splitting_sd(G, H);
    } catch (const TopoError& e) {
      if (e.kind() != ErrorKind::NonGenericHyperplane) throw;
      last_error = e.what();
      continue;
    }
    try {
      SimplicialComplex cur = S.complex;
      std::vector<NEStep> steps;
      for (int side : {1, -1}) {
        Vec dnu = scale(nu, Q(side));
        std::vector<int> verts = G.complex.vertices();
        std::sort(verts.begin(), verts.end(), [&](int a, int b) { return dot(G.at(a), dnu) < dot(G.at(b), dnu); });
        std::vector<Face> seed;
        for (int v : verts) seed.push_back(Face{v});
        DerivedOrder ord = derived_order(G.complex, seed);
        for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
          int sv = S.id(*it);
          if (sgn(dot(S.pos.at(sv), dnu) - H.offset * side) <= 0) continue;
          SimplicialComplex K = link(Face{sv}, cur);
          NECertificate lc;
          if (it->size() > 1) {
            int w = *std::min_element(it->begin(), it->end(),
                                      [&](int a, int b) { return dot(G.at(a), dnu) < dot(G.at(b), dnu); });
            lc = cone_ne_certificate(K, S.id(Face{w}));
          } else {
            int v = it->front();
            auto label = [&](const Face& rho) { return S.id(face_with(rho, v)); };
            bool realized = false;
            for (int k = 1; k <= opt.max_eps_steps && !realized; ++k) {
              Vec cdir;
              GeometricComplex R = realize_lower_link(G, v, dnu, Q(1, 1L << k), label, &cdir, &x);
              if (R.complex != K) throw TopoError(ErrorKind::CertificateRejected, "realized link differs from the link");
              if (!is_locally_embedded_2d(R)) continue;
              bool star = false;
              try {
                star = is_star_shaped(R, cdir);
              } catch (const TopoError&) {
                star = false;
              }
              if (!star) continue;
              StarCollapseOptions sub = opt;
              lc = collapse_star_shaped(R, cdir, sub).cert;
              realized = true;
            }
            if (!realized)
              throw TopoError(ErrorKind::RealizationSearchFailed,
                              "no star-shaped realization of the lower link of vertex " + std::to_string(v));
          }
          steps.push_back({sv, lc});
          cur = remove_vertex(cur, sv);
        }
      }
      // what is left lies on H
      GeometricComplex mid;
      mid.complex = cur;
      size_t drop = largest_coord(nu);
      for (int u : cur.vertices()) mid.pos[u] = chart(S.pos.at(u), nu, drop, false);
      Vec xc = chart(x, nu, drop, false);
      NECertificate tail = collapse_star_shaped(mid, xc, opt).cert;
      out.cert = chain_steps(steps, tail);
      out.complex = S.geometric();
      require_valid(verify_ne(S.complex, out.cert), "star-shaped non-evasiveness");
      return out;
    } catch (const TopoError& e) {
      if (e.kind() == ErrorKind::NonGenericDirection || e.kind() == ErrorKind::PointOutsideComplex) {
        last_error = e.what();
        continue;
      }
      throw;
    }
  }
  throw TopoError(ErrorKind::GenericityFailure, "no usable direction: " + last_error);
}

}  // namespace topo
