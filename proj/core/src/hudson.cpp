#include "topo/hudson.hpp"

#include "topo/convex_split.hpp"
#include "topo/errors.hpp"
#include "topo/lemmas.hpp"
#include "topo/search.hpp"

#include <algorithm>

namespace topo {

CarrierMap simplicial_carrier(const GeometricComplex& C, const GeometricComplex& D) {
  return [&C, &D](const Face& f) {
    Vec b = D.barycenter(f);
    for (const Face& F : C.complex.facets()) {
      std::vector<Vec> pts = C.points(F);
      Vec lambda;
      Vec proj = project_affine(pts, b, lambda);
      if (proj != b) continue;
      bool inside = true;
      Face support;
      for (size_t i = 0; i < F.size(); ++i) {
        if (sgn(lambda[i]) < 0) inside = false;
        if (sgn(lambda[i]) > 0) support.push_back(F[i]);
      }
      if (inside) return support;
    }
    throw TopoError(ErrorKind::CarrierMissing, "face " + to_string(f) + " is not inside the complex");
  };
}

CarrierMap polytope_carrier(const Polytope& P, const GeometricComplex& D) {
  return [&P, &D](const Face& f) {
    Vec b = D.barycenter(f);
    if (!P.contains(b)) throw TopoError(ErrorKind::CarrierMissing, "face " + to_string(f) + " is outside the polytope");
    return P.carrier({b});
  };
}

namespace {

// Coordinates on a subset of axes that is injective on the affine hull.
GeometricComplex local_chart(const GeometricComplex& G, int k) {
  std::vector<Vec> diffs;
  const Vec& o = G.pos.begin()->second;
  for (const auto& [v, p] : G.pos) diffs.push_back(sub(p, o));
  std::vector<size_t> cols;
  for (size_t j = 0; j < o.size() && static_cast<int>(cols.size()) < k; ++j) {
    std::vector<size_t> trial = cols;
    trial.push_back(j);
    Mat M;
    for (const Vec& d : diffs) {
      Vec row;
      for (size_t c : trial) row.push_back(d[c]);
      M.push_back(row);
    }
    if (rank(M) == static_cast<int>(trial.size())) cols = trial;
  }
  if (static_cast<int>(cols.size()) != k) throw TopoError(ErrorKind::DegenerateInput, "cell subdivision is degenerate");
  GeometricComplex L;
  L.complex = G.complex;
  for (const auto& [v, p] : G.pos) {
    Vec q;
    for (size_t c : cols) q.push_back(p[c]);
    L.pos[v] = q;
  }
  return L;
}

// Steps of sd B - delta ↘ sd ∂B for the ball B = D restricted to one cell,
// written in the ids of the global subdivision.
void append_endo(const GeometricComplex& D, const DerivedComplex& sdD, const SimplicialComplex& B, const Face& delta,
                 int k, uint64_t seed, CollapseCertificate& out) {
  if (k == 0) return;
  GeometricComplex local = local_chart(D.restricted_to(B), k);
  DerivedComplex lsd = sd(local.complex);
  auto to_local = [&](const Face& f) {
    std::vector<int> ids;
    for (int x : f) ids.push_back(lsd.id(sdD.carrier[x]));
    return make_face(ids);
  };
  auto to_global = [&](const Face& f) {
    std::vector<int> ids;
    for (int x : f) ids.push_back(sdD.id(lsd.carrier[x]));
    return make_face(ids);
  };
  CollapseCertificate c = endo_collapse_sd(local, to_local(delta), seed);
  for (const auto& st : c.steps) out.steps.push_back({to_global(st.free), to_global(st.coface)});
}

}  // namespace

HudsonResult hudson_collapse(const CellComplex& C, const CollapseCertificate& cert, const GeometricComplex& D,
                             const CarrierMap& carrier, uint64_t seed) {
  require_valid(verify_certificate(C, cert), "input collapse");
  HudsonResult res;
  res.sd = sd(D);
  const DerivedComplex& S = res.sd;
  FaceMap<Face> car;
  for (const Face& f : D.complex.faces()) car[f] = carrier(f);
  auto restricted = [&](const Face& cell) {
    std::vector<Face> faces;
    for (const auto& [f, c] : car)
      if (is_subface(c, cell)) faces.push_back(f);
    return SimplicialComplex::closure_of(faces);
  };
  for (const auto& st : cert.steps) {
    int k = C.dim_of(st.free);
    SimplicialComplex Dsig = restricted(st.free), DSig = restricted(st.coface);
    if (Dsig.dim() != k || DSig.dim() != k + 1)
      throw TopoError(ErrorKind::CarrierMissing, "subdivision does not fill cell " + to_string(st.coface));
    // a full flag in D_sigma ending in a top face, extended by the cell of D_Sigma above it
    const Face top = Dsig.faces_of_dim(k).front();
    std::vector<Face> chain;
    for (int i = 1; i <= k + 1; ++i) chain.push_back(Face(top.begin(), top.begin() + i));
    Face above;
    for (int fi : DSig.facets_containing(top))
      if (face_dim(DSig.facets()[fi]) == k + 1) above = DSig.facets()[fi];
    if (above.empty()) throw TopoError(ErrorKind::CarrierMissing, "no cell above " + to_string(top));
    Face delta = S.from_chain(chain);
    chain.push_back(above);
    Face Delta = S.from_chain(chain);
    res.cert.steps.push_back({delta, Delta});
    append_endo(D, S, DSig, Delta, k + 1, seed, res.cert);
    append_endo(D, S, Dsig, delta, k, seed, res.cert);
  }
  std::vector<Face> end = C.closure(cert.target);
  FaceSet keep(end.begin(), end.end());
  std::vector<Face> faces;
  for (const Face& f : S.complex.faces()) {
    bool ok = true;
    for (int x : f) ok = ok && keep.count(car.at(S.carrier[x]));
    if (ok) faces.push_back(f);
  }
  res.target = SimplicialComplex::closure_of(faces);
  res.cert.target = res.target.facets();
  require_valid(verify_certificate(S.complex, res.cert), "subdivided collapse");
  return res;
}

HudsonResult hudson_collapse(const GeometricComplex& C, const CollapseCertificate& cert, const GeometricComplex& D,
                             uint64_t seed) {
  return hudson_collapse(CellComplex::from_simplicial(C.complex), cert, D, simplicial_carrier(C, D), seed);
}

HudsonResult collapse_convex(const GeometricComplex& G, uint64_t seed) {
  if (!is_convex_support(G)) throw TopoError(ErrorKind::NotConvex, "underlying space is not convex");
  Polytope P = convex_hull(G.pos);
  CellComplex cells = polytope_cells(P);
  CollapseCertificate pc;
  if (P.is_simplex()) {
    Face whole = P.whole();
    int apex = whole.front();
    SimplicialComplex B = SimplicialComplex::from_facets({face_without(whole, apex)});
    pc = cone_collapse(apex, B, SimplicialComplex());
  } else {
    pc = collapse_onto(cells, std::nullopt);
  }
  return hudson_collapse(cells, pc, G, polytope_carrier(P, G), seed);
}

}  // namespace topo
