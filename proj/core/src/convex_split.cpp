#include "topo/convex_split.hpp"

#include "topo/errors.hpp"
#include "topo/lemmas.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace topo {

CollapseCertificate eliminate_vertices(const SimplicialComplex& Sigma0, const SimplicialComplex& Z,
                                       const std::vector<int>& order, const std::function<int(int)>& cone_apex_of,
                                       SearchBudget budget) {
  if (!is_subcomplex(Z, Sigma0)) throw TopoError(ErrorKind::NotSubcomplex, "elimination target");
  std::unordered_map<int, std::vector<const Face*>> at;
  for (const Face& f : Sigma0.faces())
    for (int v : f) at[v].push_back(&f);
  std::unordered_set<int> deleted;
  auto alive = [&](const Face& f) {
    for (int u : f)
      if (deleted.count(u)) return false;
    return true;
  };
  CollapseCertificate cert;
  for (int v : order) {
    std::vector<Face> L, T;
    for (const Face* f : at[v]) {
      if (f->size() == 1 || !alive(*f)) continue;
      Face r = face_without(*f, v);
      if (Z.contains(*f)) T.push_back(r);
      L.push_back(std::move(r));
    }
    bool in_z = Z.has_vertex(v);
    if (L.size() == T.size()) {
      // nothing outside Z around v (or v is the last vertex left)
      if (!L.empty() || in_z) deleted.insert(v);
      continue;
    }
    SimplicialComplex Lk = SimplicialComplex::closure_of(L);
    SimplicialComplex Tk = SimplicialComplex::closure_of(T);
    CollapseCertificate lc;
    bool done = false;
    int a = cone_apex_of ? cone_apex_of(v) : -1;
    if (a >= 0 && Lk.has_vertex(a)) {
      bool cone = true;
      for (const Face& f : Lk.facets()) cone = cone && contains_vertex(f, a);
      for (const Face& f : Tk.facets()) cone = cone && contains_vertex(f, a);
      if (cone) {
        SimplicialComplex B = link(Face{a}, Lk);
        SimplicialComplex Bs = Tk.empty() ? SimplicialComplex() : link(Face{a}, Tk);
        lc = cone_collapse(a, B, Bs);
        done = true;
      }
    }
    if (!done) {
      std::optional<std::vector<Face>> tgt;
      if (!Tk.empty()) tgt = Tk.facets();
      lc = collapse_onto(Lk, tgt, budget);
    }
    for (const auto& st : lc.steps) cert.steps.push_back({face_with(st.free, v), face_with(st.coface, v)});
    if (T.empty()) {
      int p = lc.target.front().front();
      cert.steps.push_back({Face{v}, make_face({v, p})});
    }
    deleted.insert(v);
  }
  std::vector<Face> survivors;
  for (const Face& f : Sigma0.faces())
    if (alive(f) || Z.contains(f)) survivors.push_back(f);
  cert.target = SimplicialComplex::closure_of(survivors).facets();
  return cert;
}

namespace {

SimplicialComplex sd_restricted(const DerivedComplex& D, const std::function<bool(const Face&)>& keep_carrier) {
  std::vector<Face> faces;
  for (const Face& f : D.complex.faces()) {
    bool ok = true;
    for (int v : f) ok = ok && keep_carrier(D.carrier[v]);
    if (ok) faces.push_back(f);
  }
  return SimplicialComplex::closure_of(faces);
}

SimplicialComplex without_facet(const SimplicialComplex& K, const Face& F) {
  std::vector<Face> faces;
  for (const Face& f : K.faces())
    if (f != F) faces.push_back(f);
  return SimplicialComplex::closure_of(faces);
}

// sd vertex order: reverse of a derived order seeded by `seed`, restricted to `keep`.
std::vector<int> elimination_order(const SimplicialComplex& C, const DerivedComplex& D, const std::vector<Face>& seed,
                                   const SimplicialComplex* keep) {
  DerivedOrder ord = derived_order(C, seed);
  std::vector<int> out;
  for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
    int id = D.id(*it);
    if (!keep || keep->has_vertex(id)) out.push_back(id);
  }
  return out;
}

}  // namespace

SplitCollapse convex_collapse_to_boundary(const GeometricComplex& G, uint64_t seed) {
  const SimplicialComplex& C = G.complex;
  int d = G.ambient_dim();
  if (C.dim() != d || !C.is_pure()) throw TopoError(ErrorKind::Precondition, "complex must be pure and full-dimensional");
  if (d > 3) throw TopoError(ErrorKind::RecursionBudgetExceeded, "link collapses are only complete up to dimension 3");
  if (!is_convex_support(G)) throw TopoError(ErrorKind::NotConvex, "underlying space is not convex");
  Vec nu = generic_direction(G, seed);
  std::vector<int> verts = C.vertices();
  std::sort(verts.begin(), verts.end(), [&](int a, int b) { return dot(G.at(a), nu) < dot(G.at(b), nu); });
  std::vector<Face> seed_order;
  for (int v : verts) seed_order.push_back(Face{v});

  SplitCollapse out;
  out.sd = sd(C);
  const DerivedComplex& D = out.sd;
  SimplicialComplex bd = boundary(C);
  SimplicialComplex sd_bd = sd_restricted(D, [&](const Face& f) { return bd.contains(f); });
  std::vector<int> order = elimination_order(C, D, seed_order, nullptr);
  int v0 = order.front();
  Face F;
  for (const Face& f : sd_bd.facets())
    if (contains_vertex(f, v0)) {
      F = f;
      break;
    }
  if (F.empty()) throw TopoError(ErrorKind::Precondition, "top vertex is not on the boundary");
  SimplicialComplex Z = without_facet(sd_bd, F);
  auto apex = [&](int x) {
    const Face& tau = D.carrier[x];
    if (tau.size() < 2) return -1;
    int w = *std::min_element(tau.begin(), tau.end(),
                              [&](int a, int b) { return dot(G.at(a), nu) < dot(G.at(b), nu); });
    return D.id(Face{w});
  };
  out.cert = eliminate_vertices(D.complex, Z, order, apex);
  out.source = D.complex;
  out.target = Z;
  out.removed_facet = F;
  if (SimplicialComplex::closure_of(out.cert.target) != Z)
    throw TopoError(ErrorKind::CertificateRejected, "boundary collapse ended away from the boundary");
  require_valid(verify_certificate(D.complex, out.cert), "convex boundary collapse");
  return out;
}

namespace {

GeometricComplex affine_chart(const SphericalComplex& S, const Vec& h) {
  size_t j = 0;
  for (size_t i = 0; i < h.size(); ++i)
    if (abs(h[i]) > abs(h[j])) j = i;
  GeometricComplex G;
  G.complex = S.complex;
  for (const auto& [v, r] : S.ray) {
    Q s = dot(r, h);
    Vec y;
    for (size_t i = 0; i < r.size(); ++i)
      if (i != j) y.push_back(r[i] / s);
    G.pos[v] = y;
  }
  return G;
}

// Nearest point of the cone over tau to x: the face of tau whose span carries it.
Face cone_support(const SphericalComplex& S, const Face& tau, const Vec& x, Q* value) {
  for (const Face& rho : nonempty_subfaces(tau)) {
    std::vector<Vec> rows;
    for (int v : rho) rows.push_back(S.ray.at(v));
    Vec coef;
    Vec P = project_onto_span(rows, x, &coef);
    bool pos = true;
    for (const Q& c : coef) pos = pos && sgn(c) > 0;
    if (!pos) continue;
    Vec res = sub(x, P);
    bool kkt = true;
    for (int u : tau)
      if (!contains_vertex(rho, u) && sgn(dot(res, S.ray.at(u))) > 0) kkt = false;
    if (!kkt) continue;
    if (value) *value = norm2(P);
    return rho;
  }
  return {};
}

}  // namespace

SplitCollapse convex_split_collapse(const SphericalComplex& S, const Vec& h, SplitMode mode, uint64_t seed,
                                    int max_attempts) {
  const SimplicialComplex& C = S.complex;
  if (is_zero(h)) throw TopoError(ErrorKind::InputError, "hemisphere normal is zero");
  std::map<int, int> side;
  for (int v : C.vertices()) {
    int s = sgn(dot(S.ray.at(v), h));
    if (s == 0) throw TopoError(ErrorKind::NonGenericHyperplane, "vertex " + std::to_string(v) + " on the hemisphere boundary");
    side[v] = s;
  }
  if (mode == SplitMode::C) {
    for (auto& [v, s] : side)
      if (s < 0) throw TopoError(ErrorKind::Precondition, "mode C needs the complex inside the hemisphere");
    return convex_collapse_to_boundary(affine_chart(S, h), seed);
  }
  std::vector<int> up;
  for (auto& [v, s] : side)
    if (s > 0) up.push_back(v);
  if (up.empty()) throw TopoError(ErrorKind::Precondition, "no vertex inside the hemisphere");
  SimplicialComplex R = induced(C, up);
  SimplicialComplex bd = C.is_pure() ? boundary(C) : SimplicialComplex();
  bool bd_inside = false;
  for (int v : bd.vertices()) bd_inside = bd_inside || side[v] > 0;
  if (mode == SplitMode::A && bd_inside) throw TopoError(ErrorKind::Precondition, "mode A needs the boundary outside the hemisphere");
  if (mode == SplitMode::B && (!bd_inside || up.size() == C.vertices().size()))
    throw TopoError(ErrorKind::Precondition, "mode B needs boundary inside and part of the complex outside");

  SplitCollapse out;
  out.sd = sd(C);
  const DerivedComplex& D = out.sd;
  out.source = derived_neighborhood(R, D);
  if (mode == SplitMode::B) {
    SimplicialComplex sd_bd = sd_restricted(D, [&](const Face& f) { return bd.contains(f); });
    std::vector<int> keep;
    for (int x : sd_bd.vertices())
      for (int v : D.carrier[x])
        if (side[v] > 0) {
          keep.push_back(x);
          break;
        }
    out.target = induced(sd_bd, keep);
  }

  // star-center: the pole for A, the antipode of an interior point outside the hemisphere for B
  Vec base = h;
  if (mode == SplitMode::B) {
    bool found = false;
    for (int K = 1; K <= (1 << 12) && !found; K *= 4) {
      for (const Face& f : C.facets()) {
        Vec p(h.size(), Q(0));
        for (int v : f) {
          const Vec& r = S.ray.at(v);
          p = add(p, scale(r, Q(side[v] < 0 ? K : 1) / norm2(r)));
        }
        if (sgn(dot(p, h)) < 0) {
          base = scale(p, Q(-1));
          found = true;
          break;
        }
      }
    }
    if (!found) throw TopoError(ErrorKind::Precondition, "no interior point outside the hemisphere");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  Q scale_base = 0;
  for (const Q& c : base) scale_base = std::max<Q>(scale_base, abs(c));
  std::string last_error;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Vec xs = base;
    for (Q& c : xs) c += ratio(dist(rng), 100000) * scale_base;
    Q xh = dot(xs, h);
    if (sgn(xh) <= 0) continue;
    // shear fixing the hemisphere and sending xs to the pole h
    SphericalComplex T;
    T.complex = C;
    Vec shift = sub(h, xs);
    for (const auto& [v, r] : S.ray) T.ray[v] = add(r, scale(shift, dot(r, h) / xh));
    const Vec& x = h;
    // faces of R whose distance minimum is interior, ranked by closeness
    std::vector<std::pair<Q, Face>> M;
    for (const Face& f : R.faces()) {
      Q val;
      Face rho = cone_support(T, f, x, &val);
      if (rho == f) M.push_back({val, f});
    }
    std::sort(M.begin(), M.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return dim_lex_less(a.second, b.second);
    });
    bool distinct = true;
    for (size_t i = 1; i < M.size(); ++i) distinct = distinct && M[i].first != M[i - 1].first;
    if (!distinct) {
      last_error = "equal distances among minimal faces";
      continue;
    }
    std::vector<Face> seed_order;
    for (auto& p : M) seed_order.push_back(p.second);
    try {
      std::vector<int> order = elimination_order(C, D, seed_order, &out.source);
      auto apex = [&](int xid) {
        const Face& tau = D.carrier[xid];
        Face sigma = cone_support(T, tau, x, nullptr);
        if (sigma.empty() || sigma == tau) return -1;
        return D.id(sigma);
      };
      out.cert = eliminate_vertices(out.source, out.target, order, apex);
      SimplicialComplex end = SimplicialComplex::closure_of(out.cert.target);
      if (mode == SplitMode::A ? !end.is_point() : end != out.target) {
        last_error = "elimination ended at the wrong complex";
        continue;
      }
      require_valid(verify_certificate(out.source, out.cert), "hemisphere collapse");
      if (mode == SplitMode::A) out.target = end;
      return out;
    } catch (const TopoError& e) {
      if (e.kind() == ErrorKind::CyclicRelation || e.kind() == ErrorKind::Precondition ||
          e.kind() == ErrorKind::BudgetExceeded) {
        last_error = e.what();
        continue;
      }
      throw;
    }
  }
  throw TopoError(ErrorKind::GenericityFailure, "no generic base point found: " + last_error);
}

CollapseCertificate endo_collapse_sd(const GeometricComplex& G, const Face& delta, uint64_t seed) {
  SplitCollapse sc = convex_collapse_to_boundary(G, seed);
  const SimplicialComplex& B = sc.source;
  int d = B.dim();
  if (!B.contains(delta) || face_dim(delta) != d) throw TopoError(ErrorKind::Precondition, "delta must be a facet of sd C");
  FaceMap<Face> down;  // top cell -> its paired ridge
  std::vector<std::pair<Face, Face>> pairs;
  Face T1;
  for (const auto& st : sc.cert.steps) {
    if (st.free == sc.removed_facet) {
      T1 = st.coface;
      continue;
    }
    pairs.push_back({st.free, st.coface});
    if (face_dim(st.coface) == d) down[st.coface] = st.free;
  }
  if (T1.empty()) throw TopoError(ErrorKind::CertificateRejected, "removed facet was not collapsed upward");
  // reverse the gradient path from delta to T1
  FaceMap<Face> rematch;  // ridge -> new top cell
  Face cur = delta;
  size_t guard = 0;
  while (cur != T1) {
    if (++guard > B.num_faces()) throw TopoError(ErrorKind::CertificateRejected, "gradient path does not terminate");
    auto it = down.find(cur);
    if (it == down.end()) throw TopoError(ErrorKind::CertificateRejected, "top cell " + to_string(cur) + " unmatched");
    const Face& r = it->second;
    Face next;
    for (int fi : B.facets_containing(r))
      if (B.facets()[fi] != cur) next = B.facets()[fi];
    if (next.empty()) throw TopoError(ErrorKind::CertificateRejected, "ridge " + to_string(r) + " on the boundary");
    rematch[r] = next;
    cur = next;
  }
  for (auto& p : pairs) {
    auto it = rematch.find(p.first);
    if (it != rematch.end()) p.second = it->second;
  }
  std::vector<Face> faces;
  for (const Face& f : B.faces())
    if (f != delta) faces.push_back(f);
  SimplicialComplex src = SimplicialComplex::closure_of(faces);
  CollapseCertificate cert = matching_to_collapse(src, pairs);
  SimplicialComplex want = sd_restricted(sc.sd, [bd = boundary(G.complex)](const Face& f) { return bd.contains(f); });
  if (SimplicialComplex::closure_of(cert.target) != want)
    throw TopoError(ErrorKind::CertificateRejected, "endo collapse does not end at the boundary");
  require_valid(verify_certificate(src, cert), "endo collapse");
  return cert;
}

CollapseSearchResult endo_collapse(const SimplicialComplex& C, const Face& sigma, SearchBudget budget) {
  SimplicialComplex bd;
  try {
    bd = boundary(C);
  } catch (const TopoError& e) {
    throw TopoError(ErrorKind::Precondition, std::string("endo-collapse needs a pseudomanifold: ") + e.what());
  }
  bool is_facet = std::find(C.facets().begin(), C.facets().end(), sigma) != C.facets().end();
  if (!is_facet || face_dim(sigma) != C.dim()) throw TopoError(ErrorKind::Precondition, "sigma must be a top-dimensional facet");
  std::vector<Face> faces;
  for (const Face& f : C.faces())
    if (f != sigma) faces.push_back(f);
  SimplicialComplex K = SimplicialComplex::closure_of(faces);
  std::optional<std::vector<Face>> tgt;
  if (!bd.empty()) tgt = bd.facets();
  GreedyResult g = greedy_collapse(K, tgt);
  if (g.reached) {
    require_valid(verify_certificate(K, g.cert), "endo collapse");
    CollapseSearchResult r;
    r.status = SearchStatus::Found;
    r.cert = g.cert;
    return r;
  }
  return collapse_search(K, tgt, budget);
}

}  // namespace topo
