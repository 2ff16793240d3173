#include "topo/subdivision.hpp"

#include "topo/errors.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace topo {

int DerivedComplex::id(const Face& parent_face) const {
  auto it = vertex_of.find(parent_face);
  if (it == vertex_of.end()) throw TopoError(ErrorKind::FaceNotInComplex, "no subdivision vertex for " + to_string(parent_face));
  return it->second;
}

std::vector<Face> DerivedComplex::chain(const Face& sd_face) const {
  std::vector<Face> out;
  for (int v : sd_face) out.push_back(carrier.at(v));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.size() < b.size(); });
  return out;
}

Face DerivedComplex::from_chain(const std::vector<Face>& ch) const {
  std::vector<int> ids;
  for (const Face& f : ch) ids.push_back(id(f));
  return make_face(ids);
}

const Face& DerivedComplex::carrier_of(const Face& sd_face) const {
  const Face* best = &carrier.at(sd_face.front());
  for (int v : sd_face)
    if (carrier.at(v).size() > best->size()) best = &carrier.at(v);
  return *best;
}

GeometricComplex DerivedComplex::geometric() const {
  if (pos.empty()) throw TopoError(ErrorKind::Precondition, "subdivision carries no coordinates");
  GeometricComplex g;
  g.complex = complex;
  g.pos = pos;
  return g;
}

DerivedComplex sd(const SimplicialComplex& C) {
  DerivedComplex D;
  std::vector<Face> faces = C.sorted_faces();
  D.carrier = faces;
  D.root_carrier = faces;
  for (size_t i = 0; i < faces.size(); ++i) D.vertex_of[faces[i]] = static_cast<int>(i);
  std::vector<Face> flags;
  for (const Face& F : C.facets()) {
    // every ordering of the vertices of F gives one maximal chain
    Face perm = F;
    do {
      Face chain_ids;
      Face cur;
      for (int v : perm) {
        cur = face_with(cur, v);
        chain_ids.push_back(D.vertex_of.at(cur));
      }
      flags.push_back(make_face(chain_ids));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  D.complex = SimplicialComplex::closure_of(flags);
  return D;
}

DerivedComplex sd(const GeometricComplex& G) {
  DerivedComplex D = sd(G.complex);
  for (size_t i = 0; i < D.carrier.size(); ++i) D.pos[static_cast<int>(i)] = G.barycenter(D.carrier[i]);
  return D;
}

namespace {

DerivedComplex identity_subdivision(const SimplicialComplex& C) {
  DerivedComplex D;
  D.complex = C;
  int n = 0;
  for (int v : C.vertices()) n = std::max(n, v + 1);
  D.carrier.assign(n, Face{});
  for (int v : C.vertices()) {
    D.carrier[v] = Face{v};
    D.vertex_of[Face{v}] = v;
  }
  D.root_carrier = D.carrier;
  return D;
}

DerivedComplex compose(const DerivedComplex& inner, DerivedComplex outer) {
  for (size_t i = 0; i < outer.carrier.size(); ++i) {
    Face root;
    for (int v : outer.carrier[i]) root = face_union(root, inner.root_carrier.at(v));
    outer.root_carrier[i] = root;
  }
  return outer;
}

}  // namespace

DerivedComplex sd_m(const SimplicialComplex& C, int m) {
  if (m < 0) throw TopoError(ErrorKind::BadParameters, "negative subdivision count");
  DerivedComplex cur = identity_subdivision(C);
  for (int k = 0; k < m; ++k) cur = compose(cur, sd(cur.complex));
  return cur;
}

DerivedComplex sd_m(const GeometricComplex& G, int m) {
  if (m < 0) throw TopoError(ErrorKind::BadParameters, "negative subdivision count");
  DerivedComplex cur = identity_subdivision(G.complex);
  cur.pos = G.pos;
  for (int k = 0; k < m; ++k) cur = compose(cur, sd(cur.geometric()));
  return cur;
}

DerivedOrder derived_order(const SimplicialComplex& C, const std::vector<Face>& seed) {
  FaceMap<int> seed_rank;
  for (size_t i = 0; i < seed.size(); ++i) {
    if (!C.contains(seed[i])) throw TopoError(ErrorKind::FaceNotInComplex, "seed face " + to_string(seed[i]));
    if (!seed_rank.emplace(seed[i], static_cast<int>(i)).second)
      throw TopoError(ErrorKind::CyclicRelation, "seed order lists " + to_string(seed[i]) + " twice");
  }
  std::vector<Face> faces = C.sorted_faces();
  FaceMap<int> idx;
  for (size_t i = 0; i < faces.size(); ++i) idx[faces[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out(faces.size());
  std::vector<int> indeg(faces.size(), 0);
  auto edge = [&](int a, int b) {
    out[a].push_back(b);
    ++indeg[b];
  };
  for (size_t i = 0; i < faces.size(); ++i) {
    const Face& s = faces[i];
    std::vector<Face> subs = nonempty_subfaces(s);
    const Face* minimal = nullptr;
    int best = -1;
    for (const Face& t : subs) {
      auto it = seed_rank.find(t);
      if (it != seed_rank.end() && (best < 0 || it->second < best)) {
        best = it->second;
        minimal = &t;
      }
    }
    for (const Face& t : subs) {
      if (t == s) continue;
      if (minimal && t == *minimal) edge(idx.at(t), static_cast<int>(i));
      else edge(static_cast<int>(i), idx.at(t));
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (size_t i = 0; i < faces.size(); ++i)
    if (indeg[i] == 0) ready.push(static_cast<int>(i));
  DerivedOrder D;
  while (!ready.empty()) {
    int a = ready.top();
    ready.pop();
    D.rank[faces[a]] = static_cast<int>(D.order.size());
    D.order.push_back(faces[a]);
    for (int b : out[a])
      if (--indeg[b] == 0) ready.push(b);
  }
  if (D.order.size() != faces.size()) throw TopoError(ErrorKind::CyclicRelation, "derived order relation has a cycle");
  return D;
}

SimplicialComplex derived_neighborhood(const SimplicialComplex& D, const DerivedComplex& sdC) {
  for (const Face& f : D.facets())
    if (!sdC.vertex_of.count(f)) throw TopoError(ErrorKind::NotSubcomplex, "face " + to_string(f) + " is not in the parent");
  std::vector<int> keep;
  for (size_t i = 0; i < sdC.carrier.size(); ++i) {
    const Face& f = sdC.carrier[i];
    if (f.empty() || !sdC.complex.has_vertex(static_cast<int>(i))) continue;
    for (int v : f)
      if (D.has_vertex(v)) {
        keep.push_back(static_cast<int>(i));
        break;
      }
  }
  return induced(sdC.complex, keep);
}

SimplicialComplex derived_neighborhood(const SimplicialComplex& D, const SimplicialComplex& C) {
  if (!is_subcomplex(D, C)) throw TopoError(ErrorKind::NotSubcomplex, "D is not a subcomplex of C");
  return derived_neighborhood(D, sd(C));
}

DerivedComplex h_splitting_sd(const GeometricComplex& G, const Halfspace& H) {
  std::map<int, Q> val;
  for (int v : G.complex.vertices()) {
    Q s = dot(G.at(v), H.normal) - H.offset;
    if (s == 0) throw TopoError(ErrorKind::NonGenericHyperplane, "vertex " + std::to_string(v) + " lies on the hyperplane");
    val[v] = s;
  }
  DerivedComplex D = sd(G.complex);
  for (size_t i = 0; i < D.carrier.size(); ++i) {
    const Face& f = D.carrier[i];
    std::vector<Vec> cuts;
    for (size_t a = 0; a < f.size(); ++a)
      for (size_t b = a + 1; b < f.size(); ++b) {
        const Q& sa = val[f[a]];
        const Q& sb = val[f[b]];
        if (sgn(sa) == sgn(sb)) continue;
        Q lam = sb / (sb - sa);
        cuts.push_back(add(scale(G.at(f[a]), lam), scale(G.at(f[b]), 1 - lam)));
      }
    D.pos[static_cast<int>(i)] = cuts.empty() ? G.barycenter(f) : centroid(cuts);
  }
  return D;
}

}  // namespace topo
