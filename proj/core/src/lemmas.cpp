#include "topo/lemmas.hpp"

#include "collapse_state.hpp"
#include "topo/errors.hpp"

#include <algorithm>
#include <deque>

namespace topo {

CollapseCertificate cone_collapse(int apex, const SimplicialComplex& B, const SimplicialComplex& Bsub) {
  if (B.has_vertex(apex)) throw TopoError(ErrorKind::VertexClash, "apex lies in the base");
  if (!is_subcomplex(Bsub, B)) throw TopoError(ErrorKind::NotSubcomplex, "cone collapse target");
  std::vector<Face> rho;
  for (const Face& f : B.faces())
    if (!Bsub.contains(f)) rho.push_back(f);
  std::sort(rho.begin(), rho.end(), [](const Face& a, const Face& b) { return dim_lex_less(b, a); });
  CollapseCertificate cert;
  for (const Face& r : rho) cert.steps.push_back({r, face_with(r, apex)});
  if (Bsub.empty()) {
    cert.target = {Face{apex}};
  } else {
    for (const Face& f : Bsub.facets()) cert.target.push_back(face_with(f, apex));
  }
  return cert;
}

CollapseCertificate lift_link_collapse(const SimplicialComplex& C, int v, const CollapseCertificate& link_cert,
                                       bool remove_vertex) {
  CollapseCertificate out;
  for (const auto& st : link_cert.steps) out.steps.push_back({face_with(st.free, v), face_with(st.coface, v)});
  if (remove_vertex) {
    if (link_cert.target.size() != 1 || link_cert.target[0].size() != 1)
      throw TopoError(ErrorKind::Precondition, "link certificate does not end at a point");
    int p = link_cert.target[0][0];
    out.steps.push_back({Face{v}, make_face({v, p})});
  }
  // facets of the result: maximal members of the C - v facets plus v * S
  SimplicialComplex rest = deletion(C, v);
  std::vector<Face> tops = rest.facets();
  if (!remove_vertex)
    for (const Face& t : link_cert.target) tops.push_back(face_with(t, v));
  if (tops.empty() && remove_vertex) throw TopoError(ErrorKind::Precondition, "removing the last vertex");
  out.target = SimplicialComplex::closure_of(tops).facets();
  return out;
}

CollapseCertificate union_collapse(const SimplicialComplex& C, const CollapseCertificate& cert, const SimplicialComplex& D) {
  SimplicialComplex Cp = SimplicialComplex::closure_of(cert.target);
  if (complex_intersection(C, D) != Cp) throw TopoError(ErrorKind::Precondition, "D ∩ C differs from the collapse target");
  CollapseCertificate out;
  out.steps = cert.steps;
  out.target = D.facets();
  return out;
}

int cone_apex(const SimplicialComplex& K) {
  if (K.empty()) return -1;
  Face common = K.facets().front();
  for (const Face& f : K.facets()) common = face_intersection(common, f);
  return common.empty() ? -1 : common.front();
}

NECertificate cone_ne_certificate(const SimplicialComplex& K, int apex) {
  if (cone_apex(K) < 0 || !K.has_vertex(apex)) throw TopoError(ErrorKind::Precondition, "complex is not a cone");
  for (const Face& f : K.facets())
    if (!contains_vertex(f, apex)) throw TopoError(ErrorKind::Precondition, "not a cone over the given apex");
  SimplicialComplex cur = K;
  std::vector<NEStep> steps;
  for (int u : K.vertices()) {
    if (u == apex) continue;
    SimplicialComplex lk = link(Face{u}, cur);
    steps.push_back({u, cone_ne_certificate(lk, apex)});
    cur = deletion(cur, u);
  }
  return ne_from_steps(steps, apex);
}

CollapseCertificate ne_to_collapse(const SimplicialComplex& K, const NECertificate& cert) {
  CollapseCertificate out;
  SimplicialComplex cur = K;
  const NENode* n = cert.get();
  while (n && !n->is_point()) {
    SimplicialComplex lk = link(Face{n->vertex}, cur);
    CollapseCertificate lc = ne_to_collapse(lk, n->link);
    CollapseCertificate lifted = lift_link_collapse(cur, n->vertex, lc, true);
    out.steps.insert(out.steps.end(), lifted.steps.begin(), lifted.steps.end());
    cur = deletion(cur, n->vertex);
    n = n->rest.get();
  }
  if (!n) throw TopoError(ErrorKind::Precondition, "truncated non-evasiveness certificate");
  out.target = {Face{n->vertex}};
  return out;
}

SimplicialComplex labelled_sd(const SimplicialComplex& K, const FaceLabel& id) {
  std::vector<Face> flags;
  for (const Face& F : K.facets()) {
    Face perm = F;
    do {
      Face chain, cur;
      for (int v : perm) {
        cur = face_with(cur, v);
        chain.push_back(id(cur));
      }
      flags.push_back(make_face(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::closure_of(flags);
}

NECertificate lift_ne_tree(const SimplicialComplex& K, const NECertificate& cert, const FaceLabel& id) {
  int last = -1;
  std::vector<NEStep> steps = ne_flatten(cert, &last);
  std::vector<NEStep> lifted = lift_ne_steps_once(K, steps, id);
  return ne_from_steps(lifted, id(Face{last}));
}

std::vector<NEStep> lift_ne_steps_once(const SimplicialComplex& K0, const std::vector<NEStep>& steps, const FaceLabel& id,
                                       SimplicialComplex* final_sd) {
  SimplicialComplex K = K0;
  SimplicialComplex S = labelled_sd(K, id);
  std::vector<NEStep> out;
  for (const NEStep& st : steps) {
    int u = st.vertex;
    SimplicialComplex lk = link(Face{u}, K);
    FaceLabel up = [&, u](const Face& r) { return id(face_with(r, u)); };
    out.push_back({id(Face{u}), lift_ne_tree(lk, st.link, up)});
    S = deletion(S, id(Face{u}));
    // faces strictly containing u, by increasing dimension: each link is a cone
    std::vector<Face> above = strict_cofaces(Face{u}, K);
    std::sort(above.begin(), above.end(), dim_lex_less);
    for (const Face& tau : above) {
      int w = id(tau);
      SimplicialComplex lw = link(Face{w}, S);
      out.push_back({w, cone_ne_certificate(lw, id(face_without(tau, u)))});
      S = deletion(S, w);
    }
    K = deletion(K, u);
  }
  if (final_sd) *final_sd = S;
  return out;
}

std::vector<DerivedComplex> sd_tower(const SimplicialComplex& C, int m) {
  std::vector<DerivedComplex> t;
  for (int k = 0; k < m; ++k) t.push_back(sd(k == 0 ? C : t.back().complex));
  return t;
}

int iterated_vertex_id(const std::vector<DerivedComplex>& tower, int v) {
  for (const DerivedComplex& d : tower) v = d.id(Face{v});
  return v;
}

NESequence lift_ne_steps(const SimplicialComplex& C, const NESequence& seq, int m) {
  std::vector<DerivedComplex> tower = sd_tower(C, m);
  SimplicialComplex K = C;
  std::vector<NEStep> steps = seq.steps;
  SimplicialComplex fin = SimplicialComplex::closure_of(seq.target);
  for (int k = 0; k < m; ++k) {
    const DerivedComplex& D = tower[k];
    FaceLabel id = [&D](const Face& f) { return D.id(f); };
    steps = lift_ne_steps_once(K, steps, id, &fin);
    K = D.complex;
  }
  return {steps, fin.facets()};
}

NESequence ne_cone_lemma_steps(const SimplicialComplex& C, int v, int m) {
  if (!C.has_vertex(v)) throw TopoError(ErrorKind::FaceNotInComplex, "vertex " + std::to_string(v));
  if (m < 0) throw TopoError(ErrorKind::BadParameters, "negative subdivision count");
  if (m == 0) return {{}, deletion(C, v).facets()};
  std::vector<DerivedComplex> tower = sd_tower(C, m);
  const DerivedComplex& top = tower.back();
  SimplicialComplex K = m == 1 ? C : tower[m - 2].complex;  // sd^{m-1} C
  int vk = iterated_vertex_id(std::vector<DerivedComplex>(tower.begin(), tower.end() - 1), v);
  // (sd K) - v ↘NE sd (K - v): delete the vertices of faces strictly containing v
  SimplicialComplex S = deletion(top.complex, top.id(Face{vk}));
  std::vector<NEStep> steps;
  std::vector<Face> above = strict_cofaces(Face{vk}, K);
  std::sort(above.begin(), above.end(), dim_lex_less);
  for (const Face& tau : above) {
    int w = top.id(tau);
    SimplicialComplex lw = link(Face{w}, S);
    steps.push_back({w, cone_ne_certificate(lw, top.id(face_without(tau, vk)))});
    S = deletion(S, w);
  }
  if (m == 1) return {steps, S.facets()};
  // then sd (sd^{m-1} C - v) ↘NE sd (sd^{m-1} (C - v)) by lifting the m-1 case
  NESequence inner = ne_cone_lemma_steps(C, v, m - 1);
  FaceLabel id = [&top](const Face& f) { return top.id(f); };
  SimplicialComplex fin;
  std::vector<NEStep> lifted = lift_ne_steps_once(deletion(K, vk), inner.steps, id, &fin);
  steps.insert(steps.end(), lifted.begin(), lifted.end());
  return {steps, fin.facets()};
}

std::vector<std::pair<Face, Face>> collapse_to_matching(const CollapseCertificate& cert) {
  std::vector<std::pair<Face, Face>> out;
  for (const auto& st : cert.steps) out.push_back({st.free, st.coface});
  return out;
}

CollapseCertificate matching_to_collapse(const SimplicialComplex& C, const std::vector<std::pair<Face, Face>>& pairs) {
  detail::CollapseState st(C);
  std::vector<int> pair_of(st.size(), -1), cof_of(st.size(), -1);
  std::vector<std::pair<int, int>> ids;
  for (const auto& [s, S] : pairs) {
    int a = st.id(s), b = st.id(S);
    pair_of[a] = static_cast<int>(ids.size());
    cof_of[b] = static_cast<int>(ids.size());
    ids.push_back({a, b});
  }
  std::deque<int> queue;
  for (size_t i = 0; i < ids.size(); ++i) queue.push_back(static_cast<int>(i));
  std::vector<bool> done(ids.size(), false);
  CollapseCertificate cert;
  size_t n_done = 0;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    if (done[p]) continue;
    auto [a, b] = ids[p];
    if (st.free_partner(a) != b) continue;
    st.remove_pair(a, b);
    done[p] = true;
    ++n_done;
    cert.steps.push_back({st.cell(a), st.cell(b)});
    for (int c : {a, b})
      for (int f : st.facets(c))
        if (st.present(f))
          for (int q : {pair_of[f], cof_of[f]})
            if (q >= 0 && !done[q]) queue.push_back(q);
  }
  if (n_done != ids.size()) throw TopoError(ErrorKind::Precondition, "matching cannot be ordered into collapses");
  std::vector<Face> rest;
  for (int i = 0; i < st.size(); ++i)
    if (st.present(i)) rest.push_back(st.cell(i));
  cert.target = SimplicialComplex::closure_of(rest).facets();
  return cert;
}

}  // namespace topo
