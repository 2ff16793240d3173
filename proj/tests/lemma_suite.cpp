#include "lemma_suite.hpp"

#include "helpers.hpp"

#include "topo/gallery.hpp"
#include "topo/lemmas.hpp"
#include "topo/search.hpp"

#include <algorithm>

namespace topo::test {

namespace {

std::string bad(const std::string& what, const VerifyResult& r) {
  return what + ": step " + std::to_string(r.failing_step) + ": " + r.reason;
}

SimplicialComplex random_subcomplex(const SimplicialComplex& C, std::mt19937_64& rng) {
  std::vector<Face> keep;
  for (const Face& f : C.sorted_faces())
    if (rng() % 3 == 0) keep.push_back(f);
  return SimplicialComplex::closure_of(keep);
}

bool same_complex(std::vector<Face> a, const SimplicialComplex& b) {
  return SimplicialComplex::closure_of(a) == b;
}

// Planar or solid convex triangulation with a vertex on the boundary, whose
// link is therefore a collapsible path or disk.
GeometricComplex convex_instance(uint64_t seed, int* boundary_vertex) {
  int d = 2 + static_cast<int>(seed % 2);
  GeometricComplex G = gallery::random_convex(d + 3 + static_cast<int>(seed % 5), d, seed);
  SimplicialComplex bd = boundary(G.complex);
  std::vector<int> vs = bd.vertices();
  *boundary_vertex = vs[seed % vs.size()];
  return G;
}

}  // namespace

std::string check_cone_collapse(uint64_t seed) {
  std::mt19937_64 rng(seed);
  SimplicialComplex B = random_2complex(6, 1 + static_cast<int>(seed % 4), seed);
  SimplicialComplex Bs = random_subcomplex(B, rng);
  const int apex = 100;
  SimplicialComplex K = cone(apex, B);
  CollapseCertificate c = cone_collapse(apex, B, Bs);
  VerifyResult r = verify_certificate(K, c);
  if (!r) return bad("cone collapse", r);
  SimplicialComplex want = Bs.empty() ? SimplicialComplex::from_facets({{apex}}) : cone(apex, Bs);
  if (!same_complex(c.target, want)) return "cone collapse ends at the wrong complex";
  return {};
}

std::string check_link_collapse(uint64_t seed) {
  int v = -1;
  GeometricComplex G = convex_instance(seed, &v);
  const SimplicialComplex& C = G.complex;
  SimplicialComplex L = link({v}, C);
  CollapseSearchResult lr = collapse_search(L, std::nullopt);
  if (lr.status != SearchStatus::Found) return "link search failed";
  CollapseCertificate full = lift_link_collapse(C, v, *lr.cert, true);
  VerifyResult r = verify_certificate(C, full);
  if (!r) return bad("link collapse (remove vertex)", r);
  if (!same_complex(full.target, deletion(C, v))) return "link collapse does not end at C - v";

  CollapseCertificate part = lift_link_collapse(C, v, *lr.cert, false);
  r = verify_certificate(C, part);
  if (!r) return bad("link collapse", r);
  SimplicialComplex S = SimplicialComplex::closure_of(lr.cert->target);
  SimplicialComplex want = complex_union(deletion(C, v), cone(v, S));
  if (!same_complex(part.target, want)) return "link collapse does not end at (C - v) u v*S";
  return {};
}

std::string check_union_collapse(uint64_t seed) {
  int v = -1;
  GeometricComplex G = convex_instance(seed + 1000, &v);
  const SimplicialComplex& K = G.complex;
  SimplicialComplex St = star({v}, K);
  SimplicialComplex D = deletion(K, v);
  CollapseSearchResult lr = collapse_search(link({v}, St), std::nullopt);
  if (lr.status != SearchStatus::Found) return "link search failed";
  CollapseCertificate c = lift_link_collapse(St, v, *lr.cert, true);
  if (complex_intersection(St, D) != SimplicialComplex::closure_of(c.target)) return "instance does not meet D in C'";
  CollapseCertificate u = union_collapse(St, c, D);
  VerifyResult r = verify_certificate(complex_union(St, D), u);
  if (!r) return bad("union collapse", r);
  if (!same_complex(u.target, D)) return "union collapse does not end at D";
  return {};
}

std::string check_cone_non_evasive(uint64_t seed) {
  SimplicialComplex B = random_2complex(7, 2 + static_cast<int>(seed % 5), seed);
  const int apex = 50;
  SimplicialComplex K = cone(apex, B);
  NECertificate c = cone_ne_certificate(K, apex);
  VerifyResult r = verify_ne(K, c);
  if (!r) return bad("cone non-evasiveness", r);
  r = verify_certificate(K, ne_to_collapse(K, c));
  if (!r) return bad("cone collapse from NE", r);
  return {};
}

std::string check_ne_lift(uint64_t seed) {
  GeometricComplex G = gallery::random_convex(5 + static_cast<int>(seed % 4), 2, seed);
  const SimplicialComplex& C = G.complex;
  NESearchResult ne = is_non_evasive(C);
  if (ne.status != SearchStatus::Found) return "no NE certificate for the base complex";
  std::vector<NEStep> all = ne_flatten(ne.cert);
  size_t k = 1 + seed % std::max<size_t>(all.size(), 1);
  k = std::min(k, all.size());
  NESequence seq;
  seq.steps.assign(all.begin(), all.begin() + static_cast<long>(k));
  SimplicialComplex fin = C;
  for (const NEStep& s : seq.steps) fin = deletion(fin, s.vertex);
  seq.target = fin.facets();
  VerifyResult r = verify_ne_steps(C, seq);
  if (!r) return bad("base NE steps", r);
  int m = 1 + static_cast<int>(seed % 2);
  NESequence lifted = lift_ne_steps(C, seq, m);
  std::vector<DerivedComplex> tower = sd_tower(C, m);
  r = verify_ne_steps(tower.back().complex, lifted);
  if (!r) return bad("lifted NE steps", r);
  // sd^m of the final complex, in the labels of sd^m C
  std::vector<DerivedComplex> ftower = sd_tower(fin, m);
  if (SimplicialComplex::closure_of(lifted.target).f_vector() != ftower.back().complex.f_vector())
    return "lifted steps do not end at sd^m C'";
  return {};
}

std::string check_cone_lemma(uint64_t seed) {
  std::mt19937_64 rng(seed);
  SimplicialComplex C = random_2complex(6, 1 + static_cast<int>(seed % 3), seed);
  int v = C.vertices()[rng() % C.vertices().size()];
  int m = 1 + static_cast<int>(seed % 2);
  std::vector<DerivedComplex> tower = sd_tower(C, m);
  NESequence seq = ne_cone_lemma_steps(C, v, m);
  SimplicialComplex start = deletion(tower.back().complex, iterated_vertex_id(tower, v));
  VerifyResult r = verify_ne_steps(start, seq);
  if (!r) return bad("cone lemma steps", r);
  SimplicialComplex rest = deletion(C, v);
  SimplicialComplex got = SimplicialComplex::closure_of(seq.target);
  if (rest.empty()) return got.empty() ? std::string() : "expected the void complex";
  if (got.f_vector() != sd_m(rest, m).complex.f_vector()) return "cone lemma does not end at sd^m (C - v)";
  return {};
}

const std::vector<LemmaCheck>& lemma_checks() {
  static const std::vector<LemmaCheck> all = {
      {"cone over a collapse", check_cone_collapse},
      {"collapse through a link", check_link_collapse},
      {"union of collapses", check_union_collapse},
      {"cones are non-evasive", check_cone_non_evasive},
      {"NE steps lift to sd^m", check_ne_lift},
      {"deleting a vertex of sd^m", check_cone_lemma},
  };
  return all;
}

}  // namespace topo::test
