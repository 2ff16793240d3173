// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include "helpers.hpp"
#include "lemma_suite.hpp"

#include "topo/convex_split.hpp"
#include "topo/cubical_collapse.hpp"
#include "topo/errors.hpp"
#include "topo/gallery.hpp"
#include "topo/hudson.hpp"
#include "topo/lemmas.hpp"
#include "topo/morse.hpp"
#include "topo/search.hpp"
#include "topo/star_shaped.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace topo;
using namespace topo::test;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Criterion = std::function<Outcome()>;

long alternating(const std::vector<long>& c) {
  long s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += (i % 2 ? -1 : 1) * c[i];
  return s;
}

SimplicialComplex end_of(const CollapseCertificate& c) { return SimplicialComplex::closure_of(c.target); }

Vec random_interior(const GeometricComplex& G, std::mt19937_64& rng) {
  const Face& F = G.complex.facets()[rng() % G.complex.facets().size()];
  Vec p(G.ambient_dim(), Q(0));
  std::vector<Q> w;
  Q total = 0;
  for (size_t i = 0; i < F.size(); ++i) {
    w.push_back(Q(static_cast<long>(rng() % 1000 + 1)));
    total += w.back();
  }
  for (size_t i = 0; i < F.size(); ++i) p = add(p, scale(G.at(F[i]), w[i] / total));
  return p;
}

// Face of C (a subcomplex of the simplex spanned by `frame`) whose relative
// interior holds p, from barycentric coordinates in the simplex on frame.
Face support_in_simplex(const GeometricComplex& C, const Face& frame, const Vec& p) {
  Mat A;
  size_t d = p.size();
  for (size_t r = 0; r < d; ++r) {
    Vec row;
    for (int v : frame) row.push_back(C.at(v)[r]);
    A.push_back(row);
  }
  A.push_back(Vec(frame.size(), Q(1)));
  Vec b = p;
  b.push_back(1);
  Vec lam;
  if (!solve(A, b, lam)) return {};
  Face s;
  for (size_t i = 0; i < frame.size(); ++i) {
    if (lam[i] < 0) return {};
    if (lam[i] > 0) s.push_back(frame[i]);
  }
  return s;
}

// R(sd D, |C'|) where C is a single simplex and C' a subcomplex of it: the
// faces of sd D whose barycenter lies in |C'|.
SimplicialComplex restriction_oracle(const GeometricComplex& simplex, const SimplicialComplex& Cp, const DerivedComplex& sdD) {
  GeometricComplex G = sdD.geometric();
  Face frame = simplex.complex.facets()[0];
  std::vector<Face> keep;
  for (const Face& f : G.complex.faces()) {
    Face s = support_in_simplex(simplex, frame, G.barycenter(f));
    if (!s.empty() && Cp.contains(s)) keep.push_back(f);
  }
  return SimplicialComplex::closure_of(keep);
}

Outcome gradient_matching_random() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int done = 0;
  for (uint64_t seed = 0; done < 100 && seed < 1000; ++seed) {
    int d = 2 + static_cast<int>(seed % 2);
    int n = d == 2 ? 5 + static_cast<int>(seed % 20) : 5 + static_cast<int>(seed % 9);
    GeometricComplex G = gallery::random_convex(n, d, seed);
    if (G.complex.num_faces() > 200) continue;
    ++done;
    Vec w = random_interior(G, rng);
    StarMinimalOracle f = distance_oracle(G, w);
    MorseMatching M = gradient_matching(G.complex, f);
    std::string tag = "instance " + std::to_string(seed);
    if (!is_acyclic(M.pairs, G.complex).acyclic) o.fail(tag + ": matching has a closed path");
    std::vector<Face> crit = M.critical, pred;
    for (const auto& p : predicted_critical_pairs(G.complex, f)) pred.push_back(p.second);
    std::sort(crit.begin(), crit.end());
    std::sort(pred.begin(), pred.end());
    if (crit != pred) o.fail(tag + ": critical cells differ from the predicted pairs");
    if (alternating(M.morse_vector()) != G.complex.euler()) o.fail(tag + ": alternating sum differs from Euler characteristic");
  }
  if (done < 100) o.fail("only " + std::to_string(done) + " instances within 200 faces");
  o.detail = o.ok ? std::to_string(done) + " instances" : o.detail;
  return o;
}

Outcome hadamard_cartan() {
  Outcome o;
  std::vector<std::pair<std::string, GeometricComplex>> items;
  for (int d = 1; d <= 3; ++d) items.push_back({"simplex d=" + std::to_string(d), gallery::simplex(d)});
  for (int m = 1; m <= 4; ++m)
    for (int p = 0; p <= 2; ++p)
      items.push_back({"tri_grid " + std::to_string(m) + "x3 pattern " + std::to_string(p), gallery::tri_grid(m, 3, p)});
  for (int k = 3; k <= 12; ++k) items.push_back({"wheel " + std::to_string(k), gallery::wheel(k)});
  for (uint64_t s = 0; s < 6; ++s) items.push_back({"random_convex " + std::to_string(s), gallery::random_convex(9, 2 + s % 2, s)});
  for (uint64_t s = 0; s < 4; ++s) items.push_back({"stellar " + std::to_string(s), gallery::random_stellar(2 + s % 2, 4, s)});
  for (uint64_t s = 0; s < 12; ++s) items.push_back({"stellar d=3 " + std::to_string(s), gallery::random_stellar(3, 4, s)});
  long runs = 0;
  int used = 0, skipped = 0;
  for (const auto& [name, G] : items) {
    if (!has_convex_stars(G)) {
      ++skipped;
      continue;
    }
    ++used;
    std::vector<long> want(G.complex.dim() + 1, 0);
    want[0] = 1;
    for (int v : G.complex.vertices()) {
      ++runs;
      MorseMatching M = gradient_matching(G.complex, distance_oracle(G, G.at(v)));
      if (M.morse_vector() != want) o.fail(name + " from vertex " + std::to_string(v));
    }
  }
  if (used < 12) o.fail("only " + std::to_string(used) + " instances with convex stars");
  if (o.ok)
    o.detail = std::to_string(used) + " complexes, " + std::to_string(runs) + " base vertices, " + std::to_string(skipped) +
               " without convex stars skipped";
  return o;
}

Outcome cubical() {
  Outcome o;
  std::mt19937_64 rng(7);
  auto run = [&](const CubicalComplex& K, int root, const std::string& name) {
    CollapseCertificate c = collapse_cubical_cat0(K, root);
    VerifyResult r = verify_certificate(K.cells(), c);
    if (!r) o.fail(name + ": " + r.reason);
    if (c.target != std::vector<Face>{{root}}) o.fail(name + ": does not end at the root");
  };
  int n = 0;
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= 6; ++k) {
      CubicalComplex K = gallery::grid(m, k);
      run(K, K.vertex_id({0, 0}), "grid " + std::to_string(m) + "x" + std::to_string(k));
      run(K, static_cast<int>(rng() % K.num_vertices()), "grid " + std::to_string(m) + "x" + std::to_string(k) + " random root");
      n += 2;
    }
  for (int k = 1; k <= 10; ++k) {
    CubicalComplex K = gallery::staircase(k);
    run(K, K.vertex_id({0, 0}), "staircase " + std::to_string(k));
    run(K, static_cast<int>(rng() % K.num_vertices()), "staircase " + std::to_string(k) + " random root");
    n += 2;
  }
  if (o.ok) o.detail = std::to_string(n) + " certificates";
  return o;
}

Outcome convex_sd() {
  Outcome o;
  int n = 0;
  for (int d = 2; d <= 3; ++d)
    for (int k = 0; k < 12; ++k) {
      GeometricComplex G = gallery::random_stellar(d, 2 * k + 1, 100 + k);
      if (G.complex.facets().size() > 150) continue;
      std::string tag = "stellar d=" + std::to_string(d) + " k=" + std::to_string(2 * k + 1);
      HudsonResult h = collapse_convex(G, k);
      VerifyResult r = verify_certificate(h.sd.complex, h.cert);
      if (!r) o.fail(tag + ": " + r.reason);
      if (!end_of(h.cert).is_point()) o.fail(tag + ": does not end at a point");
      ++n;
    }
  if (n < 20) o.fail("only " + std::to_string(n) + " subdivisions");
  if (o.ok) o.detail = std::to_string(n) + " subdivisions";
  return o;
}

Outcome star_shaped() {
  Outcome o;
  struct Case {
    std::string name;
    GeometricComplex G;
    Vec x;
    int d;
  };
  std::vector<Case> cs = {
      {"L-shape 2", gallery::lshape_2d(2), gallery::lshape_center(2), 2},
      {"L-shape 3", gallery::lshape_2d(3), gallery::lshape_center(2), 2},
      {"cross 2", gallery::star_ball(2), gallery::star_ball_center(2), 2},
      {"L-prism 2", gallery::lshape_3d(2), gallery::lshape_center(3), 3},
      {"L-prism 3", gallery::lshape_3d(3), gallery::lshape_center(3), 3},
      {"cross 3", gallery::star_ball(3), gallery::star_ball_center(3), 3},
  };
  for (const Case& c : cs) {
    if (is_convex_support(c.G)) o.fail(c.name + " is convex");
    StarCollapse r = collapse_star_shaped(c.G, c.x);
    if (r.subdivisions != c.d - 2) o.fail(c.name + ": wrong number of subdivisions");
    if (r.complex.complex.f_vector() != sd_m(c.G.complex, c.d - 2).complex.f_vector())
      o.fail(c.name + ": realized complex is not sd^(d-2)");
    VerifyResult v = verify_ne(r.complex.complex, r.cert);
    if (!v) o.fail(c.name + ": " + v.reason);
    VerifyResult w = verify_certificate(r.complex.complex, ne_to_collapse(r.complex.complex, r.cert));
    if (!w) o.fail(c.name + " (collapse): " + w.reason);
  }
  if (o.ok) o.detail = std::to_string(cs.size()) + " complexes";
  return o;
}

Outcome hudson() {
  Outcome o;
  int n = 0;
  for (int d = 1; d <= 3; ++d) {
    GeometricComplex C = gallery::simplex(d);
    std::vector<std::pair<std::string, std::optional<std::vector<Face>>>> targets = {{"point", std::nullopt}};
    if (d >= 2) {
      Face f;
      for (int i = 0; i < d; ++i) f.push_back(i);
      targets.push_back({"facet " + to_string(f), std::vector<Face>{f}});
    }
    std::vector<std::pair<std::string, GeometricComplex>> subs = {{"sd", sd(C).geometric()}};
    for (uint64_t s = 0; s < 2; ++s) subs.push_back({"stellar " + std::to_string(s), gallery::random_stellar(d, 3 + d, s)});
    for (const auto& [tname, tgt] : targets) {
      CollapseSearchResult cr = collapse_search(C.complex, tgt);
      if (cr.status != SearchStatus::Found) {
        o.fail("no collapse of the simplex onto " + tname);
        continue;
      }
      SimplicialComplex Cp = end_of(*cr.cert);
      for (const auto& [dname, D] : subs) {
        std::string tag = "d=" + std::to_string(d) + " " + dname + " onto " + tname;
        HudsonResult h = hudson_collapse(C, *cr.cert, D);
        VerifyResult r = verify_certificate(h.sd.complex, h.cert);
        if (!r) o.fail(tag + ": " + r.reason);
        SimplicialComplex want = restriction_oracle(C, Cp, h.sd);
        if (end_of(h.cert) != want || h.target != want) o.fail(tag + ": terminal complex differs from the restriction");
        ++n;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " transfers";
  return o;
}

Outcome negative() {
  Outcome o;
  std::vector<std::pair<std::string, SimplicialComplex>> cs = {{"dunce hat", gallery::dunce_hat()},
                                                               {"Bing's house", gallery::bing_house().complex}};
  for (const auto& [name, C] : cs) {
    if (!free_faces(C).empty()) o.fail(name + " has free faces");
    if (collapse_search(C, std::nullopt).status != SearchStatus::ProvedImpossible) o.fail(name + " not proved impossible");
  }
  for (int d = 1; d <= 3; ++d) {
    SimplicialComplex S = gallery::boundary_sphere(d).complex;
    std::string name = "boundary of simplex d=" + std::to_string(d);
    if (is_non_evasive(S).status != SearchStatus::ProvedImpossible) o.fail(name + " not proved evasive");
    if (collapse_search(S, std::nullopt).status != SearchStatus::ProvedImpossible) o.fail(name + " not proved non-collapsible");
  }
  return o;
}

Outcome endo() {
  Outcome o;
  int n = 0;
  for (int d = 2; d <= 3; ++d) {
    GeometricComplex G = gallery::simplex(d);
    DerivedComplex D = sd(G);
    std::vector<int> bd;
    for (int v : D.complex.vertices())
      if (D.carrier[v] != G.complex.facets()[0]) bd.push_back(v);
    SimplicialComplex want = induced(D.complex, bd);
    for (const Face& delta : D.complex.facets()) {
      std::string tag = "d=" + std::to_string(d) + " facet " + to_string(delta);
      CollapseCertificate c = endo_collapse_sd(G, delta);
      VerifyResult r = verify_certificate(deletion(D.complex, delta), c);
      if (!r) o.fail(tag + ": " + r.reason);
      if (end_of(c) != want) o.fail(tag + ": does not end at the subdivided boundary");
      ++n;
    }
  }
  SimplicialComplex S = gallery::boundary_sphere(3).complex;
  for (const Face& F : S.facets()) {
    CollapseSearchResult r = endo_collapse(S, F);
    if (r.status != SearchStatus::Found) {
      o.fail("sphere minus " + to_string(F) + ": no collapse");
      continue;
    }
    VerifyResult v = verify_certificate(deletion(S, F), *r.cert);
    if (!v) o.fail("sphere minus " + to_string(F) + ": " + v.reason);
    if (!end_of(*r.cert).is_point()) o.fail("sphere minus " + to_string(F) + ": not a point");
    ++n;
  }
  if (o.ok) o.detail = std::to_string(n) + " facet deletions";
  return o;
}

Outcome surfaces() {
  Outcome o;
  for (int g = 1; g <= 5; ++g)
    for (uint64_t s = 1; s <= 3; ++s) {
      SimplicialComplex M = gallery::surface_Mg(g, gallery::random_bijection(g, s));
      std::string tag = "g=" + std::to_string(g) + " seed " + std::to_string(s);
      if (M.facets().size() != static_cast<size_t>(20 * g)) o.fail(tag + ": facet count");
      if (M.euler() != 2 - 2 * g) o.fail(tag + ": Euler characteristic");
      if (!boundary(M).empty()) o.fail(tag + ": has boundary");
    }
  return o;
}

Outcome lemmas() {
  Outcome o;
  for (const LemmaCheck& L : lemma_checks())
    for (uint64_t seed = 0; seed < 25; ++seed) {
      std::string err = L.run(seed);
      if (!err.empty()) o.fail(std::string(L.name) + " seed " + std::to_string(seed) + ": " + err);
    }
  if (o.ok) o.detail = std::to_string(lemma_checks().size()) + " constructions x 25 instances";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Criterion>> all = {
      {"gradient matchings on random convex complexes", gradient_matching_random},
      {"single critical vertex on convex complexes", hadamard_cartan},
      {"cubical collapses of grids and staircases", cubical},
      {"sd of convex subdivisions collapses", convex_sd},
      {"star-shaped complexes are non-evasive after d-2 subdivisions", star_shaped},
      {"collapse transfer to subdivisions", hudson},
      {"negative controls", negative},
      {"endo-collapsibility", endo},
      {"genus g surfaces with 20g facets", surfaces},
      {"lemma constructions", lemmas},
  };
  int failed = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << all[i].first;
    if (!o.detail.empty()) line << " [" << o.detail << "]";
    line.precision(2);
    line << std::fixed << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
