#include "helpers.hpp"

#include "topo/gallery.hpp"
#include "topo/subdivision.hpp"

#include <doctest.h>

#include <numeric>

using namespace topo;
using namespace topo::test;

namespace {

Q total_volume(const GeometricComplex& G) {
  Q v = 0;
  for (const Face& f : G.complex.facets()) v += simplex_volume(G.points(f));
  return v;
}

}  // namespace

TEST_SUITE("subdivision") {
  TEST_CASE("f-vectors of derived subdivisions") {
    CHECK(sd(cx({{1, 2}})).complex.f_vector() == fv({3, 2}));
    CHECK(sd(cx({{1, 2, 3}})).complex.f_vector() == fv({7, 12, 6}));
    CHECK(sd(cx({{1, 2, 3, 4}})).complex.f_vector() == fv({15, 50, 60, 24}));
    CHECK(sd_m(cx({{1, 2, 3}}), 2).complex.f_vector() == fv({25, 60, 36}));
    CHECK(sd(gallery::dunce_hat()).complex.f_vector() == fv({49, 150, 102}));
    CHECK(sd_m(cx({{1, 2, 3}}), 0).complex == cx({{1, 2, 3}}));
  }

  TEST_CASE("property: sd vertices are faces, facets are maximal chains") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      SimplicialComplex C = random_2complex(6, 5, seed);
      DerivedComplex D = sd(C);
      CHECK(D.complex.f_vector()[0] == static_cast<long>(C.num_faces()));
      CHECK(D.complex.dim() == C.dim());
      for (const Face& F : D.complex.facets()) {
        std::vector<Face> ch = D.chain(F);
        for (size_t i = 0; i + 1 < ch.size(); ++i) CHECK(is_subface(ch[i], ch[i + 1]));
        CHECK(C.facets_containing(ch.back()).size() > 0);
        CHECK(std::find(C.facets().begin(), C.facets().end(), ch.back()) != C.facets().end());
        CHECK(ch.front().size() == 1);
      }
      for (const Face& f : D.complex.faces())
        for (const Face& g : nonempty_subfaces(f)) CHECK(is_subface(D.carrier_of(g), D.carrier_of(f)));
    }
  }

  TEST_CASE("iterated carriers land in the original complex") {
    SimplicialComplex C = cx({{1, 2, 3}, {3, 4}});
    DerivedComplex D = sd_m(C, 2);
    for (const Face& f : D.complex.faces())
      for (int v : f) CHECK(C.contains(D.root_carrier[v]));
  }

  TEST_CASE("geometric sd preserves volume") {
    GeometricComplex G = gallery::random_convex(8, 3, 2);
    DerivedComplex D = sd(G);
    CHECK(total_volume(D.geometric()) == total_volume(G));
    for (const Face& f : D.complex.facets()) CHECK(simplex_volume(D.geometric().points(f)) > 0);
  }

  TEST_CASE("derived order") {
    SimplicialComplex E = cx({{1, 2}});
    DerivedOrder o = derived_order(E, {{1}, {2}});
    CHECK(o.order == std::vector<Face>{{1}, {1, 2}, {2}});
    DerivedOrder p = derived_order(cx({{0}}), {{0}});
    CHECK(p.order.size() == 1);
  }

  TEST_CASE("property: derived order rules") {
    std::vector<SimplicialComplex> cs = {cx({{1, 2}, {2, 3}, {1, 3}}), cx({{1, 2, 3}}), cx({{0, 1, 2, 3}})};
    for (uint64_t s = 0; s < 10; ++s) cs.push_back(random_2complex(6, 4, s));
    std::mt19937_64 rng(3);
    for (const SimplicialComplex& C : cs) {
      std::vector<int> vs = C.vertices();
      std::shuffle(vs.begin(), vs.end(), rng);
      std::vector<Face> seed;
      for (int v : vs) seed.push_back({v});
      DerivedOrder o = derived_order(C, seed);
      CHECK(o.order.size() == C.num_faces());
      for (const Face& s : C.faces()) {
        if (s.size() < 2) continue;
        Face lo{s[0]};
        for (int v : s)
          if (o.less({v}, lo)) lo = {v};
        CHECK(o.less(lo, s));
        for (int v : s)
          if (Face{v} != lo) CHECK(o.less(s, {v}));
      }
    }
  }

  TEST_CASE("derived neighborhoods") {
    SimplicialComplex tri = cx({{1, 2, 3}});
    DerivedComplex D = sd(tri);
    CHECK(derived_neighborhood(tri, D) == D.complex);
    SimplicialComplex N = derived_neighborhood(cx({{1}}), sd(cx({{1, 2}})));
    CHECK(N.f_vector() == fv({2, 1}));
    DerivedComplex E = sd(cx({{1, 2}}));
    CHECK(N == cx({{E.id({1}), E.id({1, 2})}}));
    CHECK(derived_neighborhood(boundary(tri), D).f_vector() == fv({7, 12, 6}));
  }

  TEST_CASE("H-splitting derived subdivision") {
    GeometricComplex S;
    S.pos[0] = {0};
    S.pos[1] = {1};
    S.complex = cx({{0, 1}});
    DerivedComplex D = h_splitting_sd(S, {pt({1}), Q(1, 2)});
    CHECK(D.pos.at(D.id({0, 1})) == pt({Q(1, 2)}));

    GeometricComplex T = gallery::simplex(2);
    Halfspace H{pt({0, 1}), Q(1, 2)};
    DerivedComplex DT = h_splitting_sd(T, H);
    GeometricComplex GT = DT.geometric();
    std::vector<int> on;
    for (int v : GT.complex.vertices())
      if (dot(GT.at(v), H.normal) == H.offset) on.push_back(v);
    SimplicialComplex R = induced(GT.complex, on);
    CHECK(R.f_vector() == fv({3, 2}));
    CHECK(total_volume(GT) == total_volume(T));
    for (const Face& f : GT.complex.facets()) CHECK(simplex_volume(GT.points(f)) > 0);

    DerivedComplex plain = h_splitting_sd(T, {pt({0, 1}), Q(5)});
    CHECK(plain.pos == sd(T).pos);
  }

  TEST_CASE("property: H-splitting keeps volume") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
      GeometricComplex G = gallery::random_convex(7, 3, seed);
      Halfspace H{pt({1, Q(1, 3), Q(1, 7)}), ratio(static_cast<long>(seed) * 11 - 40, 3)};
      DerivedComplex D = h_splitting_sd(G, H);
      GeometricComplex GD = D.geometric();
      CHECK(total_volume(GD) == total_volume(G));
      for (const Face& f : GD.complex.facets()) CHECK(simplex_volume(GD.points(f)) > 0);
    }
  }
}
