#include "helpers.hpp"

#include "topo/errors.hpp"
#include "topo/gallery.hpp"

#include <doctest.h>

using namespace topo;
using namespace topo::test;

TEST_SUITE("complex") {
  TEST_CASE("from_facets closes downward") {
    CHECK(cx({{1, 2, 3}}).f_vector() == fv({3, 3, 1}));
    CHECK(cx({{1, 2}, {2, 3}, {1, 3}}).f_vector() == fv({3, 3}));
    CHECK(gallery::dunce_hat().f_vector() == fv({8, 24, 17}));
  }

  TEST_CASE("redundant and unsorted facets") {
    SimplicialComplex C = cx({{3, 1, 2}, {1, 2}, {2, 3}});
    CHECK(C.facets() == std::vector<Face>{{1, 2, 3}});
  }

  TEST_CASE("empty input") {
    CHECK(SimplicialComplex::closure_of({}).empty());
  }

  TEST_CASE("star") {
    SimplicialComplex bd = cx({{1, 2}, {2, 3}, {1, 3}});
    CHECK(star({1}, bd) == cx({{1, 2}, {1, 3}}));
    SimplicialComplex tri = cx({{1, 2, 3}});
    CHECK(star({1, 2}, tri) == tri);
    GeometricComplex W = gallery::wheel(5);
    CHECK(star({0}, W.complex) == W.complex);
  }

  TEST_CASE("link") {
    SimplicialComplex S = gallery::boundary_sphere(3).complex;
    CHECK(link({0}, S) == cx({{1, 2}, {2, 3}, {1, 3}}));
    CHECK(link({0, 1}, S) == cx({{2}, {3}}));
    SimplicialComplex L = link({0}, gallery::wheel(6).complex);
    CHECK(L.f_vector() == fv({6, 6}));
    CHECK(L.euler() == 0);
    for (int v : L.vertices()) CHECK(link({v}, L).vertices().size() == 2);
    CHECK(link({}, S) == S);
  }

  TEST_CASE("deletion") {
    CHECK(deletion(cx({{1, 2, 3}}), 1) == cx({{2, 3}}));
    CHECK(deletion(cx({{1, 2}, {2, 3}, {1, 3}}), 1) == cx({{2, 3}}));
    SimplicialComplex D = gallery::dunce_hat();
    for (int v : D.vertices()) CHECK(deletion(D, v).f_vector()[0] == 7);
    CHECK(deletion(cx({{1, 2, 3}}), Face{1, 2}) == cx({{1, 3}, {2, 3}}));
  }

  TEST_CASE("join and cone") {
    CHECK(cone(4, cx({{1, 2}, {2, 3}, {1, 3}})).f_vector() == fv({4, 6, 3}));
    CHECK(cone(2, cx({{1}})) == cx({{1, 2}}));
    CHECK(join(Face{1, 2}, Face{3}) == cx({{1, 2, 3}}));
    CHECK_THROWS_AS(join(Face{1, 2}, Face{2, 3}), TopoError);
  }

  TEST_CASE("boundary") {
    CHECK(boundary(cx({{0, 1, 2, 3}})) == gallery::boundary_sphere(3).complex);
    CHECK(boundary(gallery::boundary_sphere(3).complex).empty());
    CHECK(boundary(cx({{1, 2, 3}, {2, 3, 4}})) == cx({{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    CHECK_THROWS_AS(boundary(gallery::bing_house().complex), TopoError);
  }

  TEST_CASE("Euler characteristic of spheres") {
    for (int d = 1; d <= 5; ++d) CHECK(gallery::boundary_sphere(d).complex.euler() == 1 + (d % 2 ? 1 : -1));
  }

  TEST_CASE("property: downward closure, link/star duality, star-deletion cover") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
      SimplicialComplex C = random_2complex(7, 6, seed);
      for (const Face& f : C.faces())
        for (const Face& g : nonempty_subfaces(f)) CHECK(C.contains(g));
      for (int v : C.vertices()) {
        SimplicialComplex St = star({v}, C);
        SimplicialComplex Lk = link({v}, C);
        SimplicialComplex stv = deletion(St, v);
        CHECK(Lk == stv);
      }
      for (const Face& s : C.faces()) CHECK(complex_union(star(s, C), deletion(C, s)) == C);
    }
  }
}
