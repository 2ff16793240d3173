#include "helpers.hpp"

#include "topo/errors.hpp"
#include "topo/gallery.hpp"

#include <doctest.h>

using namespace topo;
using namespace topo::test;

namespace {

GeometricComplex unit_triangle() { return gallery::simplex(2); }

GeometricComplex cone_over_square() {
  GeometricComplex G;
  G.pos[0] = {0, 0, 1};
  G.pos[1] = {1, 0, 0};
  G.pos[2] = {0, 1, 0};
  G.pos[3] = {-1, 0, 0};
  G.pos[4] = {0, -1, 0};
  G.complex = cx({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}});
  return G;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("closest point on a star") {
    GeometricComplex T = unit_triangle();
    ClosestPoint c = closest_point_on_star(T.at(1), {1}, T);
    CHECK(c.point == T.at(1));
    CHECK(c.carrier == Face{1});

    GeometricComplex S;
    S.pos[0] = {0, 0};
    S.pos[1] = {1, 0};
    S.complex = cx({{0, 1}});
    c = closest_point_on_star(pt({2, 1}), {0}, S);
    CHECK(c.point == pt({1, 0}));
    CHECK(c.carrier == Face{1});

    c = closest_point_on_star(pt({1, 1}), {0}, T);
    CHECK(c.point == pt({Q(1, 2), Q(1, 2)}));
    CHECK(c.carrier == Face{1, 2});
    CHECK(c.dist2 == Q(1, 2));
  }

  TEST_CASE("closest point agrees with per-facet projections") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      GeometricComplex G = gallery::random_convex(9, 2, seed);
      Vec w = {ratio(static_cast<long>(seed * 37 % 200) - 100, 7), ratio(static_cast<long>(seed * 53 % 200) - 100, 9)};
      for (int v : G.complex.vertices()) {
        ClosestPoint c = closest_point_on_star(w, {v}, G);
        for (int f : G.complex.facets_at(v)) {
          const Face& F = G.complex.facets()[f];
          ClosestPoint p = closest_point_on_faces(w, nonempty_subfaces(F), G);
          CHECK(c.dist2 <= p.dist2);
        }
      }
    }
  }

  TEST_CASE("star-shapedness") {
    GeometricComplex sq = gallery::tri_grid(2, 2, 0);
    CHECK(is_star_shaped(sq, pt({1, 1})));
    GeometricComplex L = gallery::lshape_2d(2);
    CHECK(is_star_shaped(L, pt({1, 1})));
    StarShapedResult r = star_shaped_check(L, pt({2, 1}));
    CHECK_FALSE(r.star_shaped);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(SupportOracle(L).contains_segment(pt({2, 1}), *r.witness));
  }

  TEST_CASE("convex support") {
    CHECK(is_convex_support(gallery::tri_grid(3, 2, 2)));
    CHECK_FALSE(is_convex_support(gallery::lshape_2d(2)));
    CHECK(is_convex_support(gallery::simplex(3)));
    CHECK_FALSE(is_convex_support(gallery::lshape_3d(2)));
    CHECK(is_convex_support(gallery::random_convex(12, 3, 5)));
  }

  TEST_CASE("generic directions") {
    GeometricComplex S;
    S.pos[0] = {0};
    S.pos[1] = {1};
    S.complex = cx({{0, 1}});
    CHECK(is_generic_direction(S, pt({3})));
    GeometricComplex sq = gallery::tri_grid(1, 1, 1);
    CHECK_FALSE(is_generic_direction(sq, pt({1, 1})));
    CHECK(is_generic_direction(sq, pt({1, Q(11, 10)})));
    CHECK(is_generic_direction(sq, generic_direction(sq, 7)));
    GeometricComplex P;
    P.pos[0] = {0, 0};
    P.complex = cx({{0}});
    CHECK(is_generic_direction(P, generic_direction(P, 1)));
  }

  TEST_CASE("split and lower links") {
    // lower means strictly on the side opposite to the outer normal
    GeometricComplex K = cone_over_square();
    CHECK(lower_link(0, pt({0, 0, 1}), K) == link({0}, K.complex));
    CHECK(lower_link(0, pt({0, 0, -1}), K).empty());
    SplitLink sl = split_link(0, pt({0, 0, 1}), K);
    CHECK(sl.cells.f_vector() == fv({4, 4}));

    GeometricComplex T = gallery::tri_grid(2, 2, 0);
    Vec nu = pt({Q(1, 10), 1});
    SimplicialComplex low = lower_link(4, nu, T);
    CHECK(low.dim() == 1);
    CHECK(low.euler() == 1);
    for (int u : low.vertices()) CHECK(dot(sub(T.at(u), T.at(4)), nu) < 0);

    GeometricComplex W = gallery::wheel(6);
    Vec up = pt({Q(1, 100), 1});
    for (int v : W.complex.vertices()) {
      SimplicialComplex ll = lower_link(v, up, W);
      SplitLink s = split_link(v, up, W);
      for (const Face& f : ll.faces()) CHECK(s.cells.contains(f));
    }
    CHECK_THROWS_AS(lower_link(4, pt({1, 0}), T), TopoError);
  }

  TEST_CASE("restriction to a halfspace") {
    GeometricComplex T = gallery::boundary_sphere(2);
    CHECK(restrict_to_halfspace(T, {pt({0, -1}), Q(-1, 2)}) == cx({{0, 1}}));
    GeometricComplex grid = gallery::tri_grid(3, 3, 0);
    SimplicialComplex R = restrict_to_halfspace(grid, {pt({-1, -1}), Q(-3)});
    CHECK(R.f_vector()[0] == 10);
    CHECK(R.f_vector()[2] == 6);
    for (int v : R.vertices()) CHECK(grid.at(v)[0] + grid.at(v)[1] <= 3);
    CHECK(restrict_to_halfspace(grid, {pt({1, 0}), Q(-1)}) == grid.complex);
  }

  TEST_CASE("spherical distance") {
    Vec x = pt({1, 0});
    CHECK(spherical_distance_less(x, pt({5, 1}), x));
    CHECK(spherical_distance_compare(pt({1, 1}), pt({1, -1}), x) == 0);
    CHECK(spherical_distance_less(pt({7, 4}), pt({4, 7}), x));
    CHECK(spherical_distance_less(pt({-1, 1}), pt({-1, 0}), x));
    CHECK(spherical_distance_compare(pt({2, 0}), x, x) == 0);
  }

  TEST_CASE("volumes") {
    CHECK(simplex_volume(gallery::simplex(3).points({0, 1, 2, 3})) == Q(1, 6));
  }
}
