#include "helpers.hpp"

#include "topo/errors.hpp"
#include "topo/gallery.hpp"
#include "topo/lemmas.hpp"
#include "topo/search.hpp"

#include <doctest.h>

#include <set>

using namespace topo;
using namespace topo::test;

namespace {

// Every complex on at most 5 vertices with a few facets and at most 12 faces.
std::vector<SimplicialComplex> small_complexes() {
  std::vector<Face> pool;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      pool.push_back({a, b});
      for (int c = b + 1; c < 5; ++c) pool.push_back({a, b, c});
    }
  std::vector<SimplicialComplex> out;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    std::vector<Face> fs;
    int k = 1 + rng() % 4;
    for (int j = 0; j < k; ++j) fs.push_back(pool[rng() % pool.size()]);
    SimplicialComplex C = SimplicialComplex::from_facets(fs);
    if (C.num_faces() <= 12) out.push_back(C);
  }
  return out;
}

bool connected(const SimplicialComplex& C) {
  std::vector<int> vs = C.vertices();
  std::set<int> seen{vs.front()};
  std::vector<int> todo{vs.front()};
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    SimplicialComplex L = link({v}, C);
    for (int u : L.vertices())
      if (seen.insert(u).second) todo.push_back(u);
  }
  return seen.size() == vs.size();
}

}  // namespace

TEST_SUITE("collapse") {
  TEST_CASE("free faces") {
    CHECK(free_faces(cx({{1, 2, 3}})) == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(free_faces(gallery::dunce_hat()).empty());
    CHECK(free_faces(cx({{1, 2}, {2, 3}, {1, 3}})).empty());
    CHECK(free_faces(gallery::bing_house().complex).empty());
  }

  TEST_CASE("elementary collapses") {
    CHECK(elementary_collapse(cx({{1, 2, 3}}), {1, 2}) == cx({{1, 3}, {2, 3}}));
    CHECK(elementary_collapse(cx({{1, 2}}), {2}) == cx({{1}}));
    CHECK_THROWS_AS(elementary_collapse(cx({{1, 2, 3}}), {1}), TopoError);
    SimplicialComplex C = cx({{1, 2, 3}});
    C = elementary_collapse(C, {1, 2});
    C = elementary_collapse(C, {1});
    C = elementary_collapse(C, {3});
    CHECK(C == cx({{2}}));
  }

  TEST_CASE("collapse search") {
    SimplicialComplex T = cx({{0, 1, 2, 3}});
    CollapseSearchResult r = collapse_search(T, std::nullopt);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_certificate(T, *r.cert).ok);
    CHECK(collapse_search(cx({{1, 2, 3}}), std::nullopt).cert->steps.size() == 3);

    CollapseSearchResult d = collapse_search(gallery::dunce_hat(), std::nullopt);
    CHECK(d.status == SearchStatus::ProvedImpossible);
    CHECK(d.nodes <= 1);
    CHECK(collapse_search(gallery::bing_house().complex, std::nullopt).status == SearchStatus::ProvedImpossible);

    CollapseSearchResult e = collapse_search(cx({{1, 2, 3}}), std::vector<Face>{{1, 2}});
    REQUIRE(e.status == SearchStatus::Found);
    CHECK(e.cert->target == std::vector<Face>{{1, 2}});
  }

  TEST_CASE("budget is reported separately") {
    CollapseSearchResult r = collapse_search(sd(cx({{0, 1, 2, 3}})).complex, std::nullopt, {1, 0});
    CHECK(r.status != SearchStatus::ProvedImpossible);
  }

  TEST_CASE("verifier rejects reordered steps") {
    SimplicialComplex T = cx({{0, 1, 2, 3}});
    CollapseCertificate c = *collapse_search(T, std::nullopt).cert;
    CollapseCertificate bad = c;
    std::reverse(bad.steps.begin(), bad.steps.end());
    VerifyResult v = verify_certificate(T, bad);
    CHECK_FALSE(v.ok);
    CHECK(v.failing_step == 0);
    bad = c;
    bad.target = {{0, 1}};
    CHECK_FALSE(verify_certificate(T, bad).ok);
  }

  TEST_CASE("non-evasiveness") {
    SimplicialComplex K = cone(9, gallery::dunce_hat());
    NECertificate c = cone_ne_certificate(K, 9);
    CHECK(verify_ne(K, c).ok);
    CHECK(is_non_evasive(K).status == SearchStatus::Found);
    for (int d = 1; d <= 3; ++d) {
      SimplicialComplex S = gallery::boundary_sphere(d).complex;
      CHECK(is_non_evasive(S).status == SearchStatus::ProvedImpossible);
      CHECK(collapse_search(S, std::nullopt).status == SearchStatus::ProvedImpossible);
    }
    SimplicialComplex sdt = sd(cx({{1, 2, 3}})).complex;
    NESearchResult r = is_non_evasive(sdt);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_ne(sdt, r.cert).ok);
    CHECK_FALSE(verify_ne(gallery::boundary_sphere(2).complex, c).ok);
  }

  TEST_CASE("trees") {
    SimplicialComplex T = cx({{1, 2}, {2, 3}, {2, 4}, {4, 5}});
    NECertificate c = tree_certificate(T);
    REQUIRE(c);
    CHECK(verify_ne(T, c).ok);
    CHECK_FALSE(tree_certificate(cx({{1, 2}, {2, 3}, {1, 3}})));
  }

  TEST_CASE("cone lemma steps") {
    SimplicialComplex tri = cx({{1, 2, 3}});
    CHECK(ne_cone_lemma_steps(tri, 1, 0).steps.empty());

    std::vector<DerivedComplex> tower = sd_tower(tri, 1);
    NESequence s = ne_cone_lemma_steps(tri, 1, 1);
    std::vector<int> expect = {tower[0].id({1, 2}), tower[0].id({1, 3}), tower[0].id({1, 2, 3})};
    std::vector<int> got;
    for (const NEStep& st : s.steps) got.push_back(st.vertex);
    CHECK(got == expect);
    SimplicialComplex start = deletion(tower[0].complex, iterated_vertex_id(tower, 1));
    CHECK(verify_ne_steps(start, s).ok);
    SimplicialComplex K = start;
    for (const NEStep& st : s.steps) {
      CHECK(cone_apex(link({st.vertex}, K)) >= 0);
      K = deletion(K, st.vertex);
    }
    CHECK(K.f_vector() == fv({3, 2}));

    SimplicialComplex edge = cx({{1, 2}});
    std::vector<DerivedComplex> te = sd_tower(edge, 1);
    NESequence se = ne_cone_lemma_steps(edge, 1, 1);
    REQUIRE(se.steps.size() == 1);
    CHECK(se.steps[0].vertex == te[0].id({1, 2}));
    CHECK(se.target == std::vector<Face>{{te[0].id({2})}});
  }

  TEST_CASE("small complexes: search and constructions agree") {
    int collapsible = 0, not_collapsible = 0;
    for (const SimplicialComplex& C : small_complexes()) {
      CollapseSearchResult r = collapse_search(C, std::nullopt);
      REQUIRE(r.status != SearchStatus::BudgetExceeded);
      GreedyResult g = greedy_collapse(C, std::nullopt);
      NESearchResult ne = is_non_evasive(C);
      REQUIRE(ne.status != SearchStatus::BudgetExceeded);
      bool found = r.status == SearchStatus::Found;
      CHECK(found == g.reached);
      if (found) {
        ++collapsible;
        CHECK(verify_certificate(C, *r.cert).ok);
        CHECK(verify_certificate(C, g.cert).ok);
        CHECK(C.euler() == 1);
        CHECK(connected(C));
      } else {
        ++not_collapsible;
      }
      if (ne.status == SearchStatus::Found) {
        CHECK(found);
        CHECK(verify_certificate(C, ne_to_collapse(C, ne.cert)).ok);
      }
      // at this size, collapsible and non-evasive coincide
      CHECK((ne.status == SearchStatus::Found) == found);
    }
    CHECK(collapsible > 20);
    CHECK(not_collapsible > 20);
  }
}
