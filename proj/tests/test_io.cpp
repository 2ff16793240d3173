#include "helpers.hpp"
#include "io.hpp"

#include "topo/errors.hpp"
#include "topo/gallery.hpp"
#include "topo/search.hpp"
#include "topo/subdivision.hpp"

#include <doctest.h>

using namespace topo;
using namespace topo::test;
using io::json;

namespace {

io::ComplexDoc doc_of(const gallery::Item& it) {
  io::ComplexDoc d;
  d.name = it.name;
  d.cubical = it.cubical;
  d.complex = it.complex;
  d.cubes = it.cubes;
  d.center = it.center;
  return d;
}

int input_error_kind(const json& j) {
  try {
    io::bundle_from_json(j);
  } catch (const TopoError& e) {
    return static_cast<int>(e.kind());
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rationals survive as p/q strings") {
    Vec p = {Q(-7, 3), Q(0), Q(5)};
    json j = io::point_to_json(p);
    CHECK(j.dump() == R"(["-7/3","0","5"])");
    CHECK(io::point_from_json(j) == p);
    CHECK_THROWS_AS(io::point_from_json(json::parse(R"(["1/0"])")), TopoError);
  }

  TEST_CASE("complex round trip") {
    for (const char* n : {"random_convex", "lshape_3d", "grid", "dunce_hat", "staircase"}) {
      io::ComplexDoc d = doc_of(gallery::generate({n, {}}));
      json j = io::complex_to_json(d);
      io::ComplexDoc back = io::complex_from_json(json::parse(j.dump()));
      CHECK(back.name == d.name);
      CHECK(back.cubical == d.cubical);
      CHECK(io::complex_hash(back) == io::complex_hash(d));
      if (d.cubical) {
        CHECK(back.cubes->maximal_boxes() == d.cubes->maximal_boxes());
      } else {
        CHECK(back.complex.complex == d.complex.complex);
        CHECK(back.complex.pos == d.complex.pos);
      }
      CHECK(back.center == d.center);
      CHECK(io::complex_to_json(back) == j);
    }
  }

  TEST_CASE("certificate round trip") {
    io::ComplexDoc d = doc_of(gallery::generate({"simplex", {{"d", 3}}}));
    io::CertificateDoc c;
    c.collapse = *collapse_search(d.complex.complex, std::nullopt).cert;
    c.source_name = d.name;
    c.source_hash = io::complex_hash(d);
    io::CertificateDoc back = io::certificate_from_json(json::parse(io::certificate_to_json(c).dump()));
    CHECK(back.collapse.steps == c.collapse.steps);
    CHECK(back.collapse.target == c.collapse.target);
    CHECK(back.source_hash == c.source_hash);

    SimplicialComplex S = sd(d.complex.complex).complex;
    io::CertificateDoc n;
    n.ne = true;
    n.tree = is_non_evasive(S).cert;
    io::CertificateDoc nb = io::certificate_from_json(io::certificate_to_json(n));
    CHECK(nb.ne);
    CHECK(verify_ne(S, nb.tree).ok);
    CHECK(ne_size(nb.tree) == ne_size(n.tree));
    CHECK(io::certificate_to_json(nb) == io::certificate_to_json(n));
  }

  TEST_CASE("bundles") {
    io::ComplexDoc d = doc_of(gallery::generate({"simplex", {}}));
    io::Bundle b{d, std::nullopt};
    io::Bundle back = io::bundle_from_json(io::bundle_to_json(b));
    REQUIRE(back.complex);
    CHECK_FALSE(back.certificate);
    io::Bundle bare = io::bundle_from_json(io::complex_to_json(d));
    CHECK(bare.complex);
  }

  TEST_CASE("malformed input") {
    const int bad = static_cast<int>(ErrorKind::InputError);
    CHECK(input_error_kind(json::parse(R"([1,2])")) == bad);
    CHECK(input_error_kind(json::parse(R"({"facets":[[1,2]],"vertices":[{"id":1,"coords":["0"]},{"id":2}]})")) == bad);
    CHECK(input_error_kind(json::parse(R"({"facets":[[1,2]],"vertices":[{"id":1},{"id":1}]})")) == bad);
    CHECK(input_error_kind(json::parse(
              R"({"facets":[[1,2]],"vertices":[{"id":1,"coords":["0"]},{"id":2,"coords":["0","1"]}]})")) == bad);
    CHECK(input_error_kind(json::parse(R"({"facets":[]})")) == bad);
    CHECK(input_error_kind(json::parse(R"({"facets":[[1,"x"]]})")) == bad);
  }
}
