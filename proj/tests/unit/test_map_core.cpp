#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "trisurf/map_io.hpp"

using namespace trisurf;

namespace {
bool mentions(const std::vector<Violation>& v, const std::string& s) {
  for (const auto& x : v)
    if (x.message.find(s) != std::string::npos) return true;
  return false;
}
}  // namespace

TEST_CASE("validate: two triangles glued into a torus") {
  CHECK(validate(fixtures::torus1()).empty());
  CHECK(validate(fixtures::sphere2()).empty());
}

TEST_CASE("validate reports a fixed point of alpha") {
  CombMap m = fixtures::two_triangles({1, 5, 6, 1, 2, 3});
  const auto v = validate(m);
  REQUIRE_FALSE(v.empty());
  CHECK(mentions(v, "alpha(1)=1"));
}

TEST_CASE("validate reports disconnection") {
  // two separate triangle pairs on 12 darts
  std::vector<Dart> sigma = triangle_sigma(4);
  std::vector<Dart> alpha{4, 5, 6, 1, 2, 3, 10, 11, 12, 7, 8, 9};
  const auto v = validate(CombMap(sigma, alpha, 1));
  CHECK(mentions(v, "not connected"));
  CHECK(mentions(v, "2 components"));
}

TEST_CASE("validate reports non-triangular faces and bad permutations") {
  CombMap quad({2, 3, 4, 1}, {3, 4, 1, 2}, 1);
  CHECK(mentions(validate(quad), "face of degree 4"));
  CHECK(validate(quad, false).empty());
  CombMap notperm({2, 2, 1, 5, 6, 4}, {4, 5, 6, 1, 2, 3}, 1);
  CHECK(mentions(validate(notperm), "not a permutation"));
  CombMap notinv = fixtures::two_triangles({4, 5, 6, 2, 1, 3});
  CHECK(mentions(validate(notinv), "not an involution"));
  CHECK(mentions(validate(CombMap({}, {}, 1)), "no darts"));
}

TEST_CASE("euler_data on the hand examples") {
  CHECK(euler_data(fixtures::sphere2()) == EulerData{3, 3, 2, 0});
  CHECK(euler_data(fixtures::torus1()) == EulerData{1, 3, 2, 1});
  const Cells c = cells(fixtures::sphere2());
  REQUIRE(c.n_vertices() == 3);
  CHECK(c.vertices[0] == std::vector<Dart>{1, 5});
  CHECK(c.vertices[1] == std::vector<Dart>{2, 4});
  CHECK(c.vertices[2] == std::vector<Dart>{3, 6});
  CHECK(cells(fixtures::torus1()).vertices[0] == std::vector<Dart>{1, 5, 3, 4, 2, 6});
  CHECK_THROWS_AS(euler_data(fixtures::two_triangles({1, 5, 6, 1, 2, 3})), MapError);
}

TEST_CASE("every oracle map is valid and satisfies V = n + 2 - 2g") {
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 2; ++g)
      for (const auto& m : enumerate_rooted(n, g)) {
        REQUIRE(validate(m).empty());
        const EulerData e = euler_data(m);
        CHECK(e.genus == g);
        CHECK(e.edges == 3 * n);
        CHECK(e.faces == 2 * n);
        CHECK(e.vertices == n + 2 - 2 * g);
      }
}

TEST_CASE("canonical form is idempotent and invariant under relabeling") {
  std::mt19937_64 rng(11);
  std::set<std::vector<Dart>> seen;
  for (const auto& m : fixtures::oracle_maps(3)) {
    const CombMap c = canonical_form(m);
    CHECK(canonical_form(c) == c);
    CHECK(c.root() == 1);
    for (int k = 0; k < 3; ++k) {
      const CombMap r = relabel(m, fixtures::random_permutation(m.n_darts(), rng));
      CHECK(canonical_form(r) == c);
    }
    std::vector<Dart> key = c.alpha_images();
    key.insert(key.end(), c.sigma_images().begin(), c.sigma_images().end());
    CHECK(seen.insert(key).second);
  }
  CHECK(canonical_form(fixtures::sphere2()) != canonical_form(fixtures::torus1()));
}

TEST_CASE("rerooting changes the canonical form only up to rooted isomorphism") {
  const CombMap t = fixtures::torus1();
  // tau(1,1) = 1: all six rootings of the torus are isomorphic
  std::set<std::vector<Dart>> forms;
  for (Dart r = 1; r <= 6; ++r) forms.insert(canonical_form(t.with_root(r)).alpha_images());
  CHECK(forms.size() == 1);
  std::set<std::vector<Dart>> sphere_forms;
  for (Dart r = 1; r <= 6; ++r) sphere_forms.insert(canonical_form(fixtures::sphere2().with_root(r)).alpha_images());
  CHECK(sphere_forms.size() == 1);
}

TEST_CASE("boundary profile") {
  SUBCASE("no boundaries") {
    const auto p = boundary_profile(BoundaryMap{fixtures::torus1(), {}});
    CHECK(p.lengths.empty());
    CHECK(p.internal_faces == 2);
    CHECK(p.genus == 1);
  }
  SUBCASE("one triangle bounded by a boundary of length 3") {
    BoundaryMap b{fixtures::sphere2(), {4}};
    const auto p = boundary_profile(b);
    CHECK(p.lengths == std::vector<int>{3});
    CHECK(p.internal_faces == 1);
    CHECK(p.genus == 0);
  }
  SUBCASE("a non-simple boundary is rejected with the vertex named") {
    BoundaryMap b{fixtures::torus1(), {4}};
    const auto v = validate(b);
    CHECK(mentions(v, "not simple"));
    CHECK_THROWS_AS(boundary_profile(b), MapError);
  }
  SUBCASE("touching boundaries are rejected with the shared vertex named") {
    BoundaryMap b{fixtures::sphere2(), {1, 4}};
    CHECK(mentions(validate(b), "share vertex"));
    try {
      boundary_profile(b);
      FAIL("expected throw");
    } catch (const MapError& e) {
      CHECK(std::string(e.what()).find("vertex") != std::string::npos);
    }
  }
}

TEST_CASE("json round trip") {
  for (const auto& m : fixtures::oracle_maps(2)) {
    const auto j = to_json(m);
    CHECK(j["n_darts"] == m.n_darts());
    CHECK(map_from_json(nlohmann::json::parse(j.dump())) == m);
  }
  BoundaryMap b{fixtures::sphere2().with_root(2), {5}};
  const auto back = boundary_map_from_json(nlohmann::json::parse(dump_map(b)));
  CHECK(back == b);
  CHECK(to_json(b)["boundaries"][0] == std::vector<int>{5, 6, 4});
  CHECK_THROWS_AS(map_from_json(nlohmann::json::parse(R"({"n_darts":3,"sigma":[1,2],"alpha":[1,2,3],"root":1})")), MapError);
  CHECK_THROWS_AS(boundary_map_from_json(nlohmann::json::parse(
                      R"({"n_darts":6,"sigma":[2,3,1,5,6,4],"alpha":[4,6,5,1,3,2],"root":1,"boundaries":[[4,6]]})")),
                  MapError);
}

TEST_CASE("connected components and disjoint union") {
  const CombMap u = disjoint_union(fixtures::torus1(), fixtures::sphere2());
  const auto comps = connected_components(u);
  REQUIRE(comps.size() == 2);
  CHECK(restrict_to(u, comps[1], 7) == fixtures::sphere2());
  CHECK(restrict_to(u, comps[0], 1) == fixtures::torus1());
}
