#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "trisurf/sampler.hpp"
#include "trisurf/topology.hpp"

using namespace trisurf;

namespace {

// Closed walks of exactly `len` darts starting at every vertex.
void closed_walks(const CombMap& m, const Cells& c, int len, const std::function<void(const Walk&)>& f) {
  Walk w;
  std::function<void(int, int)> go = [&](int start, int v) {
    if (static_cast<int>(w.size()) == len) {
      if (v == start) f(w);
      return;
    }
    for (Dart d : c.vertices[v]) {
      w.push_back(d);
      go(start, c.vertex(m.alpha(d)));
      w.pop_back();
    }
  };
  for (int v = 0; v < c.n_vertices(); ++v) go(v, v);
}

Walk commutator(const CombMap& m, const Walk& x, const Walk& y) {
  return concat(concat(x, y), concat(reverse_walk(m, x), reverse_walk(m, y)));
}

}  // namespace

TEST_CASE("walk predicates") {
  const CombMap s = fixtures::sphere2();
  const Cells c = cells(s);
  CHECK(is_closed_walk(s, c, {1, 2, 3}));
  CHECK(is_closed_walk(s, c, {1, 4}));
  CHECK_FALSE(is_simple_cycle(s, c, {1, 4}));
  CHECK(is_simple_cycle(s, c, {1, 2, 3}));
  CHECK_FALSE(is_closed_walk(s, c, {1, 3}));
  CHECK(is_path(s, c, {1, 2}));
  CHECK(is_simple_path(s, c, {1, 2}));
  CHECK(is_simple_path(s, c, {}));
  CHECK_THROWS_AS(require_closed_walk(s, c, {}), MapError);
  CHECK(reverse_walk(s, {1, 2, 3}) == Walk{5, 6, 4});
  CHECK(canonical_cycle(s, {2, 3, 1}) == Walk{1, 2, 3});
  CHECK(lex_min_rotation({5, 2, 9}) == Walk{2, 9, 5});
  CHECK(is_spur_free_cyclic(s, {1, 2, 3}));
  CHECK_FALSE(is_spur_free_cyclic(s, {1, 4}));
}

TEST_CASE("homology on the one-vertex torus") {
  const MapTopology t(fixtures::torus1());
  CHECK(t.homology().rank() == 2);
  for (Dart d : {1, 2, 3}) CHECK_FALSE(t.is_null_homologous({d}));
  // the three loop classes span Z^2: two independent, the third their combination
  const auto h1 = t.homology_class({1}), h2 = t.homology_class({2}), h3 = t.homology_class({3});
  const long det = h1[0] * h2[1] - h1[1] * h2[0];
  CHECK(std::abs(det) == 1);
  CHECK(t.is_null_homologous({1, 2, 3}));
  CHECK(t.is_null_homologous({4, 5, 6}));
  CHECK(t.homology_class({1, 2}) == h1 + h2);
  CHECK_THROWS_AS(t.homology_class({1, 9}), MapError);
  CHECK_THROWS_AS(t.is_contractible({}), MapError);
  (void)h3;
}

TEST_CASE("face walks are null-homologous and contractible on every oracle map") {
  for (const auto& m : fixtures::oracle_maps(3)) {
    const MapTopology t(m);
    CHECK(t.homology().rank() == 2 * t.genus());
    for (const auto& f : t.cell_data().faces) {
      CHECK(t.is_null_homologous(f));
      CHECK(t.is_contractible(f));
    }
  }
}

TEST_CASE("homology is additive and commutators vanish") {
  for (const auto& m : enumerate_rooted(3, 2)) {
    const MapTopology t(m);
    // one vertex: every dart is a loop
    for (Dart x = 1; x <= 6; ++x)
      for (Dart y = 7; y <= 12; ++y) {
        CHECK(t.homology_class({x, y}) == t.homology_class({x}) + t.homology_class({y}));
        CHECK(t.is_null_homologous(commutator(m, {x}, {y})));
      }
  }
}

TEST_CASE("schema words") {
  SUBCASE("genus 0 maps to the empty word") {
    for (const auto& m : enumerate_rooted(2, 0)) {
      const MapTopology t(m);
      for (Dart d = 1; d <= m.n_darts(); ++d) CHECK(t.schema().dart_word(d).empty());
      CHECK(t.schema().relator().empty());
    }
  }
  SUBCASE("genus 1 relator and homology agreement") {
    const MapTopology t(fixtures::torus1());
    CHECK(t.schema().relator().size() == 4);
    for (Dart d = 1; d <= 6; ++d) {
      const auto ab = t.schema().group().abelianize(t.schema().word_of({d}));
      CHECK(Homology::is_zero(ab) == t.is_null_homologous({d}));
    }
  }
  SUBCASE("relators are in canonical form") {
    for (int g = 1; g <= 2; ++g) {
      const CombMap m = enumerate_rooted(3, g).front();
      const MapTopology t(m);
      CHECK(t.schema().relator() == SurfaceGroup(g).relator());
      REQUIRE(t.schema().group().relator().size() == static_cast<std::size_t>(4 * g));
    }
  }
  SUBCASE("abelianized schema words detect exactly the null-homologous walks") {
    for (const auto& m : fixtures::oracle_maps(3)) {
      const MapTopology t(m);
      if (t.genus() == 0) continue;
      closed_walks(m, t.cell_data(), 2, [&](const Walk& w) {
        const auto ab = t.schema().group().abelianize(t.schema().word_of(w));
        CHECK(Homology::is_zero(ab) == t.is_null_homologous(w));
      });
    }
  }
}

TEST_CASE("surface group: Dehn reduction sanity") {
  const SurfaceGroup g2(2);
  const Word& r = g2.relator();
  CHECK(r == Word{1, 2, -1, -2, 3, 4, -3, -4});
  for (int k = 0; k < 8; ++k) {
    Word rot(r.begin() + k, r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + k);
    CHECK(g2.is_trivial(rot));
    CHECK(g2.is_trivial(inverse(rot)));
  }
  for (int x : {1, 2, 3, 4, -1, -3}) CHECK_FALSE(g2.is_trivial({x}));
  CHECK_FALSE(g2.is_trivial({1, 2, -1, -2}));
  CHECK(SurfaceGroup(1).is_trivial({1, 2, -1, -2}));
  CHECK(g2.are_conjugate({1, 2}, {2, 1}));
  CHECK(g2.are_conjugate({1, 2, 3}, {-4, 1, 2, 3, 4}));
  CHECK_FALSE(g2.are_conjugate({1}, {2}));
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(is_rotation_of({1, 2, 3}, {3, 1, 2}));
  CHECK(g2.dehn_reduce({1, 2, -1, -2, 3, 4, -3}) == Word{4});
}

TEST_CASE("contractibility") {
  SUBCASE("nonzero homology is never contractible") {
    for (const auto& m : fixtures::oracle_maps(3)) {
      const MapTopology t(m);
      if (t.genus() == 0) continue;
      closed_walks(m, t.cell_data(), 2, [&](const Walk& w) {
        if (!t.is_null_homologous(w)) CHECK_FALSE(t.is_contractible(w));
        if (t.is_contractible(w)) CHECK(t.is_null_homologous(w));
      });
    }
  }
  SUBCASE("genus 1: null-homologous walks up to length 6 are contractible") {
    for (int n = 1; n <= 2; ++n)
      for (const auto& m : enumerate_rooted(n, 1)) {
        const MapTopology t(m);
        for (int len = 1; len <= 6; ++len)
          closed_walks(m, t.cell_data(), len, [&](const Walk& w) {
            if (t.is_null_homologous(w)) CHECK(t.is_contractible(w));
          });
      }
  }
  SUBCASE("genus 2: some commutator of loops is null-homologous and non-contractible") {
    int found = 0;
    for (const auto& m : enumerate_rooted(3, 2)) {
      const MapTopology t(m);
      const Walk w = commutator(m, {1}, {7});
      CHECK(t.is_null_homologous(w));
      if (!t.is_contractible(w)) ++found;
    }
    CHECK(found > 0);
  }
  SUBCASE("genus 0: everything is contractible") {
    const MapTopology t(fixtures::sphere2());
    CHECK(t.is_contractible({1, 4}));
    CHECK(t.are_freely_homotopic({1, 2, 3}, {1, 4}));
  }
}

TEST_CASE("free homotopy") {
  for (const auto& m : enumerate_rooted(3, 2)) {
    const MapTopology t(m);
    const Walk w{1, 7, 2};
    CHECK(t.are_freely_homotopic(w, rotate_walk(w, 1)));
    CHECK(t.are_freely_homotopic(w, rotate_walk(w, 2)));
    const Walk u{5};
    CHECK(t.are_freely_homotopic(w, concat(concat(u, w), reverse_walk(m, u))));
    for (Dart x = 1; x <= 12; ++x)
      for (Dart y = 1; y <= 12; ++y) {
        const bool same_h = t.homology_class({x}) == t.homology_class({y});
        if (t.are_freely_homotopic({x}, {y})) CHECK(same_h);
        if (!same_h) CHECK_FALSE(t.are_freely_homotopic({x}, {y}));
      }
  }
}

TEST_CASE("sepsys search") {
  SUBCASE("genus 0 and 1 never find a separating non-contractible walk") {
    for (int g = 0; g <= 1; ++g)
      for (const auto& m : enumerate_rooted(2, g)) {
        const MapTopology t(m);
        CHECK_FALSE(t.sepsys_search(8).found);
        CHECK_FALSE(t.sepsys_simple(8).found);
      }
  }
  SUBCASE("all 105 maps at (3,2)") {
    std::map<int, int> hist;
    for (const auto& m : enumerate_rooted(3, 2)) {
      const MapTopology t(m);
      const auto r = t.sepsys_search(12);
      REQUIRE(r.found);
      ++hist[r.length];
      CHECK(r.witness.size() == static_cast<std::size_t>(r.length));
      CHECK(t.is_null_homologous(r.witness));
      CHECK_FALSE(t.is_contractible(r.witness));
      CHECK(is_spur_free_cyclic(m, r.witness));
      CHECK(r.witness == canonical_cycle(m, r.witness));
      const auto p = t.sepsys_search(12, Exec::Parallel);
      CHECK(p.length == r.length);
      CHECK(p.witness == r.witness);
      const auto s = t.sepsys_simple(12);
      if (s.found) CHECK(s.length >= r.length);
    }
    CHECK(hist == std::map<int, int>{{1, 9}, {2, 54}, {3, 42}});
  }
  SUBCASE("the minimum agrees with exhaustive walk enumeration") {
    int checked = 0;
    for (const auto& m : enumerate_rooted(3, 2)) {
      if (checked++ >= 40) break;
      const MapTopology t(m);
      int best = 0;
      for (int len = 1; len <= 4 && best == 0; ++len)
        closed_walks(m, t.cell_data(), len, [&](const Walk& w) {
          if (best == 0 && t.is_sncc(w)) best = len;
        });
      const auto r = t.sepsys_search(4);
      CHECK(r.found == (best > 0));
      if (best > 0) CHECK(r.length == best);
    }
  }
  SUBCASE("Lmax below the minimum is inconclusive") {
    const auto m = enumerate_rooted(3, 2).back();
    const MapTopology t(m);
    const auto r = t.sepsys_search(12);
    if (r.length > 1) {
      const auto low = t.sepsys_search(r.length - 1);
      CHECK_FALSE(low.found);
      CHECK(low.lmax == r.length - 1);
    }
  }
  SUBCASE("sampled genus 3 maps") {
    for (int i = 0; i < 3; ++i) {
      const MapTopology t(sample_or_throw(8, 3, derive_seed(5, i)));
      const auto r = t.sepsys_search(8);
      if (r.found) CHECK(t.is_sncc(r.witness));
      CHECK(t.sepsys_search(8, Exec::Parallel).witness == r.witness);
    }
  }
}

TEST_CASE("reduced form") {
  const CombMap m = enumerate_rooted(3, 2).front();
  const MapTopology topo(m);
  const Cells& c = topo.cell_data();
  SUBCASE("simple cycle") {
    const auto r = reduced_form(m, c, {3});
    CHECK(r.p.empty());
    CHECK(r.gamma == Walk{3});
    CHECK(r.k == 1);
    CHECK(r.tail.empty());
  }
  SUBCASE("square of a simple cycle") {
    const auto r = reduced_form(m, c, {3, 3});
    CHECK(r.p.empty());
    CHECK(r.gamma == Walk{3});
    CHECK(r.k == 2);
    CHECK(r.tail.empty());
  }
  SUBCASE("figure eight of two loops") {
    const Walk w{1, 8};
    const auto r = reduced_form(m, c, w);
    CHECK(r.k == 1);
    CHECK_FALSE(r.tail.empty());
    CHECK(reassemble(r) == rotate_walk(w, r.rotation));
  }
  SUBCASE("reassembly on a sphere walk") {
    const CombMap s = fixtures::sphere2();
    const Cells sc = cells(s);
    const Walk w{1, 2, 3, 1, 2, 3, 1, 4};
    REQUIRE(is_closed_walk(s, sc, w));
    const auto r = reduced_form(s, sc, w);
    CHECK(r.k == 2);
    CHECK(reassemble(r) == rotate_walk(w, r.rotation));
    CHECK_THROWS_AS(reduced_form(s, sc, {1, 4}), MapError);
  }
}

TEST_CASE("set length order") {
  CHECK(set_length({4, 7, 9, 2}) == SetLength{1, 2, 3, 4});
  CHECK(set_length({1, 2, 3, 1, 2, 3}) == SetLength{1, 2, 3, 3, 3, 3});
  CHECK(compare_sl({4, 7, 9, 2, 5, 6}, {1, 2, 3, 1, 2, 3}) == SLOrder::Greater);
  CHECK(compare_sl({1, 2, 3, 1, 2, 3}, {4, 7, 9, 2, 5, 6}) == SLOrder::Less);
  CHECK(compare_sl({1, 2}, {3, 4}) == SLOrder::EqualSL);
  CHECK_THROWS_AS(compare_sl({1}, {1, 2}), DomainError);
}
