#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "trisurf/eights.hpp"
#include "trisurf/sampler.hpp"

using namespace trisurf;

namespace {

std::vector<CombMap> sampled(int n, int g, int count, std::uint64_t seed) {
  std::vector<CombMap> out;
  for (int i = 0; i < count; ++i) out.push_back(sample_or_throw(n, g, derive_seed(seed, i)));
  return out;
}

Walk first_nonsep_cycle(const MapTopology& t, int min_len, int max_len) {
  for (const auto& c : simple_cycles(t.map(), t.cell_data(), max_len))
    if (static_cast<int>(c.size()) >= min_len && !t.is_null_homologous(c)) return c;
  return {};
}

}  // namespace

TEST_CASE("thin eight recognizer rejections") {
  const MapTopology t(sample_or_throw(8, 2, 17));
  const Walk c = first_nonsep_cycle(t, 2, 6);
  REQUIRE_FALSE(c.empty());
  const auto shifted = is_thin_eight(t, c, rotate_walk(c, 1), {});
  CHECK_FALSE(shifted.ok);
  CHECK(shifted.clause == EightClause::Homotopic);
  CHECK(shifted.reason == "homotopic");

  Walk face;
  for (const auto& f : t.cell_data().faces)
    if (is_simple_cycle(t.map(), t.cell_data(), f)) {
      face = f;
      break;
    }
  REQUIRE_FALSE(face.empty());
  const auto sep = is_thin_eight(t, face, c, {});
  CHECK(sep.clause == EightClause::Separating);
  CHECK(sep.reason.find("separating") == 0);

  CHECK_THROWS_AS(is_thin_eight(t, {1}, c, {}), MapError);  // {1} is a loop only on one-vertex maps
}

TEST_CASE("a thin eight on a genus 2 oracle map, re-checked clause by clause") {
  bool found = false;
  for (const auto& m : enumerate_rooted(3, 2)) {
    const MapTopology t(m);
    for (const auto& e : find_eights(t, 4)) {
      if (e.variant != EightVariant::ThinEight) continue;
      const Cells& c = t.cell_data();
      CHECK(is_simple_cycle(m, c, e.c1));
      CHECK(is_simple_cycle(m, c, e.c2));
      CHECK_FALSE(t.is_null_homologous(e.c1));
      CHECK_FALSE(t.is_null_homologous(e.c2));
      CHECK_FALSE(t.are_freely_homotopic(e.c1, e.c2));
      CHECK_FALSE(t.are_freely_homotopic(e.c1, reverse_walk(m, e.c2)));
      CHECK(e.p.empty());  // one vertex: only the tangential case
      CHECK_FALSE(alternate_at_shared_vertex(t, e.c1, e.c2));
      CHECK(is_thin_eight(t, e.c1, e.c2, e.p).ok);
      found = true;
      break;
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("thin eights with disjoint cycles on sampled maps") {
  int seen = 0;
  for (const auto& m : sampled(8, 2, 6, 21)) {
    const MapTopology t(m);
    for (const auto& e : find_eights(t, 6)) {
      if (e.variant != EightVariant::ThinEight || e.p.empty()) continue;
      CHECK(is_thin_eight(t, e.c1, e.c2, e.p).ok);
      // reversing the path does not join c1 to c2
      const auto rev = is_thin_eight(t, e.c1, e.c2, reverse_walk(m, e.p));
      CHECK(rev.clause == EightClause::PathEndpoints);
      CHECK(is_thin_eight(t, e.c2, e.c1, reverse_walk(m, e.p)).ok);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("fat eight recognizer") {
  SUBCASE("chords with non-contractible split cycles") {
    int seen = 0;
    for (const auto& m : sampled(8, 2, 6, 31)) {
      const MapTopology t(m);
      for (const auto& e : find_eights(t, 6)) {
        if (e.variant != EightVariant::FatEight) continue;
        const auto vs = walk_vertices(m, t.cell_data(), e.p);
        if (vs.front() == vs.back()) continue;
        CHECK(is_fat_eight(t, e.c1, e.p).ok);
        CHECK(is_fat_eight(t, e.c1, reverse_walk(m, e.p)).ok);
        ++seen;
      }
    }
    CHECK(seen > 0);
  }
  SUBCASE("a chord cutting off a face") {
    int seen = 0;
    for (const auto& m : sampled(8, 2, 8, 41)) {
      const MapTopology t(m);
      const Cells& c = t.cell_data();
      for (const auto& cyc : simple_cycles(m, c, 6)) {
        if (cyc.size() < 3 || t.is_null_homologous(cyc)) continue;
        const std::size_t l = cyc.size();
        for (std::size_t i = 0; i < l; ++i) {
          // face x y z with x = cyc[i], y = cyc[i+1]: the chord z runs from the end of y back to the start of x
          const Dart x = cyc[i], y = cyc[(i + 1) % l];
          if (m.sigma(x) != y) continue;
          const Dart z = m.sigma(y);
          const Dart ez = std::min(z, m.alpha(z));
          bool on_c = false;
          for (Dart d : cyc) on_c = on_c || std::min(d, m.alpha(d)) == ez;
          if (on_c) continue;
          const auto r = is_fat_eight(t, cyc, {z});
          CHECK_FALSE(r.ok);
          CHECK(r.clause == EightClause::Contractible1);
          CHECK(r.reason == "pr⁻¹ contractible");
          const auto r2 = is_fat_eight(t, cyc, {m.alpha(z)});
          CHECK(r2.clause == EightClause::Contractible2);
          ++seen;
        }
      }
    }
    CHECK(seen > 0);
  }
  SUBCASE("endpoints must lie on c") {
    const MapTopology t(sample_or_throw(8, 2, 51));
    const Walk c = first_nonsep_cycle(t, 2, 6);
    REQUIRE_FALSE(c.empty());
    const Cells& cd = t.cell_data();
    std::vector<char> on(cd.n_vertices(), 0);
    for (Dart d : c) on[cd.vertex(d)] = 1;
    Dart off = 0;
    for (Dart d = 1; d <= t.map().n_darts() && off == 0; ++d)
      if (!on[cd.vertex(d)]) off = d;
    REQUIRE(off != 0);
    CHECK_THROWS_AS(is_fat_eight(t, c, {off}), MapError);
    CHECK_THROWS_AS(is_fat_eight(t, c, {}), MapError);
  }
}

TEST_CASE("single-vertex dichotomy: transverse is fat, tangential is thin") {
  int transverse = 0, tangential = 0;
  for (const auto& m : enumerate_rooted(3, 2)) {
    const MapTopology t(m);
    // one vertex: every dart is a loop; take one dart per edge
    std::vector<Dart> loops;
    for (Dart d = 1; d <= m.n_darts(); ++d)
      if (d < m.alpha(d) && !t.is_null_homologous({d})) loops.push_back(d);
    for (std::size_t i = 0; i < loops.size(); ++i)
      for (std::size_t j = i + 1; j < loops.size(); ++j) {
        const Walk a{loops[i]}, b{loops[j]};
        const bool alt = alternate_at_shared_vertex(t, a, b);
        const auto fat = is_fat_eight(t, a, b);
        const auto thin = is_thin_eight(t, a, b, {});
        CHECK(fat.ok == alt);
        if (alt) {
          CHECK(thin.clause == EightClause::Transverse);
          ++transverse;
        } else {
          CHECK(fat.clause == EightClause::Tangential);
          const bool homotopic = t.are_freely_homotopic(a, b) || t.are_freely_homotopic(a, reverse_walk(m, b));
          CHECK(thin.ok == !homotopic);
          ++tangential;
        }
        CHECK(!(fat.ok && thin.ok));
      }
  }
  CHECK(transverse > 0);
  CHECK(tangential > 0);
}

TEST_CASE("find_eights") {
  SUBCASE("genus 0: nothing") {
    for (const auto& m : enumerate_rooted(3, 0)) CHECK(find_eights(MapTopology(m), 6).empty());
  }
  SUBCASE("genus 1: no simple separating non-contractible cycle") {
    for (const auto& m : enumerate_rooted(3, 1))
      for (const auto& e : find_eights(MapTopology(m), 6)) CHECK(e.variant != EightVariant::SimpleSNCC);
  }
  SUBCASE("genus 2: sound, ordered and nonempty whenever sepsys finds a witness") {
    for (const auto& m : enumerate_rooted(3, 2)) {
      const MapTopology t(m);
      const auto all = find_eights(t, 12);
      if (t.sepsys_search(12).found) CHECK_FALSE(all.empty());
      for (const auto& e : all) CHECK(recognize(t, e).ok);
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].total_length() <= all[i].total_length());
      CHECK(find_eights(t, 12, Exec::Parallel) == all);
    }
  }
  SUBCASE("sampled maps: soundness and determinism") {
    for (const auto& m : sampled(8, 2, 3, 61)) {
      const MapTopology t(m);
      const auto all = find_eights(t, 6);
      for (const auto& e : all) CHECK(recognize(t, e).ok);
      CHECK(find_eights(t, 6, Exec::Parallel) == all);
      int stopped = 0;
      find_eights(t, 6, [&](const EightConfig&) { return ++stopped < 2; });
      CHECK(stopped == std::min<int>(2, static_cast<int>(all.size())));
    }
  }
  SUBCASE("json") {
    const MapTopology t(enumerate_rooted(3, 2).front());
    const auto all = find_eights(t, 2);
    REQUIRE_FALSE(all.empty());
    const auto j = to_json(all.front());
    CHECK(j["total_length"] == all.front().total_length());
    CHECK(j.contains("variant"));
    CHECK(j["components"].is_object());
  }
}

TEST_CASE("theorem check") {
  for (int g = 0; g <= 1; ++g)
    for (const auto& m : enumerate_rooted(2, g))
      CHECK(verify_theorem_eights(MapTopology(m), 10).status == TheoremStatus::VacuousNoSNCC);
  int verified = 0;
  for (const auto& m : enumerate_rooted(3, 2)) {
    const MapTopology t(m);
    const auto r = verify_theorem_eights(t, 12);
    CHECK(r.status != TheoremStatus::Counterexample);
    if (r.status == TheoremStatus::Verified) {
      ++verified;
      REQUIRE(r.witness);
      CHECK(r.witness->total_length() <= r.sepsys.length);
      CHECK(recognize(t, *r.witness).ok);
    }
  }
  CHECK(verified == 105);
  const MapTopology t(enumerate_rooted(3, 2).back());
  const auto full = t.sepsys_search(12);
  if (full.length > 1) CHECK(verify_theorem_eights(t, full.length - 1).status == TheoremStatus::Inconclusive);
}
