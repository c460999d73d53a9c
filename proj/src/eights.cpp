#include "trisurf/eights.hpp"

#include <algorithm>
#include <tuple>

namespace trisurf {

std::string variant_name(EightVariant v) {
  switch (v) {
    case EightVariant::SimpleSNCC: return "simple_sncc";
    case EightVariant::ThinEight: return "thin_eight";
    case EightVariant::FatEight: return "fat_eight";
  }
  return "?";
}

std::string status_name(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Verified: return "verified";
    case TheoremStatus::VacuousNoSNCC: return "vacuous_no_sncc";
    case TheoremStatus::Inconclusive: return "inconclusive";
    case TheoremStatus::Counterexample: return "counterexample";
  }
  return "?";
}

nlohmann::ordered_json to_json(const EightConfig& e) {
  nlohmann::ordered_json j;
  j["variant"] = variant_name(e.variant);
  j["total_length"] = e.total_length();
  nlohmann::ordered_json comps;
  switch (e.variant) {
    case EightVariant::SimpleSNCC: comps["cycle"] = e.c1; break;
    case EightVariant::ThinEight:
      comps["c1"] = e.c1;
      comps["c2"] = e.c2;
      comps["p"] = e.p;
      break;
    case EightVariant::FatEight:
      comps["c"] = e.c1;
      comps["p"] = e.p;
      break;
  }
  j["components"] = std::move(comps);
  return j;
}

namespace {

Recognition yes() { return {true, EightClause::None, ""}; }
Recognition no(EightClause c, std::string why) { return {false, c, std::move(why)}; }

Dart edge_id(const CombMap& m, Dart d) { return std::min(d, m.alpha(d)); }

std::vector<int> cycle_vertices(const MapTopology& t, const Walk& c) {
  std::vector<int> out;
  for (Dart d : c) out.push_back(t.cell_data().vertex(d));
  return out;
}

std::vector<Dart> sorted_edges(const CombMap& m, const Walk& w) {
  std::vector<Dart> out;
  for (Dart d : w) out.push_back(edge_id(m, d));
  std::sort(out.begin(), out.end());
  return out;
}

bool share_edge(const CombMap& m, const Walk& a, const Walk& b) {
  const auto ea = sorted_edges(m, a), eb = sorted_edges(m, b);
  std::vector<Dart> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
  return !common.empty();
}

std::vector<int> shared_vertices(const MapTopology& t, const Walk& a, const Walk& b) {
  auto va = cycle_vertices(t, a), vb = cycle_vertices(t, b);
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  std::vector<int> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return common;
}

bool homotopic_unoriented(const MapTopology& t, const Walk& a, const Walk& b) {
  return t.are_freely_homotopic(a, b) || t.are_freely_homotopic(a, reverse_walk(t.map(), b));
}

// The two darts of a simple cycle leaving vertex v.
std::pair<Dart, Dart> darts_at(const MapTopology& t, const Walk& c, int v) {
  const auto& cd = t.cell_data();
  const std::size_t l = c.size();
  for (std::size_t i = 0; i < l; ++i) {
    if (cd.vertex(c[i]) == v) return {c[i], t.map().alpha(c[(i + l - 1) % l])};
  }
  throw MapError("cycle does not pass through the vertex");
}

bool alternate_unchecked(const MapTopology& t, const Walk& c1, const Walk& c2, int v) {
  const auto& rot = t.cell_data().vertices[v];
  auto pos = [&](Dart d) {
    return static_cast<int>(std::find(rot.begin(), rot.end(), d) - rot.begin());
  };
  const auto [a1, b1] = darts_at(t, c1, v);
  const auto [a2, b2] = darts_at(t, c2, v);
  int lo = pos(a1), hi = pos(b1);
  if (lo > hi) std::swap(lo, hi);
  auto inside = [&](Dart d) {
    const int p = pos(d);
    return p > lo && p < hi;
  };
  return inside(a2) != inside(b2);
}

void require_walks(const MapTopology& t, const Walk& c1, const Walk& c2, const Walk& p) {
  require_closed_walk(t.map(), t.cell_data(), c1);
  require_closed_walk(t.map(), t.cell_data(), c2);
  if (!p.empty() && !is_path(t.map(), t.cell_data(), p)) throw MapError("p is not a walk");
}

}  // namespace

bool alternate_at_shared_vertex(const MapTopology& t, const Walk& c1, const Walk& c2) {
  require_walks(t, c1, c2, {});
  const auto common = shared_vertices(t, c1, c2);
  if (common.size() != 1 || share_edge(t.map(), c1, c2))
    throw MapError("cycles do not meet at exactly one vertex");
  return alternate_unchecked(t, c1, c2, common.front());
}

Recognition is_simple_sncc(const MapTopology& t, const Walk& c) {
  require_closed_walk(t.map(), t.cell_data(), c);
  if (!is_simple_cycle(t.map(), t.cell_data(), c)) return no(EightClause::NotSimple, "cycle not simple");
  if (!t.is_sncc(c)) return no(EightClause::NotSNCC, "not a separating non-contractible cycle");
  return yes();
}

Recognition is_thin_eight(const MapTopology& t, const Walk& c1, const Walk& c2, const Walk& p) {
  require_walks(t, c1, c2, p);
  const CombMap& m = t.map();
  const Cells& cd = t.cell_data();
  if (!is_simple_cycle(m, cd, c1)) return no(EightClause::NotSimple, "c1 not simple");
  if (!is_simple_cycle(m, cd, c2)) return no(EightClause::NotSimple, "c2 not simple");
  if (t.is_null_homologous(c1)) return no(EightClause::Separating, "separating: c1 is null-homologous");
  if (t.is_null_homologous(c2)) return no(EightClause::Separating, "separating: c2 is null-homologous");
  if (homotopic_unoriented(t, c1, c2)) return no(EightClause::Homotopic, "homotopic");
  const auto common = shared_vertices(t, c1, c2);
  if (!common.empty()) {
    if (common.size() > 1 || share_edge(m, c1, c2) || !p.empty())
      return no(EightClause::Intersect, "c1 and c2 intersect");
    if (alternate_unchecked(t, c1, c2, common.front()))
      return no(EightClause::Transverse, "c1 and c2 cross transversally (a fat eight)");
    return yes();
  }
  if (p.empty()) return no(EightClause::PathEndpoints, "disjoint cycles need a nonempty path");
  if (!is_simple_path(m, cd, p)) return no(EightClause::NotSimple, "p not simple");
  const auto vs = walk_vertices(m, cd, p);
  auto v1 = cycle_vertices(t, c1), v2 = cycle_vertices(t, c2);
  auto has = [](const std::vector<int>& vs_, int v) { return std::find(vs_.begin(), vs_.end(), v) != vs_.end(); };
  if (!has(v1, vs.front())) return no(EightClause::PathEndpoints, "p does not start on c1");
  if (!has(v2, vs.back())) return no(EightClause::PathEndpoints, "p does not end on c2");
  if (has(v2, vs.front()) || has(v1, vs.back())) return no(EightClause::PathMeetsCycles, "p meets the cycles elsewhere");
  for (std::size_t k = 1; k + 1 < vs.size(); ++k)
    if (has(v1, vs[k]) || has(v2, vs[k])) return no(EightClause::PathMeetsCycles, "p meets the cycles elsewhere");
  return yes();
}

Recognition is_fat_eight(const MapTopology& t, const Walk& c, const Walk& p) {
  const CombMap& m = t.map();
  const Cells& cd = t.cell_data();
  require_closed_walk(m, cd, c);
  if (p.empty() || !is_path(m, cd, p)) throw MapError("p must be a nonempty walk");
  const auto vs = walk_vertices(m, cd, p);
  const auto vc = cycle_vertices(t, c);
  auto on_c = [&](int v) { return std::find(vc.begin(), vc.end(), v) != vc.end(); };
  if (!on_c(vs.front()) || !on_c(vs.back())) throw MapError("p's endpoints are not on c");
  if (!is_simple_cycle(m, cd, c)) return no(EightClause::NotSimple, "c not simple");
  if (t.is_null_homologous(c)) return no(EightClause::Separating, "separating: c is null-homologous");

  if (vs.front() == vs.back()) {
    if (!is_simple_cycle(m, cd, p)) return no(EightClause::NotSimple, "p not simple");
    if (t.is_null_homologous(p)) return no(EightClause::Separating, "separating: p is null-homologous");
    if (shared_vertices(t, c, p).size() != 1 || share_edge(m, c, p))
      return no(EightClause::Intersect, "c and p meet beyond one vertex");
    if (!alternate_unchecked(t, c, p, vs.front()))
      return no(EightClause::Tangential, "c and p touch tangentially (a thin eight)");
    return yes();
  }

  if (!is_simple_path(m, cd, p)) return no(EightClause::NotSimple, "p not simple");
  for (std::size_t k = 1; k + 1 < vs.size(); ++k)
    if (on_c(vs[k])) return no(EightClause::PathMeetsCycles, "p meets c in its interior");
  if (p.size() == 1 && share_edge(m, c, p)) return no(EightClause::PathMeetsCycles, "p is an edge of c");

  const std::size_t l = c.size();
  const std::size_t s = std::find(vc.begin(), vc.end(), vs.front()) - vc.begin();
  const Walk rc = rotate_walk(c, static_cast<int>(s));
  std::size_t j = 0;
  while (cd.vertex(rc[j]) != vs.back()) ++j;
  const Walk q(rc.begin(), rc.begin() + j);
  const Walk rest(rc.begin() + j, rc.begin() + l);  // r^-1
  if (t.is_contractible(concat(p, rest))) return no(EightClause::Contractible1, "pr⁻¹ contractible");
  if (t.is_contractible(concat(q, reverse_walk(m, p)))) return no(EightClause::Contractible2, "qp⁻¹ contractible");
  return yes();
}

Recognition recognize(const MapTopology& t, const EightConfig& e) {
  switch (e.variant) {
    case EightVariant::SimpleSNCC: return is_simple_sncc(t, e.c1);
    case EightVariant::ThinEight: return is_thin_eight(t, e.c1, e.c2, e.p);
    case EightVariant::FatEight: return is_fat_eight(t, e.c1, e.p);
  }
  return no(EightClause::None, "unknown variant");
}

namespace {

struct CycleInfo {
  Walk w;
  std::vector<int> verts;
  std::vector<char> on;  // by vertex id
  std::vector<Dart> edges;
  bool nonsep = false;
  bool sncc = false;
};

bool config_less(const EightConfig& x, const EightConfig& y) {
  const int lx = x.total_length(), ly = y.total_length();
  const int vx = static_cast<int>(x.variant), vy = static_cast<int>(y.variant);
  return std::tie(lx, vx, x.c1, x.c2, x.p) < std::tie(ly, vy, y.c1, y.c2, y.p);
}

// Simple paths of exactly k darts from a vertex with from[v] to a vertex with
// to[v], whose inner vertices avoid `block`. The two ends differ.
template <class F>
void paths_between(const MapTopology& t, const std::vector<int>& starts, const std::vector<char>& to,
                   const std::vector<char>& block, int k, F&& emit) {
  const CombMap& m = t.map();
  const Cells& cd = t.cell_data();
  std::vector<char> seen(cd.n_vertices(), 0);
  Walk path;
  std::function<void(int, int)> go = [&](int v, int start) {
    if (static_cast<int>(path.size()) == k - 1) {
      for (Dart d : cd.vertices[v]) {
        const int w = cd.vertex(m.alpha(d));
        if (!to[w] || w == start) continue;
        path.push_back(d);
        emit(path);
        path.pop_back();
      }
      return;
    }
    for (Dart d : cd.vertices[v]) {
      const int w = cd.vertex(m.alpha(d));
      if (seen[w] || block[w]) continue;
      seen[w] = 1;
      path.push_back(d);
      go(w, start);
      path.pop_back();
      seen[w] = 0;
    }
  };
  for (int s : starts) {
    seen[s] = 1;
    go(s, s);
    seen[s] = 0;
  }
}

std::vector<EightConfig> configs_of_length(const MapTopology& t, const std::vector<CycleInfo>& cyc, int len,
                                           Exec exec) {
  const CombMap& m = t.map();
  const int nc = static_cast<int>(cyc.size());
  std::vector<std::vector<EightConfig>> per(nc);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int i = 0; i < nc; ++i) {
    const CycleInfo& a = cyc[i];
    const int la = static_cast<int>(a.w.size());
    auto& out = per[i];
    if (la > len) continue;
    if (la == len && a.sncc) out.push_back({EightVariant::SimpleSNCC, a.w, {}, {}});
    if (!a.nonsep) continue;

    // fat eights with a chord
    if (la < len) {
      const int k = len - la;
      paths_between(t, a.verts, a.on, a.on, k, [&](const Walk& p) {
        const Walk rp = reverse_walk(m, p);
        if (rp < p) return;
        if (k == 1 && std::binary_search(a.edges.begin(), a.edges.end(), edge_id(m, p[0]))) return;
        if (is_fat_eight(t, a.w, p)) out.push_back({EightVariant::FatEight, a.w, {}, p});
      });
    }

    // pairs
    for (int j = i + 1; j < nc; ++j) {
      const CycleInfo& b = cyc[j];
      const int lb = static_cast<int>(b.w.size());
      if (la + lb > len) continue;
      if (!b.nonsep) continue;
      int shared = 0, at = -1;
      for (int v : b.verts)
        if (a.on[v]) {
          ++shared;
          at = v;
        }
      std::vector<Dart> common;
      std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                            std::back_inserter(common));
      if (!common.empty() || shared > 1) continue;
      if (shared == 1) {
        if (la + lb != len) continue;
        if (alternate_unchecked(t, a.w, b.w, at)) {
          Walk p = b.w;
          const auto pos = std::find(b.verts.begin(), b.verts.end(), at) - b.verts.begin();
          std::rotate(p.begin(), p.begin() + pos, p.end());
          out.push_back({EightVariant::FatEight, a.w, {}, std::move(p)});
        } else if (!homotopic_unoriented(t, a.w, b.w)) {
          out.push_back({EightVariant::ThinEight, a.w, b.w, {}});
        }
        continue;
      }
      const int k = len - la - lb;
      if (k < 1) continue;
      std::vector<char> block(a.on);
      for (int v : b.verts) block[v] = 1;
      std::vector<Walk> paths;
      paths_between(t, a.verts, b.on, block, k, [&](const Walk& p) { paths.push_back(p); });
      if (paths.empty()) continue;
      if (homotopic_unoriented(t, a.w, b.w)) continue;
      for (auto& p : paths) out.push_back({EightVariant::ThinEight, a.w, b.w, std::move(p)});
    }
  }
  std::vector<EightConfig> all;
  for (auto& v : per)
    for (auto& e : v) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), config_less);
  return all;
}

}  // namespace

void find_eights(const MapTopology& t, int lmax, const EightSink& sink, Exec exec) {
  if (lmax < 1 || t.genus() < 1) return;
  const CombMap& m = t.map();
  const Cells& cd = t.cell_data();
  std::vector<CycleInfo> cyc;
  for (auto& w : simple_cycles(m, cd, lmax)) {
    CycleInfo c;
    c.w = std::move(w);
    c.verts = cycle_vertices(t, c.w);
    c.on.assign(cd.n_vertices(), 0);
    for (int v : c.verts) c.on[v] = 1;
    c.edges = sorted_edges(m, c.w);
    c.nonsep = !t.is_null_homologous(c.w);
    c.sncc = !c.nonsep && !t.is_contractible(c.w);
    cyc.push_back(std::move(c));
  }
  for (int len = 1; len <= lmax; ++len) {
    for (const auto& e : configs_of_length(t, cyc, len, exec))
      if (!sink(e)) return;
  }
}

std::vector<EightConfig> find_eights(const MapTopology& t, int lmax, Exec exec) {
  std::vector<EightConfig> out;
  find_eights(t, lmax, [&](const EightConfig& e) {
    out.push_back(e);
    return true;
  }, exec);
  return out;
}

TheoremCheck verify_theorem_eights(const MapTopology& t, int lmax, Exec exec) {
  TheoremCheck r;
  r.lmax = lmax;
  if (t.genus() <= 1) {
    r.status = TheoremStatus::VacuousNoSNCC;
    return r;
  }
  r.sepsys = t.sepsys_search(lmax, exec);
  if (!r.sepsys.found) {
    r.status = TheoremStatus::Inconclusive;
    return r;
  }
  find_eights(t, r.sepsys.length, [&](const EightConfig& e) {
    r.witness = e;
    return false;
  }, exec);
  r.status = r.witness ? TheoremStatus::Verified : TheoremStatus::Counterexample;
  return r;
}

}  // namespace trisurf
