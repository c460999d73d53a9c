#include "trisurf/topology.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_map>

namespace trisurf {

namespace {

int genus_of(const CombMap& map) { return euler_data(map).genus; }

struct VecHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

MapTopology::MapTopology(const CombMap& map)
    : map_(map), cells_(cells(map)), genus_(genus_of(map)), homology_(map), schema_(map) {}

HomologyVector MapTopology::homology_class(const Walk& w) const {
  require_closed_walk(map_, cells_, w);
  return homology_.class_of(w);
}

bool MapTopology::is_null_homologous(const Walk& w) const { return Homology::is_zero(homology_class(w)); }

bool MapTopology::is_contractible(const Walk& w) const {
  require_closed_walk(map_, cells_, w);
  if (genus_ == 0) return true;
  if (!Homology::is_zero(homology_.class_of(w))) return false;
  if (genus_ == 1) return true;
  return schema_.group().is_trivial(schema_.word_of(w));
}

bool MapTopology::are_freely_homotopic(const Walk& a, const Walk& b) const {
  require_closed_walk(map_, cells_, a);
  require_closed_walk(map_, cells_, b);
  if (genus_ == 0) return true;
  if (homology_.class_of(a) != homology_.class_of(b)) return false;
  if (genus_ == 1) return true;
  return schema_.group().are_conjugate(schema_.word_of(a), schema_.word_of(b));
}

bool MapTopology::is_sncc(const Walk& w) const { return is_null_homologous(w) && !is_contractible(w); }

std::optional<Walk> MapTopology::shortest_sncc_at(int base, int bound) const {
  if (genus_ < 2 || bound < 1) return std::nullopt;
  // Breadth-first ball in the abelian cover: states are (vertex, homology).
  struct State {
    int vertex;
    HomologyVector h;
    int dist;
    Dart parent_dart;  // dart used to enter this state, 0 at the base
    int parent;
  };
  const int radius = (bound + 1) / 2;
  std::vector<State> states;
  std::unordered_map<HomologyVector, int, VecHash> index;
  auto key_of = [&](int v, const HomologyVector& h) {
    HomologyVector k = h;
    k.push_back(v);
    return k;
  };
  states.push_back({base, HomologyVector(homology_.rank(), 0), 0, 0, -1});
  index.emplace(key_of(base, states[0].h), 0);
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s].dist == radius) continue;
    for (Dart d : cells_.vertices[states[s].vertex]) {
      const int u = cells_.vertex(map_.alpha(d));
      HomologyVector h = states[s].h + homology_.dart_vector(d);
      auto key = key_of(u, h);
      if (index.count(key)) continue;
      index.emplace(std::move(key), static_cast<int>(states.size()));
      states.push_back({u, std::move(h), states[s].dist + 1, d, static_cast<int>(s)});
    }
  }
  struct Candidate {
    int length;
    int from;
    Dart dart;
    int to;
  };
  std::vector<Candidate> cands;
  for (int s = 0; s < static_cast<int>(states.size()); ++s) {
    for (Dart d : cells_.vertices[states[s].vertex]) {
      const int u = cells_.vertex(map_.alpha(d));
      const auto it = index.find(key_of(u, states[s].h + homology_.dart_vector(d)));
      if (it == index.end()) continue;
      const int t = it->second;
      if (states[t].parent == s && states[t].parent_dart == d) continue;
      if (states[s].parent == t && states[s].parent_dart == map_.alpha(d)) continue;
      if (std::make_pair(s, d) > std::make_pair(t, map_.alpha(d))) continue;
      const int len = states[s].dist + states[t].dist + 1;
      if (len <= bound) cands.push_back({len, s, d, t});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.length, x.from, x.dart) < std::tie(y.length, y.from, y.dart);
  });
  auto path_to = [&](int s) {
    Walk p;
    for (; states[s].parent >= 0; s = states[s].parent) p.push_back(states[s].parent_dart);
    std::reverse(p.begin(), p.end());
    return p;
  };
  const SurfaceGroup& grp = schema_.group();
  for (const Candidate& c : cands) {
    Walk w = path_to(c.from);
    w.push_back(c.dart);
    const Walk back = reverse_walk(map_, path_to(c.to));
    w.insert(w.end(), back.begin(), back.end());
    if (!grp.is_trivial(schema_.word_of(w))) return w;
  }
  return std::nullopt;
}

SepsysResult MapTopology::sepsys_search(int lmax, Exec exec) const {
  SepsysResult res;
  res.lmax = lmax;
  if (genus_ < 2 || lmax < 1) return res;
  const int nv = cells_.n_vertices();
  std::vector<std::optional<Walk>> per_vertex(nv);
  std::atomic<int> best{lmax};
  auto visit = [&](int v) {
    auto w = shortest_sncc_at(v, best.load());
    if (!w) return;
    const int len = static_cast<int>(w->size());
    int cur = best.load();
    while (len < cur && !best.compare_exchange_weak(cur, len)) {
    }
    per_vertex[v] = std::move(w);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int v = 0; v < nv; ++v) visit(v);
  } else {
    for (int v = 0; v < nv; ++v) visit(v);
  }
  int pick = -1;
  for (int v = 0; v < nv; ++v) {
    if (!per_vertex[v]) continue;
    if (pick < 0 || per_vertex[v]->size() < per_vertex[pick]->size()) pick = v;
  }
  if (pick < 0) return res;
  res.found = true;
  res.length = static_cast<int>(per_vertex[pick]->size());
  res.witness = canonical_cycle(map_, *per_vertex[pick]);
  return res;
}

SepsysResult MapTopology::sepsys_simple(int lmax) const {
  SepsysResult res;
  res.lmax = lmax;
  if (genus_ < 2 || lmax < 1) return res;
  for (const Walk& c : simple_cycles(map_, cells_, lmax)) {
    if (!Homology::is_zero(homology_.class_of(c))) continue;
    if (schema_.group().is_trivial(schema_.word_of(c))) continue;
    res.found = true;
    res.length = static_cast<int>(c.size());
    res.witness = c;
    return res;
  }
  return res;
}

}  // namespace trisurf
