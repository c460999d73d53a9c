#include "trisurf/walks.hpp"

#include <algorithm>

namespace trisurf {

bool is_path(const CombMap& map, const Cells& c, const Walk& w) {
  const int n = map.n_darts();
  for (Dart d : w)
    if (d < 1 || d > n) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (c.vertex(map.alpha(w[i])) != c.vertex(w[i + 1])) return false;
  }
  return true;
}

bool is_closed_walk(const CombMap& map, const Cells& c, const Walk& w) {
  if (w.empty() || !is_path(map, c, w)) return false;
  return c.vertex(map.alpha(w.back())) == c.vertex(w.front());
}

void require_closed_walk(const CombMap& map, const Cells& c, const Walk& w) {
  if (!is_closed_walk(map, c, w)) throw MapError("walk is not a closed walk on the map");
}

std::vector<int> walk_vertices(const CombMap& map, const Cells& c, const Walk& w) {
  std::vector<int> v;
  if (w.empty()) return v;
  v.push_back(c.vertex(w.front()));
  for (Dart d : w) v.push_back(c.vertex(map.alpha(d)));
  return v;
}

bool is_simple_cycle(const CombMap& map, const Cells& c, const Walk& w) {
  if (!is_closed_walk(map, c, w)) return false;
  if (w.size() == 2 && w[1] == map.alpha(w[0])) return false;
  auto v = walk_vertices(map, c, w);
  v.pop_back();
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_simple_path(const CombMap& map, const Cells& c, const Walk& w) {
  if (!is_path(map, c, w)) return false;
  auto v = walk_vertices(map, c, w);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_spur_free_cyclic(const CombMap& map, const Walk& w) {
  const std::size_t l = w.size();
  for (std::size_t i = 0; i < l; ++i) {
    if (w[(i + 1) % l] == map.alpha(w[i]) && l > 1) return false;
  }
  return true;
}

Walk reverse_walk(const CombMap& map, const Walk& w) {
  Walk r(w.rbegin(), w.rend());
  for (Dart& d : r) d = map.alpha(d);
  return r;
}

Walk rotate_walk(const Walk& w, int k) {
  if (w.empty()) return w;
  const int l = static_cast<int>(w.size());
  k = ((k % l) + l) % l;
  Walk r(w.begin() + k, w.end());
  r.insert(r.end(), w.begin(), w.begin() + k);
  return r;
}

Walk lex_min_rotation(const Walk& w) {
  Walk best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Walk r = rotate_walk(w, static_cast<int>(k));
    if (r < best) best = std::move(r);
  }
  return best;
}

Walk canonical_cycle(const CombMap& map, const Walk& w) {
  Walk a = lex_min_rotation(w);
  Walk b = lex_min_rotation(reverse_walk(map, w));
  return std::min(a, b);
}

Walk concat(const Walk& a, const Walk& b) {
  Walk r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

namespace {

// Smallest m dividing |w| with w periodic of period m and its first m darts
// a simple cycle; 0 if none.
int simple_period(const CombMap& map, const Cells& c, const Walk& w) {
  const int l = static_cast<int>(w.size());
  for (int m = 1; m <= l; ++m) {
    if (l % m != 0) continue;
    bool periodic = true;
    for (int i = m; i < l && periodic; ++i) periodic = w[i] == w[i - m];
    if (!periodic) continue;
    Walk g(w.begin(), w.begin() + m);
    if (is_simple_cycle(map, c, g)) return m;
  }
  return 0;
}

}  // namespace

ReducedForm reduced_form(const CombMap& map, const Cells& c, const Walk& w) {
  require_closed_walk(map, c, w);
  ReducedForm r;
  const int l = static_cast<int>(w.size());
  if (const int m = simple_period(map, c, w); m > 0) {
    r.gamma.assign(w.begin(), w.begin() + m);
    r.k = l / m;
    return r;
  }
  // First repeated vertex v_a = v_b with b minimal and b < l.
  const auto v = walk_vertices(map, c, w);
  int a = -1, b = -1;
  std::vector<int> first_seen(c.n_vertices(), -1);
  for (int i = 0; i < l; ++i) {
    if (first_seen[v[i]] >= 0) {
      a = first_seen[v[i]];
      b = i;
      break;
    }
    first_seen[v[i]] = i;
  }
  if (a < 0) {
    // All of v_0..v_{l-1} distinct: only the back-and-forth walk gets here.
    throw MapError("reduced_form: walk (d, alpha(d)) has no simple sub-cycle");
  }
  r.rotation = a;
  const Walk rot = rotate_walk(w, a);
  const int len = b - a;
  if (len == 2 && rot[1] == map.alpha(rot[0])) throw MapError("reduced_form: walk has a spur");
  std::vector<char> in_cycle(map.n_darts() + 1, 0);
  for (int i = 0; i < len; ++i) in_cycle[rot[i]] = 1;
  // 0-based index of the first dart after the first pass that leaves the
  // simple cycle rot[0..len).
  int cidx = -1;
  for (int i = len; i < l; ++i) {
    if (!in_cycle[rot[i]]) {
      cidx = i;
      break;
    }
  }
  if (cidx < 0) throw MapError("reduced_form: inconsistent power decomposition");
  const int j = cidx % len;
  r.p.assign(rot.begin(), rot.begin() + j);
  r.gamma.assign(rot.begin() + j, rot.begin() + len);
  r.gamma.insert(r.gamma.end(), rot.begin(), rot.begin() + j);
  r.k = (cidx - j) / len;
  r.tail.assign(rot.begin() + cidx, rot.end());
  return r;
}

Walk reassemble(const ReducedForm& r) {
  Walk out = r.p;
  for (int i = 0; i < r.k; ++i) out.insert(out.end(), r.gamma.begin(), r.gamma.end());
  out.insert(out.end(), r.tail.begin(), r.tail.end());
  return out;
}

SetLength set_length(const Walk& w) {
  SetLength sl;
  std::vector<Dart> seen;
  for (Dart d : w) {
    if (std::find(seen.begin(), seen.end(), d) == seen.end()) seen.push_back(d);
    sl.push_back(static_cast<int>(seen.size()));
  }
  return sl;
}

SLOrder compare_sl(const Walk& a, const Walk& b) {
  if (a.size() != b.size()) throw DomainError("compare_sl: walks have different lengths");
  const auto sa = set_length(a);
  const auto sb = set_length(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] != sb[i]) return sa[i] > sb[i] ? SLOrder::Greater : SLOrder::Less;
  }
  return SLOrder::EqualSL;
}

namespace {

struct CycleSearch {
  const CombMap& map;
  const Cells& c;
  int max_len;
  int start = 0;
  std::vector<char> used;
  Walk path;
  std::vector<Walk> out;

  void extend(int v) {
    if (static_cast<int>(path.size()) >= max_len) return;
    for (Dart d : c.vertices[v]) {
      const int u = c.vertex(map.alpha(d));
      if (u == start) {
        path.push_back(d);
        if (is_simple_cycle(map, c, path)) {
          const Walk canon = canonical_cycle(map, path);
          if (lex_min_rotation(path) == canon) out.push_back(canon);
        }
        path.pop_back();
        continue;
      }
      if (u < start || used[u]) continue;
      used[u] = 1;
      path.push_back(d);
      extend(u);
      path.pop_back();
      used[u] = 0;
    }
  }
};

}  // namespace

std::vector<Walk> simple_cycles(const CombMap& map, const Cells& c, int max_len) {
  CycleSearch s{map, c, max_len, 0, {}, {}, {}};
  s.used.assign(c.n_vertices(), 0);
  for (int v = 0; v < c.n_vertices(); ++v) {
    s.start = v;
    s.extend(v);
  }
  auto out = std::move(s.out);
  std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace trisurf
