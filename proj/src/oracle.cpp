#include "trisurf/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "trisurf/errors.hpp"

namespace trisurf {

std::vector<Dart> triangle_sigma(int faces) {
  std::vector<Dart> s(3 * faces);
  for (int f = 0; f < faces; ++f) {
    s[3 * f] = 3 * f + 2;
    s[3 * f + 1] = 3 * f + 3;
    s[3 * f + 2] = 3 * f + 1;
  }
  return s;
}

namespace {

constexpr int kMaxDarts = 18;
using Mask = std::uint32_t;

// 0-indexed fixed face structure shared by the gluing enumerators.
struct Frame {
  int n_darts = 0;
  std::array<int, kMaxDarts> sigma{};
  std::array<int, kMaxDarts> face{};
  int n_faces = 0;
};

Frame make_frame(const std::vector<Dart>& sigma) {
  Frame f;
  f.n_darts = static_cast<int>(sigma.size());
  for (int d = 0; d < f.n_darts; ++d) f.sigma[d] = sigma[d] - 1;
  const auto cyc = permutation_cycles(sigma);
  f.n_faces = static_cast<int>(cyc.size());
  for (int i = 0; i < f.n_faces; ++i)
    for (Dart d : cyc[i]) f.face[d - 1] = i;
  return f;
}

struct LeafInfo {
  bool connected;
  int vertices;
  std::array<int, kMaxDarts> vertex;
};

LeafInfo analyze(const Frame& fr, const std::array<int, kMaxDarts>& alpha) {
  LeafInfo info{};
  std::array<int, kMaxDarts> parent{};
  for (int i = 0; i < fr.n_faces; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = fr.n_faces;
  for (int d = 0; d < fr.n_darts; ++d) {
    const int a = find(fr.face[d]);
    const int b = find(fr.face[alpha[d]]);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  info.connected = comps == 1;
  info.vertex.fill(-1);
  int v = 0;
  for (int d = 0; d < fr.n_darts; ++d) {
    if (info.vertex[d] >= 0) continue;
    for (int x = d; info.vertex[x] < 0; x = fr.sigma[alpha[x]]) info.vertex[x] = v;
    ++v;
  }
  info.vertices = v;
  return info;
}

// Enumerates all perfect matchings of the darts in `free`, always matching
// the smallest free dart first.
template <class Leaf>
void match_rest(Mask free, std::array<int, kMaxDarts>& alpha, Leaf& leaf) {
  if (free == 0) {
    leaf(alpha);
    return;
  }
  const int d = __builtin_ctz(free);
  Mask rest = free & (free - 1);
  for (Mask m = rest; m; m &= m - 1) {
    const int e = __builtin_ctz(m);
    alpha[d] = e;
    alpha[e] = d;
    match_rest(rest & ~(Mask(1) << e), alpha, leaf);
  }
}

// Runs `make_leaf()` per shard (partner choice for dart 0) and merges the
// shard results with `merge`.
template <class Result, class MakeLeaf, class Merge>
Result sharded_gluings(int n_darts, Exec exec, MakeLeaf make_leaf, Merge merge) {
  const Mask all = n_darts == 32 ? ~Mask(0) : ((Mask(1) << n_darts) - 1);
  const int shards = n_darts - 1;
  std::vector<Result> partial(shards);
  auto run = [&](int s) {
    auto leaf = make_leaf();
    std::array<int, kMaxDarts> alpha{};
    const int e = s + 1;
    alpha[0] = e;
    alpha[e] = 0;
    match_rest(all & ~Mask(1) & ~(Mask(1) << e), alpha, leaf);
    partial[s] = leaf.result;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int s = 0; s < shards; ++s) run(s);
  } else {
    for (int s = 0; s < shards; ++s) run(s);
  }
  Result total{};
  for (const auto& p : partial) merge(total, p);
  return total;
}

struct CensusCounts {
  std::array<long, 8> by_genus{};
  long disconnected = 0;
};

struct CensusLeaf {
  const Frame* frame;
  CensusCounts result;
  void operator()(const std::array<int, kMaxDarts>& alpha) {
    const LeafInfo info = analyze(*frame, alpha);
    if (!info.connected) {
      ++result.disconnected;
      return;
    }
    const int n = frame->n_darts / 6;
    ++result.by_genus[(n + 2 - info.vertices) / 2];
  }
};

mpz_class factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

mpz_class pow3(int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, k);
  return r;
}

}  // namespace

long GluingCensus::total() const {
  long t = disconnected;
  for (long c : counts_by_genus) t += c;
  return t;
}

bool GluingCensus::divisible(int g) const {
  if (g < 0 || g >= static_cast<int>(counts_by_genus.size())) return true;
  const mpz_class num = mpz_class(6 * n) * counts_by_genus[g];
  const mpz_class den = factorial(2 * n) * pow3(2 * n);
  return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
}

mpz_class GluingCensus::rooted(int g) const {
  if (g < 0 || g >= static_cast<int>(counts_by_genus.size())) return 0;
  if (!divisible(g)) throw MapError("census: rooted count is not an integer");
  const mpz_class num = mpz_class(6 * n) * counts_by_genus[g];
  return num / (factorial(2 * n) * pow3(2 * n));
}

GluingCensus census(int n, Exec exec) {
  if (n < 1 || n > kOracleMaxN) {
    throw RangeRefusal("census: n=" + std::to_string(n) + " is outside the supported range 1..3");
  }
  const Frame frame = make_frame(triangle_sigma(2 * n));
  const auto counts = sharded_gluings<CensusCounts>(
      6 * n, exec, [&] { return CensusLeaf{&frame, {}}; },
      [](CensusCounts& acc, const CensusCounts& p) {
        for (std::size_t g = 0; g < acc.by_genus.size(); ++g) acc.by_genus[g] += p.by_genus[g];
        acc.disconnected += p.disconnected;
      });
  GluingCensus c;
  c.n = n;
  c.counts_by_genus.assign(counts.by_genus.begin(), counts.by_genus.begin() + genus_cap(n) + 1);
  c.disconnected = counts.disconnected;
  return c;
}

namespace {

struct Orderly {
  int n_darts;
  int faces;
  int genus;
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;  // 1-indexed images, 0 = unmatched
  const MapSink* sink;

  void run(int d, int blocks) {
    while (d <= n_darts && alpha[d - 1] != 0) ++d;
    if (d > n_darts) {
      if (blocks != faces) return;
      CombMap m(sigma, alpha, 1);
      if (euler_data(m).genus == genus) (*sink)(m);
      return;
    }
    // A dart beyond the reached faces cannot be reached any more.
    if (d > 3 * blocks) return;
    for (int e = d + 1; e <= 3 * blocks; ++e) {
      if (alpha[e - 1] != 0) continue;
      alpha[d - 1] = e;
      alpha[e - 1] = d;
      run(d + 1, blocks);
      alpha[d - 1] = alpha[e - 1] = 0;
    }
    if (blocks < faces) {
      const int e = 3 * blocks + 1;
      alpha[d - 1] = e;
      alpha[e - 1] = d;
      run(d + 1, blocks + 1);
      alpha[d - 1] = alpha[e - 1] = 0;
    }
  }
};

void check_rooted_range(int n) {
  if (n < 1 || n > kOracleMaxN) {
    throw RangeRefusal("enumerate_rooted: n=" + std::to_string(n) + " is outside the supported range 1..3");
  }
}

}  // namespace

void enumerate_rooted(int n, int g, const MapSink& sink) {
  check_rooted_range(n);
  if (g < 0 || g > genus_cap(n)) return;
  Orderly o{6 * n, 2 * n, g, triangle_sigma(2 * n), std::vector<Dart>(6 * n, 0), &sink};
  o.run(1, 1);
}

std::vector<CombMap> enumerate_rooted(int n, int g) {
  std::vector<CombMap> out;
  enumerate_rooted(n, g, [&](const CombMap& m) { out.push_back(m); });
  return out;
}

std::vector<CombMap> enumerate_rooted_bruteforce(int n, int g) {
  check_rooted_range(n);
  std::set<std::vector<Dart>> seen;
  std::vector<CombMap> out;
  if (g < 0 || g > genus_cap(n)) return out;
  const auto sigma = triangle_sigma(2 * n);
  const Frame frame = make_frame(sigma);
  struct Leaf {
    const Frame* frame;
    const std::vector<Dart>* sigma;
    int g;
    std::set<std::vector<Dart>>* seen;
    std::vector<CombMap>* out;
    void operator()(const std::array<int, kMaxDarts>& a) {
      const LeafInfo info = analyze(*frame, a);
      if (!info.connected || (frame->n_darts / 6 + 2 - info.vertices) / 2 != g) return;
      std::vector<Dart> alpha(frame->n_darts);
      for (int d = 0; d < frame->n_darts; ++d) alpha[d] = a[d] + 1;
      CombMap c = canonical_form(CombMap(*sigma, alpha, 1));
      if (seen->insert(c.alpha_images()).second) out->push_back(std::move(c));
    }
  } leaf{&frame, &sigma, g, &seen, &out};
  std::array<int, kMaxDarts> alpha{};
  const Mask all = (Mask(1) << (6 * n)) - 1;
  match_rest(all, alpha, leaf);
  std::sort(out.begin(), out.end(), [](const CombMap& x, const CombMap& y) {
    return x.alpha_images() < y.alpha_images();
  });
  return out;
}

namespace {

struct BoundaryLeaf {
  const Frame* frame;
  int vertices_needed;
  int first_boundary_face;
  int n_boundaries;
  long result = 0;
  void operator()(const std::array<int, kMaxDarts>& alpha) {
    const LeafInfo info = analyze(*frame, alpha);
    if (!info.connected || info.vertices != vertices_needed) return;
    std::uint32_t owned = 0;
    for (int b = 0; b < n_boundaries; ++b) {
      const int f = first_boundary_face + b;
      std::uint32_t mine = 0;
      for (int d = 0; d < frame->n_darts; ++d) {
        if (frame->face[d] != f) continue;
        const std::uint32_t bit = std::uint32_t(1) << info.vertex[d];
        if (mine & bit) return;
        mine |= bit;
      }
      if (owned & mine) return;
      owned |= mine;
    }
    ++result;
  }
};

}  // namespace

BoundaryCensus census_with_boundaries(int m, int g, const std::vector<int>& profile, Exec exec) {
  if (m < 0 || g < 0) throw DomainError("census_with_boundaries: m and g must be nonnegative");
  int p = 0;
  for (int pi : profile) {
    if (pi < 1) throw DomainError("census_with_boundaries: boundary sizes must be positive");
    p += pi;
  }
  const int n_darts = 3 * m + p;
  if (n_darts > kBoundaryCensusMaxDarts) {
    throw RangeRefusal("census_with_boundaries: " + std::to_string(n_darts) + " darts exceeds desk scale (18)");
  }
  BoundaryCensus out;
  if (n_darts % 2 != 0 || n_darts == 0) return out;
  std::vector<Dart> sigma = triangle_sigma(m);
  for (int pi : profile) {
    const int start = static_cast<int>(sigma.size()) + 1;
    for (int i = 0; i < pi; ++i) sigma.push_back(start + (i + 1) % pi);
  }
  const Frame frame = make_frame(sigma);
  const int k = static_cast<int>(profile.size());
  const int edges = n_darts / 2;
  const int vertices = 2 - 2 * g + edges - (m + k);
  if (vertices < 1) return out;
  out.labeled = sharded_gluings<long>(
      n_darts, exec, [&] { return BoundaryLeaf{&frame, vertices, m, k}; },
      [](long& acc, long v) { acc += v; });
  mpz_class num = out.labeled;
  if (k == 0) num *= 3 * m;
  const mpz_class den = factorial(m) * pow3(m);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw MapError("census_with_boundaries: rooted count is not an integer");
  }
  out.rooted = num / den;
  return out;
}

mpz_class filling_bound(int m, int g, const std::vector<int>& profile) {
  int p = 0;
  for (int pi : profile) p += pi;
  if ((m + p) % 2 != 0) return 0;
  const int k = static_cast<int>(profile.size());
  mpz_class base = 3 * m + 3 * p;
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k >= 1 ? k - 1 : 0);
  return r * tau((m + p) / 2, g);
}

}  // namespace trisurf
