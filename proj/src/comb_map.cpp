#include "trisurf/comb_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace trisurf {

CombMap::CombMap(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), root_(root) {
  if (sigma_.size() != alpha_.size()) {
    throw MapError("sigma and alpha have different lengths");
  }
}

std::vector<std::vector<Dart>> permutation_cycles(const std::vector<Dart>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Dart>> out;
  for (int d = 1; d <= n; ++d) {
    if (seen[d - 1]) continue;
    std::vector<Dart> cycle;
    for (Dart x = d; !seen[x - 1]; x = images[x - 1]) {
      seen[x - 1] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Dart> inverse_permutation(const std::vector<Dart>& images) {
  std::vector<Dart> inv(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) inv[images[i] - 1] = static_cast<Dart>(i + 1);
  return inv;
}

Cells cells(const CombMap& map) {
  Cells c;
  const int n = map.n_darts();
  std::vector<Dart> phi(n);
  for (Dart d = 1; d <= n; ++d) phi[d - 1] = map.phi(d);
  c.faces = permutation_cycles(map.sigma_images());
  c.vertices = permutation_cycles(phi);
  c.face_of.assign(n, -1);
  c.vertex_of.assign(n, -1);
  for (int f = 0; f < c.n_faces(); ++f)
    for (Dart d : c.faces[f]) c.face_of[d - 1] = f;
  for (int v = 0; v < c.n_vertices(); ++v)
    for (Dart d : c.vertices[v]) c.vertex_of[d - 1] = v;
  return c;
}

std::vector<Dart> face_darts(const CombMap& map, Dart d) {
  std::vector<Dart> out;
  Dart x = d;
  do {
    out.push_back(x);
    x = map.sigma(x);
  } while (x != d);
  return out;
}

namespace {

bool in_range(Dart d, int n) { return d >= 1 && d <= n; }

// Connectivity under the group generated by sigma and alpha.
std::vector<int> component_ids(const CombMap& map, int* count) {
  const int n = map.n_darts();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (Dart s = 1; s <= n; ++s) {
    if (comp[s - 1] >= 0) continue;
    std::vector<Dart> stack{s};
    comp[s - 1] = next;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {map.sigma(d), map.alpha(d)}) {
        if (comp[e - 1] < 0) {
          comp[e - 1] = next;
          stack.push_back(e);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace

std::vector<Violation> validate(const CombMap& map, bool require_triangles) {
  std::vector<Violation> out;
  const int n = map.n_darts();
  if (n == 0) {
    out.push_back({"map has no darts", {}});
    return out;
  }
  const auto& sigma = map.sigma_images();
  const auto& alpha = map.alpha_images();
  bool ranges_ok = true;
  for (Dart d = 1; d <= n; ++d) {
    if (!in_range(sigma[d - 1], n)) {
      out.push_back({"sigma(" + std::to_string(d) + ") out of range", {d}});
      ranges_ok = false;
    }
    if (!in_range(alpha[d - 1], n)) {
      out.push_back({"alpha(" + std::to_string(d) + ") out of range", {d}});
      ranges_ok = false;
    }
  }
  if (!in_range(map.root(), n)) out.push_back({"root out of range", {map.root()}});
  if (!ranges_ok) return out;

  std::vector<int> hits(n, 0);
  for (Dart d = 1; d <= n; ++d) ++hits[sigma[d - 1] - 1];
  bool sigma_perm = true;
  for (Dart d = 1; d <= n; ++d) {
    if (hits[d - 1] != 1) {
      out.push_back({"sigma is not a permutation: dart " + std::to_string(d) + " has " +
                         std::to_string(hits[d - 1]) + " preimages",
                     {d}});
      sigma_perm = false;
    }
  }
  bool alpha_ok = true;
  for (Dart d = 1; d <= n; ++d) {
    const Dart a = alpha[d - 1];
    if (a == d) {
      out.push_back({"alpha(" + std::to_string(d) + ")=" + std::to_string(d), {d}});
      alpha_ok = false;
    } else if (alpha[a - 1] != d) {
      out.push_back({"alpha is not an involution at " + std::to_string(d), {d, a}});
      alpha_ok = false;
    }
  }
  if (!sigma_perm || !alpha_ok) return out;

  int n_comp = 0;
  component_ids(map, &n_comp);
  if (n_comp != 1) out.push_back({"not connected (" + std::to_string(n_comp) + " components)", {}});

  if (require_triangles) {
    for (const auto& f : permutation_cycles(sigma)) {
      if (f.size() != 3) {
        out.push_back({"face of degree " + std::to_string(f.size()) + " at dart " +
                           std::to_string(f.front()),
                       f});
      }
    }
  }
  return out;
}

void require_valid(const CombMap& map, bool require_triangles) {
  auto v = validate(map, require_triangles);
  if (!v.empty()) throw MapError("invalid map: " + v.front().message);
}

EulerData euler_data(const CombMap& map) {
  require_valid(map, false);
  const Cells c = cells(map);
  EulerData e;
  e.vertices = c.n_vertices();
  e.edges = map.n_darts() / 2;
  e.faces = c.n_faces();
  const int chi = e.vertices - e.edges + e.faces;
  if (chi > 2 || (2 - chi) % 2 != 0) throw MapError("inconsistent Euler characteristic");
  e.genus = (2 - chi) / 2;
  return e;
}

std::vector<std::vector<Dart>> connected_components(const CombMap& map) {
  int count = 0;
  const auto comp = component_ids(map, &count);
  std::vector<std::vector<Dart>> out(count);
  for (Dart d = 1; d <= map.n_darts(); ++d) out[comp[d - 1]].push_back(d);
  return out;
}

CombMap relabel(const CombMap& map, const std::vector<Dart>& new_label) {
  const int n = map.n_darts();
  std::vector<Dart> sigma(n), alpha(n);
  for (Dart d = 1; d <= n; ++d) {
    sigma[new_label[d - 1] - 1] = new_label[map.sigma(d) - 1];
    alpha[new_label[d - 1] - 1] = new_label[map.alpha(d) - 1];
  }
  return {std::move(sigma), std::move(alpha), new_label[map.root() - 1]};
}

std::vector<Dart> canonical_labels(const CombMap& map) {
  const int n = map.n_darts();
  std::vector<Dart> label(n, 0);
  std::vector<Dart> order;
  order.reserve(n);
  auto take_face = [&](Dart d) {
    Dart x = d;
    do {
      label[x - 1] = static_cast<Dart>(order.size() + 1);
      order.push_back(x);
      x = map.sigma(x);
    } while (x != d);
  };
  take_face(map.root());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart a = map.alpha(order[i]);
    if (label[a - 1] == 0) take_face(a);
  }
  if (static_cast<int>(order.size()) != n) throw MapError("canonical_form requires a connected map");
  return label;
}

CombMap canonical_form(const CombMap& map) {
  require_valid(map, false);
  return relabel(map, canonical_labels(map));
}

BoundaryMap canonical_form(const BoundaryMap& bmap) {
  require_valid(bmap.map, false);
  const auto label = canonical_labels(bmap.map);
  BoundaryMap out{relabel(bmap.map, label), {}};
  for (Dart r : bmap.boundary_roots) out.boundary_roots.push_back(label[r - 1]);
  return out;
}

CombMap restrict_to(const CombMap& map, const std::vector<Dart>& darts, Dart root) {
  std::vector<Dart> label(map.n_darts(), 0);
  for (std::size_t i = 0; i < darts.size(); ++i) label[darts[i] - 1] = static_cast<Dart>(i + 1);
  std::vector<Dart> sigma(darts.size()), alpha(darts.size());
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const Dart s = label[map.sigma(darts[i]) - 1];
    const Dart a = label[map.alpha(darts[i]) - 1];
    if (s == 0 || a == 0) throw MapError("restrict_to: dart set is not closed under sigma and alpha");
    sigma[i] = s;
    alpha[i] = a;
  }
  if (label[root - 1] == 0) throw MapError("restrict_to: root outside dart set");
  return {std::move(sigma), std::move(alpha), label[root - 1]};
}

CombMap disjoint_union(const CombMap& a, const CombMap& b) {
  const int off = a.n_darts();
  std::vector<Dart> sigma = a.sigma_images();
  std::vector<Dart> alpha = a.alpha_images();
  for (Dart d = 1; d <= b.n_darts(); ++d) {
    sigma.push_back(b.sigma(d) + off);
    alpha.push_back(b.alpha(d) + off);
  }
  return {std::move(sigma), std::move(alpha), a.root()};
}

std::vector<Violation> validate(const BoundaryMap& bmap) {
  auto out = validate(bmap.map, false);
  if (!out.empty()) return out;
  const Cells c = cells(bmap.map);
  const int n = bmap.map.n_darts();
  std::vector<int> boundary_of_face(c.n_faces(), -1);
  for (std::size_t i = 0; i < bmap.boundary_roots.size(); ++i) {
    const Dart r = bmap.boundary_roots[i];
    if (r < 1 || r > n) {
      out.push_back({"boundary root " + std::to_string(r) + " out of range", {r}});
      continue;
    }
    const int f = c.face(r);
    if (boundary_of_face[f] >= 0) {
      out.push_back({"boundaries " + std::to_string(boundary_of_face[f]) + " and " +
                         std::to_string(i) + " share a face",
                     {r}});
      continue;
    }
    boundary_of_face[f] = static_cast<int>(i);
  }
  if (!out.empty()) return out;
  std::vector<int> owner(c.n_vertices(), -1);
  for (int f = 0; f < c.n_faces(); ++f) {
    const int b = boundary_of_face[f];
    if (b < 0) {
      if (c.faces[f].size() != 3) {
        out.push_back({"internal face of degree " + std::to_string(c.faces[f].size()) +
                           " at dart " + std::to_string(c.faces[f].front()),
                       c.faces[f]});
      }
      continue;
    }
    std::set<int> seen;
    for (Dart d : c.faces[f]) {
      const int v = c.vertex(d);
      if (!seen.insert(v).second) {
        out.push_back({"boundary " + std::to_string(b) + " is not simple: vertex " +
                           std::to_string(v) + " repeats",
                       {d}});
      } else if (owner[v] >= 0 && owner[v] != b) {
        out.push_back({"boundaries " + std::to_string(owner[v]) + " and " + std::to_string(b) +
                           " share vertex " + std::to_string(v),
                       {d}});
      } else {
        owner[v] = b;
      }
    }
  }
  return out;
}

BoundaryProfile boundary_profile(const BoundaryMap& bmap) {
  const auto v = validate(bmap);
  if (!v.empty()) throw MapError("invalid boundary map: " + v.front().message);
  BoundaryProfile p;
  const Cells c = cells(bmap.map);
  for (Dart r : bmap.boundary_roots) p.lengths.push_back(static_cast<int>(c.faces[c.face(r)].size()));
  p.internal_faces = c.n_faces() - static_cast<int>(bmap.boundary_roots.size());
  p.genus = euler_data(bmap.map).genus;
  return p;
}

}  // namespace trisurf
