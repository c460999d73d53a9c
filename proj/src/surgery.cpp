#include "trisurf/surgery.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "trisurf/map_io.hpp"

namespace trisurf {

OpenedEdges open_edges(const CombMap& map, const std::vector<Dart>& darts) {
  const int n = map.n_darts();
  std::vector<Dart> partner(n, 0);
  Dart next = n;
  for (Dart d : darts) {
    if (d < 1 || d > n) throw MapError("open_edges: dart " + std::to_string(d) + " out of range");
    if (partner[d - 1] != 0) throw MapError("open_edges: edge of dart " + std::to_string(d) + " repeated");
    partner[d - 1] = ++next;
    partner[map.alpha(d) - 1] = ++next;
  }
  const std::vector<Dart> sigma_inv = inverse_permutation(map.sigma_images());
  std::vector<Dart> sigma = map.sigma_images();
  std::vector<Dart> alpha = map.alpha_images();
  sigma.resize(next);
  alpha.resize(next);
  for (Dart d = 1; d <= n; ++d) {
    const Dart x = partner[d - 1];
    if (x == 0) continue;
    alpha[d - 1] = x;
    alpha[x - 1] = d;
    // previous opened dart around the vertex of d
    Dart f = d;
    do {
      f = map.alpha(sigma_inv[f - 1]);
    } while (partner[f - 1] == 0);
    sigma[x - 1] = partner[map.alpha(f) - 1];
  }
  return {CombMap(std::move(sigma), std::move(alpha), map.root()), std::move(partner)};
}

CombMap swap_corners(const CombMap& map, Dart y1, Dart y2) {
  std::vector<Dart> sigma = map.sigma_images();
  std::swap(sigma[y1 - 1], sigma[y2 - 1]);
  return {std::move(sigma), map.alpha_images(), map.root()};
}

CombMap compact(const CombMap& map, const std::vector<char>& keep, std::vector<Dart>* new_label) {
  const int n = map.n_darts();
  std::vector<Dart> label(n, 0);
  Dart next = 0;
  for (Dart d = 1; d <= n; ++d)
    if (keep[d - 1]) label[d - 1] = ++next;
  std::vector<Dart> sigma(next), alpha(next);
  for (Dart d = 1; d <= n; ++d) {
    if (!keep[d - 1]) continue;
    const Dart s = label[map.sigma(d) - 1];
    const Dart a = label[map.alpha(d) - 1];
    if (s == 0 || a == 0) throw MapError("compact: kept darts are not closed under sigma and alpha");
    sigma[label[d - 1] - 1] = s;
    alpha[label[d - 1] - 1] = a;
  }
  if (label[map.root() - 1] == 0) throw MapError("compact: root removed");
  CombMap out(std::move(sigma), std::move(alpha), label[map.root() - 1]);
  if (new_label) *new_label = std::move(label);
  return out;
}

namespace {

void require_perms(const CombMap& map) {
  const auto v = validate(map, false);
  for (const auto& x : v)
    if (x.message.rfind("not connected", 0) != 0) throw MapError("invalid map: " + x.message);
}

// Pairs sigma^k(r1) with sigma^-k(r2).
std::vector<std::pair<Dart, Dart>> boundary_pairs(const CombMap& map, Dart r1, Dart r2) {
  const auto f1 = face_darts(map, r1);
  const auto f2 = face_darts(map, r2);
  if (f1.size() != f2.size())
    throw MapError("glue: boundary sizes differ (" + std::to_string(f1.size()) + " vs " +
                   std::to_string(f2.size()) + ")");
  std::vector<std::pair<Dart, Dart>> out;
  const std::size_t l = f1.size();
  for (std::size_t k = 0; k < l; ++k) out.emplace_back(f1[k], f2[(l - k) % l]);
  return out;
}

// Dart of the face of r whose head is vertex v, or 0.
Dart corner_at(const CombMap& map, const Cells& c, Dart r, int v) {
  for (Dart y : face_darts(map, r))
    if (c.vertex(map.alpha(y)) == v) return y;
  return 0;
}

}  // namespace

CutResult cut_simple_cycle(const BoundaryMap& bmap, const Walk& cycle) {
  const CombMap& map = bmap.map;
  require_perms(map);
  const Cells c = cells(map);
  if (!is_closed_walk(map, c, cycle)) throw MapError("cut_simple_cycle: not a closed walk");
  if (!is_simple_cycle(map, c, cycle)) throw MapError("cut_simple_cycle: cycle is not simple");
  const int n = map.n_darts();
  const int l = static_cast<int>(cycle.size());

  const OpenedEdges opened = open_edges(map, cycle);
  const Dart r1 = opened.partner[cycle.front() - 1];
  const Dart r2 = opened.partner[map.alpha(cycle.front()) - 1];

  auto comps = connected_components(opened.map);
  if (comps.size() > 2) throw MapError("cut_simple_cycle: more than two components");
  auto owns = [](const std::vector<Dart>& ds, Dart d) { return std::binary_search(ds.begin(), ds.end(), d); };
  if (comps.size() == 2 && !owns(comps[0], r1)) std::swap(comps[0], comps[1]);

  CutResult out;
  out.cut_length = l;
  GluingData& g = out.gluing;
  g.original_darts = n;
  g.old_boundaries.resize(bmap.boundary_roots.size());
  for (int k = 0; k < static_cast<int>(comps.size()); ++k) {
    const auto& ds = comps[k];
    std::vector<Dart> label(opened.map.n_darts(), 0);
    for (std::size_t i = 0; i < ds.size(); ++i) label[ds[i] - 1] = static_cast<Dart>(i + 1);
    Dart root;
    if (owns(ds, map.root())) {
      root = map.root();
      g.marked_root = {k, label[root - 1]};
    } else {
      root = owns(ds, r1) ? r1 : r2;
    }
    BoundaryMap comp{restrict_to(opened.map, ds, root), {}};
    for (std::size_t b = 0; b < bmap.boundary_roots.size(); ++b) {
      const Dart r = bmap.boundary_roots[b];
      if (owns(ds, r)) {
        g.old_boundaries[b] = {k, static_cast<int>(comp.boundary_roots.size())};
        comp.boundary_roots.push_back(label[r - 1]);
      }
    }
    for (Dart r : {r1, r2}) {
      if (!owns(ds, r)) continue;
      (r == r1 ? g.side1 : g.side2) = {k, label[r - 1]};
      comp.boundary_roots.push_back(label[r - 1]);
    }
    std::vector<Dart> origin(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) origin[i] = ds[i] <= n ? ds[i] : 0;
    g.origin.push_back(std::move(origin));

    const EulerData e = euler_data(comp.map);
    out.component_faces.push_back(e.faces - static_cast<int>(comp.boundary_roots.size()));
    out.component_genus.push_back(e.genus);
    out.components.push_back(std::move(comp));
  }
  return out;
}

CutResult cut_simple_cycle(const CombMap& map, const Walk& cycle) {
  return cut_simple_cycle(BoundaryMap{map, {}}, cycle);
}

BoundaryMap glue_boundaries(const CutResult& cut) {
  const GluingData& g = cut.gluing;
  if (g.origin.size() != cut.components.size() || g.side1.second == 0 || g.side2.second == 0 ||
      g.marked_root.second == 0)
    throw MapError("glue_boundaries: incomplete gluing data");
  const auto& m1 = cut.components.at(g.side1.first).map;
  const auto& m2 = cut.components.at(g.side2.first).map;
  const auto f1 = face_darts(m1, g.side1.second);
  const auto f2 = face_darts(m2, g.side2.second);
  if (f1.size() != f2.size()) throw MapError("glue_boundaries: boundary sizes differ");
  const std::size_t l = f1.size();
  // twin of every cut boundary dart as (component, dart)
  std::map<std::pair<int, Dart>, std::pair<int, Dart>> twin;
  for (std::size_t k = 0; k < l; ++k) {
    const std::pair<int, Dart> a{g.side1.first, f1[k]};
    const std::pair<int, Dart> b{g.side2.first, f2[(l - k) % l]};
    twin[a] = b;
    twin[b] = a;
  }
  const int n = g.original_darts;
  std::vector<Dart> sigma(n, 0), alpha(n, 0);
  for (int k = 0; k < static_cast<int>(cut.components.size()); ++k) {
    const CombMap& m = cut.components[k].map;
    const auto& origin = g.origin[k];
    if (static_cast<int>(origin.size()) != m.n_darts()) throw MapError("glue_boundaries: origin size mismatch");
    for (Dart d = 1; d <= m.n_darts(); ++d) {
      const Dart o = origin[d - 1];
      if (o == 0) continue;
      const Dart s = origin[m.sigma(d) - 1];
      if (s == 0) throw MapError("glue_boundaries: original dart followed by a cut dart");
      sigma[o - 1] = s;
      Dart a = origin[m.alpha(d) - 1];
      if (a == 0) {
        const auto it = twin.find({k, m.alpha(d)});
        if (it == twin.end()) throw MapError("glue_boundaries: unmatched cut dart");
        const auto [tk, td] = it->second;
        a = g.origin[tk][cut.components[tk].map.alpha(td) - 1];
      }
      alpha[o - 1] = a;
    }
  }
  const Dart root = g.origin[g.marked_root.first][g.marked_root.second - 1];
  BoundaryMap out{CombMap(std::move(sigma), std::move(alpha), root), {}};
  for (const auto& [k, b] : g.old_boundaries)
    out.boundary_roots.push_back(g.origin[k][cut.components[k].boundary_roots[b] - 1]);
  require_perms(out.map);
  return out;
}

BoundaryMap glue_faces(const BoundaryMap& bmap, int i, int j) {
  const int nb = static_cast<int>(bmap.boundary_roots.size());
  if (i < 0 || j < 0 || i >= nb || j >= nb || i == j) throw MapError("glue_faces: bad boundary indices");
  const CombMap& map = bmap.map;
  const Dart ri = bmap.boundary_roots[i];
  const Dart rj = bmap.boundary_roots[j];
  const auto fi = face_darts(map, ri);
  if (std::find(fi.begin(), fi.end(), rj) != fi.end()) throw MapError("glue_faces: boundaries share a face");
  const auto pairs = boundary_pairs(map, ri, rj);
  std::vector<char> keep(map.n_darts(), 1);
  for (const auto& [x, y] : pairs) keep[x - 1] = keep[y - 1] = 0;
  std::vector<Dart> alpha = map.alpha_images();
  for (const auto& [x, y] : pairs) {
    const Dart a = map.alpha(x), b = map.alpha(y);
    if (!keep[a - 1] || !keep[b - 1]) throw MapError("glue_faces: an edge joins the glued boundaries");
    alpha[a - 1] = b;
    alpha[b - 1] = a;
  }
  std::vector<Dart> label;
  const CombMap glued = compact(CombMap(map.sigma_images(), std::move(alpha), map.root()), keep, &label);
  BoundaryMap out{glued, {}};
  for (int b = 0; b < nb; ++b)
    if (b != i && b != j) out.boundary_roots.push_back(label[bmap.boundary_roots[b] - 1]);
  return out;
}

BoundaryMap glue_maps(const BoundaryMap& a, int i, const BoundaryMap& b, int j) {
  BoundaryMap u{disjoint_union(a.map, b.map), a.boundary_roots};
  for (Dart r : b.boundary_roots) u.boundary_roots.push_back(r + a.map.n_darts());
  return glue_faces(u, i, static_cast<int>(a.boundary_roots.size()) + j);
}

SlitResult slit_path(const BoundaryMap& bmap, const Walk& p, int i, int j) {
  const int nb = static_cast<int>(bmap.boundary_roots.size());
  if (i < 0 || i >= nb || j < -1 || j >= nb || i == j) throw MapError("slit_path: bad boundary indices");
  const CombMap& map = bmap.map;
  require_perms(map);
  const Cells c = cells(map);
  SlitResult out;
  SlitData& data = out.data;
  data.original_darts = map.n_darts();
  data.path = p;
  data.boundary_i = i;
  data.boundary_j = j;
  data.original_roots = bmap.boundary_roots;

  std::vector<int> on_boundary(c.n_vertices(), -1);
  for (int b = 0; b < nb; ++b)
    for (Dart d : face_darts(map, bmap.boundary_roots[b])) on_boundary[c.vertex(d)] = b;
  auto on = [&](int v, int b) {
    for (Dart d : face_darts(map, bmap.boundary_roots[b]))
      if (c.vertex(d) == v) return true;
    return false;
  };

  CombMap cur = map;
  if (p.empty()) {
    if (j < 0) throw MapError("slit_path: an empty path needs two boundaries");
    const Dart ri = bmap.boundary_roots[i], rj = bmap.boundary_roots[j];
    Dart y1 = 0, y2 = 0;
    for (Dart y : face_darts(map, ri)) {
      const Dart z = corner_at(map, c, rj, c.vertex(map.alpha(y)));
      if (z != 0) {
        y1 = y;
        y2 = z;
        break;
      }
    }
    if (y1 == 0) throw MapError("slit_path: boundaries do not touch");
    cur = swap_corners(cur, y1, y2);
    data.swaps.emplace_back(y1, y2);
  } else {
    if (!is_path(map, c, p) || !is_simple_path(map, c, p)) throw MapError("slit_path: path is not simple");
    const auto vs = walk_vertices(map, c, p);
    for (std::size_t k = 1; k + 1 < vs.size(); ++k)
      if (on_boundary[vs[k]] >= 0) throw MapError("slit_path: path touches a boundary in its interior");
    if (!on(vs.front(), i)) throw MapError("slit_path: path does not start on boundary " + std::to_string(i));
    if (j >= 0 && !on(vs.back(), j)) throw MapError("slit_path: path does not end on boundary " + std::to_string(j));
    if (j < 0 && on_boundary[vs.back()] >= 0) throw MapError("slit_path: path end lies on a boundary");
    for (int b = 0; b < nb; ++b)
      if (b != i && on(vs.front(), b)) throw MapError("slit_path: path start is shared with another boundary");

    const OpenedEdges opened = open_edges(map, p);
    cur = opened.map;
    for (Dart e : p) data.arc1.push_back(opened.partner[map.alpha(e) - 1]);
    for (auto it = p.rbegin(); it != p.rend(); ++it) data.arc2.push_back(opened.partner[*it - 1]);
    const Cells oc = cells(cur);
    const Dart zs = opened.partner[p.front() - 1];   // slit dart ending at the start
    const Dart zt = opened.partner[map.alpha(p.back()) - 1];  // slit dart ending at the end
    const Dart ys = corner_at(cur, oc, bmap.boundary_roots[i], oc.vertex(cur.alpha(zs)));
    if (ys == 0) throw MapError("slit_path: no boundary corner at the path start");
    cur = swap_corners(cur, zs, ys);
    data.swaps.emplace_back(zs, ys);
    if (j >= 0) {
      const Cells oc2 = cells(cur);
      const Dart yt = corner_at(cur, oc2, bmap.boundary_roots[j], oc2.vertex(cur.alpha(zt)));
      if (yt == 0) throw MapError("slit_path: no boundary corner at the path end");
      cur = swap_corners(cur, zt, yt);
      data.swaps.emplace_back(zt, yt);
    }
  }
  out.bmap.map = cur;
  for (int b = 0; b < nb; ++b)
    if (b != j) out.bmap.boundary_roots.push_back(bmap.boundary_roots[b]);
  return out;
}

BoundaryMap unslit(const SlitResult& s) {
  const SlitData& data = s.data;
  if (data.swaps.empty()) throw MapError("unslit: missing markings");
  CombMap cur = s.bmap.map;
  for (auto it = data.swaps.rbegin(); it != data.swaps.rend(); ++it) cur = swap_corners(cur, it->first, it->second);
  const int n = data.original_darts;
  if (!data.path.empty()) {
    const std::size_t k = data.path.size();
    if (data.arc1.size() != k || data.arc2.size() != k) throw MapError("unslit: missing markings");
    std::vector<Dart> alpha = cur.alpha_images();
    // arc1[t] is the partner of alpha(e_t), arc2[k-1-t] the partner of e_t
    for (std::size_t t = 0; t < k; ++t) {
      const Dart e = cur.alpha(data.arc2[k - 1 - t]);
      const Dart f = cur.alpha(data.arc1[t]);
      alpha[e - 1] = f;
      alpha[f - 1] = e;
    }
    std::vector<char> keep(cur.n_darts(), 0);
    for (Dart d = 1; d <= n; ++d) keep[d - 1] = 1;
    cur = compact(CombMap(cur.sigma_images(), std::move(alpha), cur.root()), keep);
  }
  return {cur, data.original_roots};
}

nlohmann::ordered_json to_json(const CutResult& cut) {
  nlohmann::ordered_json j;
  j["cut_length"] = cut.cut_length;
  j["disconnects"] = cut.disconnects();
  j["components"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < cut.components.size(); ++k) {
    nlohmann::ordered_json c;
    c["map"] = to_json(cut.components[k]);
    c["internal_faces"] = cut.component_faces[k];
    c["genus"] = cut.component_genus[k];
    c["origin"] = cut.gluing.origin[k];
    j["components"].push_back(std::move(c));
  }
  const auto& g = cut.gluing;
  auto pair = [](const std::pair<int, Dart>& p) { return nlohmann::ordered_json{{"component", p.first}, {"dart", p.second}}; };
  j["gluing"] = {{"original_darts", g.original_darts},
                 {"side1", pair(g.side1)},
                 {"side2", pair(g.side2)},
                 {"marked_root", pair(g.marked_root)}};
  nlohmann::ordered_json old = nlohmann::ordered_json::array();
  for (const auto& [k, b] : g.old_boundaries) old.push_back({{"component", k}, {"boundary", b}});
  j["gluing"]["old_boundaries"] = std::move(old);
  return j;
}

}  // namespace trisurf
