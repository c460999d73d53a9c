#pragma once

#include <json.hpp>
#include <utility>
#include <vector>

#include "trisurf/comb_map.hpp"
#include "trisurf/walks.hpp"

namespace trisurf {

// Surgeries act on maps whose boundary faces are listed explicitly. Inputs
// need consistent permutations only; boundary simplicity is not required so
// that intermediate states (e.g. touching boundaries before a merge) are
// representable.

// Opens the given edges (each named by one of its darts). Every opened dart
// d gets a new partner x_d; new darts are appended after the existing ones
// in the order of `darts`, d before alpha(d). At each vertex the corners
// between consecutive opened darts become separate vertices.
struct OpenedEdges {
  CombMap map;
  std::vector<Dart> partner;  // partner[d-1] = x_d for opened darts, else 0
};
OpenedEdges open_edges(const CombMap& map, const std::vector<Dart>& darts);

// Swaps sigma(y1) and sigma(y2). When y1, y2 end at the same vertex on two
// different faces, the faces merge and the vertex splits. Self-inverse.
CombMap swap_corners(const CombMap& map, Dart y1, Dart y2);

// Removes the darts with `keep[d-1] == false`, renumbering the rest in
// order; `new_label` receives the new label of each kept dart.
CombMap compact(const CombMap& map, const std::vector<char>& keep, std::vector<Dart>* new_label = nullptr);

struct GluingData {
  int original_darts = 0;
  bool original_had_root = true;
  // origin[c][d-1]: label in the input map of dart d of component c, or 0
  // for darts created by the cut.
  std::vector<std::vector<Dart>> origin;
  // (component, dart) of the two boundary roots created by the cut: the
  // duplicates of the cycle's first dart.
  std::pair<int, Dart> side1{0, 0};
  std::pair<int, Dart> side2{0, 0};
  // Component and label of the input map's root.
  std::pair<int, Dart> marked_root{0, 0};
  // Boundaries of the input, as indices into the component boundary lists.
  std::vector<std::pair<int, int>> old_boundaries;
};

struct CutResult {
  std::vector<BoundaryMap> components;
  int cut_length = 0;
  std::vector<int> component_faces;  // internal (non-boundary) faces
  std::vector<int> component_genus;
  GluingData gluing;

  bool disconnects() const { return components.size() == 2; }
};

// Cuts along a simple cycle. The two new boundaries have length |c| and are
// rooted at the duplicates of c[0]; the new boundaries are appended to the
// boundary list of their components. Components are found from the dart
// reconnection alone. Throws MapError for a non-simple cycle.
CutResult cut_simple_cycle(const BoundaryMap& bmap, const Walk& cycle);
CutResult cut_simple_cycle(const CombMap& map, const Walk& cycle);

// Exact inverse of cut_simple_cycle, labels included.
BoundaryMap glue_boundaries(const CutResult& cut);

// Identifies boundaries i and j of bmap (equal sizes) by pairing
// sigma^k(root_i) with sigma^-k(root_j), then drops the paired darts.
// Throws MapError on a size mismatch.
BoundaryMap glue_faces(const BoundaryMap& bmap, int i, int j);
// Disjoint union of a and b, then glue_faces on boundary i of a and j of b.
BoundaryMap glue_maps(const BoundaryMap& a, int i, const BoundaryMap& b, int j);

struct SlitData {
  int original_darts = 0;
  // Path darts in order, and whether the end vertex was merged with boundary j.
  Walk path;
  // Corner pairs swapped, in order of application.
  std::vector<std::pair<Dart, Dart>> swaps;
  // The slit boundary's two arcs: partners of alpha(e_1..e_k) and of
  // e_k..e_1. With the swapped corners these mark the four vertices where
  // the path met the boundaries.
  std::vector<Dart> arc1;
  std::vector<Dart> arc2;
  int boundary_i = -1;
  int boundary_j = -1;
  std::vector<Dart> original_roots;
};

struct SlitResult {
  BoundaryMap bmap;
  SlitData data;
};

// Slits the simple path p, which starts on boundary i and ends on boundary j
// (j = -1: p ends at a vertex off the boundaries). The path doubles into two
// arcs that join the boundaries: the merged boundary has size
// |b_i| + |b_j| + 2|p|. With p empty, boundaries i and j must share a vertex
// `at` (a dart of boundary i ending there is located automatically) and
// merge there. Boundary j is removed from the list; boundary i keeps its
// root. Throws MapError when p touches a boundary in its interior.
SlitResult slit_path(const BoundaryMap& bmap, const Walk& p, int i, int j);
// Exact inverse of slit_path.
BoundaryMap unslit(const SlitResult& s);

nlohmann::ordered_json to_json(const CutResult& cut);

}  // namespace trisurf
