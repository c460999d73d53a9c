#pragma once

#include <string>
#include <vector>

#include "trisurf/errors.hpp"

namespace trisurf {

// Darts are 1-indexed. Permutations are stored as image arrays where
// element d-1 holds the image of dart d.
using Dart = int;

// A rooted map given by its face rotation `sigma` and edge involution `alpha`.
//
// Vertex convention: vertices are the cycles of phi = sigma∘alpha (apply
// alpha, then sigma). Dart d is an oriented edge going from the vertex of d
// to the vertex of alpha(d); with this convention the sigma-cycles are
// closed walks.
class CombMap {
 public:
  CombMap() = default;
  CombMap(std::vector<Dart> sigma, std::vector<Dart> alpha, Dart root);

  int n_darts() const { return static_cast<int>(sigma_.size()); }
  Dart sigma(Dart d) const { return sigma_[d - 1]; }
  Dart alpha(Dart d) const { return alpha_[d - 1]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d - 1] - 1]; }
  Dart root() const { return root_; }

  const std::vector<Dart>& sigma_images() const { return sigma_; }
  const std::vector<Dart>& alpha_images() const { return alpha_; }

  CombMap with_root(Dart root) const { return {sigma_, alpha_, root}; }

  bool operator==(const CombMap&) const = default;

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> alpha_;
  Dart root_ = 1;
};

// Cycle decompositions of sigma (faces) and phi (vertices). Cycle ids follow
// the order of their smallest dart; each cycle is listed starting from it.
struct Cells {
  std::vector<int> face_of;
  std::vector<int> vertex_of;
  std::vector<std::vector<Dart>> faces;
  std::vector<std::vector<Dart>> vertices;

  int face(Dart d) const { return face_of[d - 1]; }
  int vertex(Dart d) const { return vertex_of[d - 1]; }
  int n_faces() const { return static_cast<int>(faces.size()); }
  int n_vertices() const { return static_cast<int>(vertices.size()); }
};

Cells cells(const CombMap& map);

// Cycles of an arbitrary permutation given as a 1-indexed image array.
std::vector<std::vector<Dart>> permutation_cycles(const std::vector<Dart>& images);

struct Violation {
  std::string message;
  std::vector<Dart> darts;
};

// Every violated invariant; an empty result means the map is valid. A
// triangulation additionally requires all sigma-cycles to have length 3.
std::vector<Violation> validate(const CombMap& map, bool require_triangles = true);

// Throws MapError carrying the first violation.
void require_valid(const CombMap& map, bool require_triangles = true);

struct EulerData {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
  bool operator==(const EulerData&) const = default;
};

// Requires a connected map with consistent permutations (faces of any degree).
EulerData euler_data(const CombMap& map);

// Connected components as sorted dart lists, ordered by smallest dart.
std::vector<std::vector<Dart>> connected_components(const CombMap& map);

// Relabels dart d as new_label[d-1]; new_label must be a permutation.
CombMap relabel(const CombMap& map, const std::vector<Dart>& new_label);

// Breadth-first relabeling from the root. Whenever a dart is reached for the
// first time its whole sigma-cycle receives consecutive labels, so the root
// is dart 1 and faces occupy contiguous label blocks. Two rooted maps are
// isomorphic iff their canonical forms are equal.
CombMap canonical_form(const CombMap& map);

// The labels used by canonical_form: result[d-1] is the new label of d.
std::vector<Dart> canonical_labels(const CombMap& map);

// Sub-map on a union of components; darts are renumbered in the given order.
// `root` is a dart of the original map inside `darts`.
CombMap restrict_to(const CombMap& map, const std::vector<Dart>& darts, Dart root);

// Darts of `b` are shifted by a.n_darts(); the root of `a` is kept.
CombMap disjoint_union(const CombMap& a, const CombMap& b);

// A map whose designated faces are boundaries. Each boundary is identified
// by its root dart; the boundary face is the sigma-cycle of that dart.
struct BoundaryMap {
  CombMap map;
  std::vector<Dart> boundary_roots;

  bool operator==(const BoundaryMap&) const = default;
};

// Validity of a triangulation with boundaries: consistent permutations,
// connectivity, distinct simple boundary faces that share no vertex, and
// degree 3 for every other face.
std::vector<Violation> validate(const BoundaryMap& bmap);

struct BoundaryProfile {
  std::vector<int> lengths;
  int internal_faces = 0;
  int genus = 0;
};

// Throws MapError naming the offending vertex when boundaries are not
// simple or touch.
BoundaryProfile boundary_profile(const BoundaryMap& bmap);

BoundaryMap canonical_form(const BoundaryMap& bmap);

// Sigma-cycle starting at d.
std::vector<Dart> face_darts(const CombMap& map, Dart d);

std::vector<Dart> inverse_permutation(const std::vector<Dart>& images);

}  // namespace trisurf
