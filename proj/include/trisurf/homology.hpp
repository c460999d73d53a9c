#pragma once

#include <vector>

#include "trisurf/comb_map.hpp"
#include "trisurf/walks.hpp"

namespace trisurf {

using HomologyVector = std::vector<long>;

// Integer first homology of a closed map, presented through the chords of a
// breadth-first spanning tree. The face-boundary matrix (chords x faces) is
// row-reduced once with a unimodular transform U; the rows of U that end up
// killing every face boundary give a surjection Z^chords -> Z^{2g} whose
// kernel is exactly the span of the faces.
class Homology {
 public:
  explicit Homology(const CombMap& map);

  int rank() const { return rank_; }
  const HomologyVector& dart_vector(Dart d) const { return dart_vec_[d - 1]; }
  bool is_tree_dart(Dart d) const { return tree_[d - 1]; }

  // No closedness check; see MapTopology for the checked entry points.
  HomologyVector class_of(const Walk& w) const;
  static bool is_zero(const HomologyVector& v);

 private:
  int rank_ = 0;
  std::vector<char> tree_;
  std::vector<HomologyVector> dart_vec_;
};

HomologyVector operator+(const HomologyVector& a, const HomologyVector& b);

}  // namespace trisurf
