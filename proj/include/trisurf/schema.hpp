#pragma once

#include <vector>

#include "trisurf/comb_map.hpp"
#include "trisurf/surface_group.hpp"
#include "trisurf/walks.hpp"

namespace trisurf {

// Presentation of the fundamental group of a closed map in canonical form.
//
// A depth-first spanning tree is contracted and a breadth-first spanning
// tree of the dual, using only non-tree edges, is deleted face by face from
// the leaves in. The 2g remaining edges generate; the root face yields a
// single relator of length 4g, which standard moves (each a free-group
// automorphism) bring to [a_1,b_1]...[a_g,b_g]. Every dart receives the
// image of its edge word under the composite automorphism.
class Schema {
 public:
  explicit Schema(const CombMap& map);

  int genus() const { return group_.genus(); }
  const SurfaceGroup& group() const { return group_; }
  const Word& relator() const { return group_.relator(); }
  const Word& dart_word(Dart d) const { return dart_word_[d - 1]; }
  // Relator read off the root face before normalization, over the 2g
  // leftover edges (letter i+1 is leftover edge i).
  const Word& raw_relator() const { return raw_relator_; }

  // Concatenated, freely reduced.
  Word word_of(const Walk& w) const;

 private:
  SurfaceGroup group_{0};
  Word raw_relator_;
  std::vector<Word> dart_word_;
};

}  // namespace trisurf
