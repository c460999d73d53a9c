#pragma once

#include <array>
#include <unordered_map>
#include <vector>

namespace trisurf {

// Letters are nonzero integers; -x is the inverse of x. For the surface
// group of genus g, a_k = 2k+1 and b_k = 2k+2 for k = 0..g-1.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);
// Free reduction followed by cancelling inverse letters at the two ends.
Word cyclic_reduce(const Word& w);
bool is_rotation_of(const Word& a, const Word& b);

// <a_1, b_1, ..., a_g, b_g | [a_1,b_1]...[a_g,b_g]>.
class SurfaceGroup {
 public:
  explicit SurfaceGroup(int genus);

  int genus() const { return genus_; }
  const Word& relator() const { return relator_; }
  static int a(int k) { return 2 * k + 1; }
  static int b(int k) { return 2 * k + 2; }

  // Dehn's algorithm (genus >= 2): free reduction plus replacement of any
  // subword forming more than half of a cyclic conjugate of the relator or
  // its inverse by the inverse of the complementary part.
  Word dehn_reduce(const Word& w) const;
  // The same with subwords allowed to wrap around; returns a cyclically
  // reduced representative of the conjugacy class.
  Word dehn_reduce_cyclic(const Word& w) const;

  // Word problem. Genus 0 is trivial, genus 1 is decided by abelianization.
  bool is_trivial(const Word& w) const;
  // Conjugacy. After cyclic Dehn reduction, conjugate words either agree up
  // to rotation or are related through a one-layer annular diagram, whose
  // connecting pieces have length at most one for this relator; both cases
  // are checked exhaustively.
  bool are_conjugate(const Word& u, const Word& v) const;

  std::vector<long> abelianize(const Word& w) const;

 private:
  // Longest match of w at position i (cyclically when `wrap`) against the
  // cyclic relator or its inverse; returns length and the complement.
  int match_at(const Word& w, std::size_t i, bool wrap, Word* complement) const;

  int genus_;
  Word relator_;
  std::array<Word, 2> cyclic_;
  // (x, y) -> which cyclic word and offset of x; each adjacent pair occurs
  // exactly once in the relator and its inverse.
  std::unordered_map<long, std::pair<int, int>> pair_index_;
};

}  // namespace trisurf
