#pragma once

#include <vector>

#include "trisurf/comb_map.hpp"

namespace trisurf {

// A sequence of darts. Dart d runs from vertex(d) to vertex(alpha(d)); a walk
// is closed when consecutive darts chain up and the last returns to the
// start of the first.
using Walk = std::vector<Dart>;

bool is_path(const CombMap& map, const Cells& c, const Walk& w);
bool is_closed_walk(const CombMap& map, const Cells& c, const Walk& w);
// Throws MapError unless w is a nonempty closed walk on the map.
void require_closed_walk(const CombMap& map, const Cells& c, const Walk& w);

// v_0 .. v_l of the walk; empty for an empty walk.
std::vector<int> walk_vertices(const CombMap& map, const Cells& c, const Walk& w);

// Closed walk visiting no vertex twice. The back-and-forth walk (d, alpha(d))
// is not a cycle.
bool is_simple_cycle(const CombMap& map, const Cells& c, const Walk& w);
// Path visiting no vertex twice (the empty path is simple).
bool is_simple_path(const CombMap& map, const Cells& c, const Walk& w);
// No dart is immediately followed by its reversal, cyclically.
bool is_spur_free_cyclic(const CombMap& map, const Walk& w);

Walk reverse_walk(const CombMap& map, const Walk& w);
Walk rotate_walk(const Walk& w, int k);
Walk lex_min_rotation(const Walk& w);
// Smallest rotation of w or of its reversal: one representative per
// unoriented cyclic walk.
Walk canonical_cycle(const CombMap& map, const Walk& w);
Walk concat(const Walk& a, const Walk& b);

// C rotated by `rotation` equals p . gamma^k . tail, with gamma simple and
// tail empty or starting with a dart outside gamma. Throws MapError when the
// first closed sub-walk is a spur (d, alpha(d)).
struct ReducedForm {
  int rotation = 0;
  Walk p;
  Walk gamma;
  int k = 0;
  Walk tail;
};
ReducedForm reduced_form(const CombMap& map, const Cells& c, const Walk& w);
Walk reassemble(const ReducedForm& r);

using SetLength = std::vector<int>;
SetLength set_length(const Walk& w);
enum class SLOrder { Less, EqualSL, Greater };
// Throws DomainError when the lengths differ.
SLOrder compare_sl(const Walk& a, const Walk& b);

// Simple cycles of length <= max_len, one per unoriented cycle, each given
// by canonical_cycle. Sorted by (length, darts).
std::vector<Walk> simple_cycles(const CombMap& map, const Cells& c, int max_len);

}  // namespace trisurf
