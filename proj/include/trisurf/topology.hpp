#pragma once

#include <optional>
#include <vector>

#include "trisurf/comb_map.hpp"
#include "trisurf/count_table.hpp"
#include "trisurf/homology.hpp"
#include "trisurf/schema.hpp"
#include "trisurf/walks.hpp"

namespace trisurf {

struct SepsysResult {
  bool found = false;
  int length = 0;
  Walk witness;
  int lmax = 0;
};

// Per-map preprocessing shared by all walk queries; immutable once built.
class MapTopology {
 public:
  explicit MapTopology(const CombMap& map);

  const CombMap& map() const { return map_; }
  const Cells& cell_data() const { return cells_; }
  int genus() const { return genus_; }
  const Homology& homology() const { return homology_; }
  const Schema& schema() const { return schema_; }

  // All walk queries throw MapError unless the walk is closed on the map.
  HomologyVector homology_class(const Walk& w) const;
  bool is_null_homologous(const Walk& w) const;
  bool is_contractible(const Walk& w) const;
  // Free homotopy of unoriented closed walks is the caller's business: this
  // compares the walks as given.
  bool are_freely_homotopic(const Walk& a, const Walk& b) const;
  bool is_sncc(const Walk& w) const;

  // Shortest null-homologous non-contractible closed walk of length <= lmax.
  SepsysResult sepsys_search(int lmax, Exec exec = Exec::Serial) const;
  // The same over simple cycles only.
  SepsysResult sepsys_simple(int lmax) const;

  // Shortest SNCC through `base` of length <= bound, if any.
  std::optional<Walk> shortest_sncc_at(int base, int bound) const;

 private:
  CombMap map_;
  Cells cells_;
  int genus_;
  Homology homology_;
  Schema schema_;
};

}  // namespace trisurf
