#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "trisurf/comb_map.hpp"
#include "trisurf/count_table.hpp"

namespace trisurf {

// sigma = (1 2 3)(4 5 6)... on 3*faces darts.
std::vector<Dart> triangle_sigma(int faces);

// Counts of fixed-point-free involutions alpha against the fixed triangle
// sigma on 6n darts, split by connectivity and genus.
struct GluingCensus {
  int n = 0;
  std::vector<long> counts_by_genus;
  long disconnected = 0;

  long total() const;
  // 6n * N / ((2n)! 3^{2n}); throws MapError if the division is inexact.
  mpz_class rooted(int g) const;
  bool divisible(int g) const;
};

constexpr int kOracleMaxN = 3;

// Refuses n outside [1, 3] with RangeRefusal.
GluingCensus census(int n, Exec exec = Exec::Parallel);

using MapSink = std::function<void(const CombMap&)>;

// Every rooted triangulation with 2n faces and genus g exactly once, each in
// canonical form. Maps are produced by orderly generation: darts are matched
// in label order and a dart may only be paired with an unmatched dart of an
// already reached face or with the first dart of the next new face, which
// yields exactly the canonically labeled maps.
void enumerate_rooted(int n, int g, const MapSink& sink);
std::vector<CombMap> enumerate_rooted(int n, int g);

// Reference implementation: canonical forms of all labeled gluings,
// deduplicated. Intended for n <= 2.
std::vector<CombMap> enumerate_rooted_bruteforce(int n, int g);

constexpr int kBoundaryCensusMaxDarts = 18;

struct BoundaryCensus {
  long labeled = 0;
  // Rooted objects: one root dart on each boundary face, boundaries
  // distinguishable by position. With no boundaries the whole map is rooted.
  mpz_class rooted = 0;
};

// Triangulations of genus g with m internal triangles and boundaries of the
// given sizes, counted by exhaustive gluing. Odd dart totals give zero.
BoundaryCensus census_with_boundaries(int m, int g, const std::vector<int>& profile,
                                      Exec exec = Exec::Parallel);

// (3m+3p)^{k-1} tau((m+p)/2, g) for k >= 1.
mpz_class filling_bound(int m, int g, const std::vector<int>& profile);

}  // namespace trisurf
