#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "trisurf/topology.hpp"

namespace trisurf {

enum class EightVariant { SimpleSNCC, ThinEight, FatEight };

// SimpleSNCC: c1 is the cycle. ThinEight: (c1, c2, p) with p running from c1
// to c2; p is empty in the tangential case. FatEight: c1 is c and p the
// chord; in the transverse case p is a second simple cycle through the
// single shared vertex.
struct EightConfig {
  EightVariant variant = EightVariant::SimpleSNCC;
  Walk c1;
  Walk c2;
  Walk p;

  int total_length() const { return static_cast<int>(c1.size() + c2.size() + p.size()); }
  bool operator==(const EightConfig&) const = default;
};

std::string variant_name(EightVariant v);
nlohmann::ordered_json to_json(const EightConfig& e);

enum class EightClause {
  None,
  NotSimple,        // a cycle or the path is not simple
  Separating,       // a cycle is null-homologous
  Homotopic,        // the two cycles are freely homotopic
  Intersect,        // the cycles meet (beyond the single-vertex special case)
  Transverse,       // single-vertex meeting with alternating darts (a fat eight)
  Tangential,       // single-vertex meeting without alternation (a thin eight)
  PathEndpoints,    // the path does not start/end where required
  PathMeetsCycles,  // the path shares other vertices or edges with the cycles
  Contractible1,    // p r^-1 is contractible
  Contractible2,    // q p^-1 is contractible
  NotSNCC,          // a simple cycle that is not separating and non-contractible
};

struct Recognition {
  bool ok = false;
  EightClause clause = EightClause::None;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Throws MapError for malformed walks: cycles must be closed walks and p a
// walk (possibly empty for the thin eight).
Recognition is_thin_eight(const MapTopology& t, const Walk& c1, const Walk& c2, const Walk& p);
// p must be nonempty with both endpoints on c (else MapError). A closed p
// through a vertex of c is the two-cycle special case.
Recognition is_fat_eight(const MapTopology& t, const Walk& c, const Walk& p);
Recognition is_simple_sncc(const MapTopology& t, const Walk& c);
Recognition recognize(const MapTopology& t, const EightConfig& e);

// Whether, around the single vertex shared by two simple cycles, their darts
// alternate. Throws MapError unless they share exactly one vertex and no edge.
bool alternate_at_shared_vertex(const MapTopology& t, const Walk& c1, const Walk& c2);

// Returning false stops the search.
using EightSink = std::function<bool(const EightConfig&)>;

// Every config with total length <= lmax, in order of (total length,
// variant, c1, c2, p). Cycles are in canonical_cycle form; each thin pair is
// listed once with c1 < c2, each fat chord once in its smaller orientation.
void find_eights(const MapTopology& t, int lmax, const EightSink& sink, Exec exec = Exec::Serial);
std::vector<EightConfig> find_eights(const MapTopology& t, int lmax, Exec exec = Exec::Serial);

enum class TheoremStatus { Verified, VacuousNoSNCC, Inconclusive, Counterexample };
std::string status_name(TheoremStatus s);

struct TheoremCheck {
  TheoremStatus status = TheoremStatus::Inconclusive;
  int lmax = 0;
  SepsysResult sepsys;
  std::optional<EightConfig> witness;
};

// Vacuous on genus <= 1. Otherwise runs sepsys_search(lmax); when it finds
// L, looks for a config of total length <= L.
TheoremCheck verify_theorem_eights(const MapTopology& t, int lmax, Exec exec = Exec::Serial);

}  // namespace trisurf
