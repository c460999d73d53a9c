#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trisurf/comb_map.hpp"
#include "trisurf/count_table.hpp"

namespace trisurf {

struct SampleReport {
  int n = 0;
  int g = 0;
  long requested = 0;
  long accepted = 0;
  long rejected_disconnected = 0;
  long rejected_genus = 0;
  std::uint64_t seed = 0;

  long draws() const { return accepted + rejected_disconnected + rejected_genus; }
  double acceptance_rate() const { return draws() ? static_cast<double>(accepted) / draws() : 0.0; }
  void merge(const SampleReport& o);
};

class ExhaustedDraws : public std::runtime_error {
 public:
  explicit ExhaustedDraws(const SampleReport& r);
  SampleReport report;
};

std::uint64_t splitmix64(std::uint64_t x);
// Seed of an independent sub-stream for sample `id` of a run seeded `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id);

// Uniform value in [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);

// Uniform fixed-point-free involution on 6n darts against the triangle
// sigma: the smallest unpaired dart is paired with a uniform choice among
// the other unpaired darts.
CombMap random_gluing(int n, std::mt19937_64& rng);

constexpr long kDefaultMaxDraws = 1'000'000;

struct SampleOutcome {
  std::optional<CombMap> map;
  SampleReport report;
};

// Rejection sampling of a uniform rooted triangulation with 2n faces and
// genus g, rooted at dart 1. The outcome has no map when max_draws ran out.
SampleOutcome sample_uniform(int n, int g, std::uint64_t seed, long max_draws = kDefaultMaxDraws);
// Continues drawing from an existing generator.
SampleOutcome sample_uniform(int n, int g, std::mt19937_64& rng, long max_draws = kDefaultMaxDraws);
// Throws ExhaustedDraws instead of returning an empty outcome.
CombMap sample_or_throw(int n, int g, std::uint64_t seed, long max_draws = kDefaultMaxDraws);

struct ExperimentRow {
  int n = 0;
  int g = 0;
  int sample_id = 0;
  bool sepsys_found = false;
  int sepsys = 0;
  bool simple_found = false;
  int sepsys_simple = 0;
};

struct ExperimentSummary {
  int n = 0;
  int g = 0;
  int conclusive = 0;
  double mean_sepsys = 0;
  int conclusive_simple = 0;
  double mean_sepsys_simple = 0;
};

struct Experiment {
  double theta = 0;
  std::vector<int> n_list;
  int samples = 0;
  int lmax = 0;
  std::uint64_t seed = 0;
  std::vector<ExperimentRow> rows;
  std::vector<ExperimentSummary> summary;
};

// Samples at g = round(theta n) for each n; per-sample seeds derive from
// (seed, n, sample_id) so the output does not depend on `exec`.
Experiment experiment_sepsys(double theta, const std::vector<int>& n_list, int samples, int lmax,
                             std::uint64_t seed, Exec exec = Exec::Serial);

// Config comment line, header, data rows, then "# summary" comment rows.
std::string experiment_csv(const Experiment& e);

}  // namespace trisurf
