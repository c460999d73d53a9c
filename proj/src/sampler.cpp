#include "trisurf/sampler.hpp"

#include <sstream>

#include "trisurf/errors.hpp"
#include "trisurf/oracle.hpp"
#include "trisurf/topology.hpp"

namespace trisurf {

void SampleReport::merge(const SampleReport& o) {
  requested += o.requested;
  accepted += o.accepted;
  rejected_disconnected += o.rejected_disconnected;
  rejected_genus += o.rejected_genus;
}

ExhaustedDraws::ExhaustedDraws(const SampleReport& r)
    : std::runtime_error("sampler exhausted " + std::to_string(r.draws()) + " draws at n=" + std::to_string(r.n) +
                         ", g=" + std::to_string(r.g)),
      report(r) {}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) { return splitmix64(splitmix64(seed) ^ id); }

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

CombMap random_gluing(int n, std::mt19937_64& rng) {
  const int darts = 6 * n;
  std::vector<Dart> free(darts);
  for (int i = 0; i < darts; ++i) free[i] = i + 1;
  std::vector<Dart> alpha(darts, 0);
  while (!free.empty()) {
    const Dart d = free.front();
    const std::size_t j = 1 + bounded(rng, free.size() - 1);
    const Dart e = free[j];
    alpha[d - 1] = e;
    alpha[e - 1] = d;
    free.erase(free.begin() + j);
    free.erase(free.begin());
  }
  return {triangle_sigma(2 * n), std::move(alpha), 1};
}

SampleOutcome sample_uniform(int n, int g, std::mt19937_64& rng, long max_draws) {
  if (n < 1) throw DomainError("sample_uniform: n must be at least 1");
  // genera above (n+1)/2 have no maps; they are drawn anyway and exhaust
  if (g < 0) throw DomainError("sample_uniform: g must be non-negative");
  SampleOutcome out;
  out.report.n = n;
  out.report.g = g;
  out.report.requested = 1;
  while (out.report.draws() < max_draws) {
    CombMap m = random_gluing(n, rng);
    if (connected_components(m).size() != 1) {
      ++out.report.rejected_disconnected;
      continue;
    }
    if (euler_data(m).genus != g) {
      ++out.report.rejected_genus;
      continue;
    }
    ++out.report.accepted;
    out.map = std::move(m);
    break;
  }
  return out;
}

SampleOutcome sample_uniform(int n, int g, std::uint64_t seed, long max_draws) {
  std::mt19937_64 rng(seed);
  SampleOutcome out = sample_uniform(n, g, rng, max_draws);
  out.report.seed = seed;
  return out;
}

CombMap sample_or_throw(int n, int g, std::uint64_t seed, long max_draws) {
  SampleOutcome out = sample_uniform(n, g, seed, max_draws);
  if (!out.map) throw ExhaustedDraws(out.report);
  return *out.map;
}

Experiment experiment_sepsys(double theta, const std::vector<int>& n_list, int samples, int lmax,
                             std::uint64_t seed, Exec exec) {
  Experiment e{theta, n_list, samples, lmax, seed, {}, {}};
  for (int n : n_list) {
    const int g = genus_for(theta, n);
    if (g < 0 || g > genus_cap(n)) throw DomainError("experiment: g = round(theta n) exceeds (n+1)/2 at n=" + std::to_string(n));
  }
  struct Job {
    int n, g, id;
  };
  std::vector<Job> jobs;
  for (int n : n_list)
    for (int s = 0; s < samples; ++s) jobs.push_back({n, genus_for(theta, n), s});
  std::vector<ExperimentRow> rows(jobs.size());
  std::vector<std::string> errors(jobs.size());
  auto run = [&](std::size_t i) {
    const Job& j = jobs[i];
    try {
      const CombMap m = sample_or_throw(j.n, j.g, derive_seed(derive_seed(seed, j.n), j.id));
      const MapTopology topo(m);
      const SepsysResult r = topo.sepsys_search(lmax);
      const SepsysResult rs = topo.sepsys_simple(lmax);
      rows[i] = {j.n, j.g, j.id, r.found, r.length, rs.found, rs.length};
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < jobs.size(); ++i) run(i);
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) run(i);
  }
  for (const auto& msg : errors)
    if (!msg.empty()) throw DomainError(msg);
  e.rows = std::move(rows);
  for (int n : n_list) {
    ExperimentSummary s{n, genus_for(theta, n)};
    double sum = 0, sum_simple = 0;
    for (const auto& r : e.rows) {
      if (r.n != n) continue;
      if (r.sepsys_found) {
        ++s.conclusive;
        sum += r.sepsys;
      }
      if (r.simple_found) {
        ++s.conclusive_simple;
        sum_simple += r.sepsys_simple;
      }
    }
    s.mean_sepsys = s.conclusive ? sum / s.conclusive : 0.0;
    s.mean_sepsys_simple = s.conclusive_simple ? sum_simple / s.conclusive_simple : 0.0;
    e.summary.push_back(s);
  }
  return e;
}

std::string experiment_csv(const Experiment& e) {
  std::ostringstream out;
  out << "# experiment sepsys theta=" << e.theta << " n_list=";
  for (std::size_t i = 0; i < e.n_list.size(); ++i) out << (i ? "," : "") << e.n_list[i];
  out << " samples=" << e.samples << " lmax=" << e.lmax << " seed=" << e.seed << '\n';
  out << "n,g,sample_id,sepsys_status,sepsys,sepsys_simple_status,sepsys_simple\n";
  for (const auto& r : e.rows) {
    out << r.n << ',' << r.g << ',' << r.sample_id << ',' << (r.sepsys_found ? "found" : "inconclusive") << ',';
    if (r.sepsys_found) out << r.sepsys;
    out << ',' << (r.simple_found ? "found" : "inconclusive") << ',';
    if (r.simple_found) out << r.sepsys_simple;
    out << '\n';
  }
  for (const auto& s : e.summary) {
    out << "# summary n=" << s.n << " g=" << s.g << " conclusive=" << s.conclusive << " mean_sepsys=" << s.mean_sepsys
        << " conclusive_simple=" << s.conclusive_simple << " mean_sepsys_simple=" << s.mean_sepsys_simple << '\n';
  }
  return out.str();
}

}  // namespace trisurf
