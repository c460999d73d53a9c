// trisurf: command-line front end.
//
// Exit status: 0 success, 1 usage or domain error, 2 verification failure.

#include <omp.h>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trisurf/comb_map.hpp"
#include "trisurf/count_table.hpp"
#include "trisurf/eights.hpp"
#include "trisurf/errors.hpp"
#include "trisurf/map_io.hpp"
#include "trisurf/oracle.hpp"
#include "trisurf/sampler.hpp"
#include "trisurf/surgery.hpp"
#include "trisurf/topology.hpp"

using namespace trisurf;
using nlohmann::ordered_json;

namespace {

constexpr int kVerifyFailed = 2;

struct Options {
  int n = -1;
  int g = -1;
  int big_n = 0;
  double theta = 0.25;
  std::vector<int> n_list;
  int lmax = 10;
  int K = 100;
  int samples = 0;
  std::string seed = "1";
  int jobs = 1;
  std::string format = "csv";
  std::string out;
  std::string map_file;
  std::string cycle;
};

std::uint64_t parse_seed(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') throw DomainError("--seed: expected a decimal or 0x-prefixed hex integer, got '" + s + "'");
  return v;
}

Exec exec_for(const Options& o) { return o.jobs > 1 ? Exec::Parallel : Exec::Serial; }

void require_theta(double theta) {
  if (!(theta > 0 && theta < 0.5)) throw DomainError("--theta must lie in (0, 1/2)");
}

void require_positive(int v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be at least 1");
}

std::vector<int> parse_darts(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw DomainError("--cycle: bad dart '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string echo(const std::string& cmd, const Options& o, std::initializer_list<const char*> keys) {
  std::ostringstream s;
  s << "# trisurf " << cmd;
  for (const char* k : keys) {
    const std::string key(k);
    s << ' ' << key << '=';
    if (key == "n") s << o.n;
    else if (key == "g") s << o.g;
    else if (key == "N") s << o.big_n;
    else if (key == "theta") s << o.theta;
    else if (key == "lmax") s << o.lmax;
    else if (key == "K") s << o.K;
    else if (key == "samples") s << o.samples;
    else if (key == "seed") s << parse_seed(o.seed);
    else if (key == "map") s << o.map_file;
    else if (key == "n_list")
      for (std::size_t i = 0; i < o.n_list.size(); ++i) s << (i ? "," : "") << o.n_list[i];
  }
  s << '\n';
  return s.str();
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.n < 0) throw DomainError("count: n must be non-negative");
  out << tau(o.n, o.g).get_str() << '\n';
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.big_n < 0) throw DomainError("table: N must be non-negative");
  const CountTable t(o.big_n, -1, exec_for(o));
  if (o.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= o.big_n; ++n)
      for (int g = 0; g <= genus_cap(n); ++g) rows.push_back({{"n", n}, {"g", g}, {"tau", t.tau(n, g).get_str()}});
    out << rows.dump() << '\n';
    return 0;
  }
  out << echo("table", o, {"N"});
  out << "n,g,tau\n";
  for (int n = 0; n <= o.big_n; ++n)
    for (int g = 0; g <= genus_cap(n); ++g) out << n << ',' << g << ',' << t.tau(n, g).get_str() << '\n';
  return 0;
}

int cmd_ratio(const Options& o, std::ostream& out) {
  require_theta(o.theta);
  if (o.n_list.empty()) throw DomainError("ratio: --n needs at least one size");
  int max_n = 0;
  for (int n : o.n_list) {
    require_positive(n, "--n");
    max_n = std::max(max_n, n);
  }
  if (o.K < 0) throw DomainError("--K must be non-negative");
  const CountTable t(std::max(max_n, o.K), -1, exec_for(o));
  const auto rep = psi_consistency_report(t, o.theta, o.n_list, o.K);
  out << std::setprecision(12);
  if (o.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"theta", r.theta}, {"n", r.n}, {"g", r.g}, {"lambda", r.lambda}, {"psi_direct", r.psi_direct},
                      {"psi_formula", r.psi_formula}, {"f_est", r.f_est}, {"gap", r.gap}});
    ordered_json j{{"rows", rows}};
    if (rep.exp_minus_fprime) j["exp_minus_fprime"] = *rep.exp_minus_fprime;
    out << j.dump() << '\n';
    return 0;
  }
  out << echo("ratio", o, {"theta", "n_list", "K"});
  out << "theta,n,g,lambda,psi_direct,psi_formula,f_est,gap\n";
  for (const auto& r : rep.rows)
    out << r.theta << ',' << r.n << ',' << r.g << ',' << r.lambda << ',' << r.psi_direct << ',' << r.psi_formula << ','
        << r.f_est << ',' << r.gap << '\n';
  if (rep.exp_minus_fprime) out << "# exp_minus_fprime=" << *rep.exp_minus_fprime << '\n';
  return 0;
}

int cmd_oracle_verify(const Options& o, std::ostream& out) {
  if (o.big_n < 1 || o.big_n > kOracleMaxN) throw RangeRefusal("oracle-verify: N must lie in 1..3");
  bool ok = true;
  for (int n = 1; n <= o.big_n; ++n) {
    const GluingCensus c = census(n, exec_for(o));
    for (int g = 0; g <= genus_cap(n); ++g) {
      const mpz_class oracle = c.rooted(g), rec = tau(n, g);
      const bool row_ok = oracle == rec;
      ok = ok && row_ok;
      out << n << ' ' << g << ' ' << oracle.get_str() << ' ' << rec.get_str() << ' ' << (row_ok ? "OK" : "FAIL") << '\n';
    }
  }
  return ok ? 0 : kVerifyFailed;
}

int cmd_sample(const Options& o, std::ostream& out) {
  require_positive(o.n, "--n");
  if (o.g < 0) throw DomainError("--g must be non-negative");
  const int count = std::max(o.samples, 1);
  const std::uint64_t seed = parse_seed(o.seed);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = o.samples > 0 ? derive_seed(seed, i) : seed;
    out << dump_map(sample_or_throw(o.n, o.g, s)) << '\n';
  }
  return 0;
}

int cmd_sepsys(const Options& o, std::ostream& out) {
  require_positive(o.lmax, "--lmax");
  const BoundaryMap b = read_map_file(o.map_file);
  require_valid(b.map);
  const MapTopology t(b.map);
  const SepsysResult r = t.sepsys_search(o.lmax, exec_for(o));
  ordered_json j;
  j["status"] = r.found ? "found" : "inconclusive";
  j["length"] = r.found ? ordered_json(r.length) : ordered_json(nullptr);
  j["witness"] = r.witness;
  j["Lmax"] = o.lmax;
  out << j.dump() << '\n';
  return 0;
}

int cmd_eights(const Options& o, std::ostream& out) {
  require_positive(o.lmax, "--lmax");
  const BoundaryMap b = read_map_file(o.map_file);
  require_valid(b.map);
  const MapTopology t(b.map);
  find_eights(
      t, o.lmax,
      [&](const EightConfig& e) {
        out << to_json(e).dump() << '\n';
        return true;
      },
      exec_for(o));
  return 0;
}

int cmd_verify_eights(const Options& o, std::ostream& out) {
  require_positive(o.lmax, "--lmax");
  std::vector<CombMap> maps;
  if (!o.map_file.empty()) {
    const BoundaryMap b = read_map_file(o.map_file);
    require_valid(b.map);
    maps.push_back(b.map);
  } else {
    require_positive(o.n, "--n");
    if (o.g < 0) throw DomainError("--g must be non-negative");
    if (o.samples > 0) {
      const std::uint64_t seed = parse_seed(o.seed);
      for (int i = 0; i < o.samples; ++i) maps.push_back(sample_or_throw(o.n, o.g, derive_seed(seed, i)));
    } else {
      if (o.n > kOracleMaxN) throw RangeRefusal("verify-eights: exhaustive sweeps need n <= 3; pass --samples");
      maps = enumerate_rooted(o.n, o.g);
    }
  }
  out << echo("verify-eights", o, {"n", "g", "lmax", "samples", "seed", "map"});
  out << "map_id,status,sepsys,witness_variant,witness_length\n";
  std::vector<TheoremCheck> checks(maps.size());
  const Exec inner = maps.size() > 1 ? Exec::Serial : exec_for(o);
#pragma omp parallel for schedule(dynamic) if (exec_for(o) == Exec::Parallel && maps.size() > 1)
  for (std::size_t i = 0; i < maps.size(); ++i) checks[i] = verify_theorem_eights(MapTopology(maps[i]), o.lmax, inner);
  int counts[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    ++counts[static_cast<int>(c.status)];
    out << i << ',' << status_name(c.status) << ',';
    if (c.sepsys.found) out << c.sepsys.length;
    out << ',';
    if (c.witness) out << variant_name(c.witness->variant) << ',' << c.witness->total_length();
    else out << ',';
    out << '\n';
  }
  out << "# summary verified=" << counts[0] << " vacuous=" << counts[1] << " inconclusive=" << counts[2]
      << " counterexample=" << counts[3] << '\n';
  return counts[static_cast<int>(TheoremStatus::Counterexample)] ? kVerifyFailed : 0;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  require_theta(o.theta);
  require_positive(o.samples, "--samples");
  require_positive(o.lmax, "--lmax");
  if (o.n_list.empty()) throw DomainError("experiment: --n needs at least one size");
  const Experiment e = experiment_sepsys(o.theta, o.n_list, o.samples, o.lmax, parse_seed(o.seed), exec_for(o));
  out << experiment_csv(e);
  return 0;
}

int cmd_cut(const Options& o, std::ostream& out) {
  const BoundaryMap b = read_map_file(o.map_file);
  const CutResult cut = cut_simple_cycle(b, parse_darts(o.cycle));
  out << to_json(cut).dump() << '\n';
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const BoundaryMap b = read_map_file(o.map_file);
  const auto v = b.boundary_roots.empty() ? validate(b.map) : validate(b);
  if (v.empty()) {
    out << "valid\n";
    return 0;
  }
  for (const auto& x : v) out << "invalid: " << x.message << '\n';
  return kVerifyFailed;
}

int cmd_canonical(const Options& o, std::ostream& out) {
  const BoundaryMap b = read_map_file(o.map_file);
  out << dump_map(canonical_form(b)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trisurf: triangulated surfaces, enumeration and topology"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--out", o.out, "write output to PATH");
  };
  auto* count = app.add_subcommand("count", "exact tau(n,g)");
  count->add_option("n", o.n)->required();
  count->add_option("g", o.g)->required();
  add_common(count);

  auto* table = app.add_subcommand("table", "all tau(n,g) for n <= N");
  table->add_option("N", o.big_n)->required();
  table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  add_common(table);

  auto* ratio = app.add_subcommand("ratio", "size and genus ratio estimates");
  ratio->add_option("--theta", o.theta);
  ratio->add_option("--n,--n-list", o.n_list)->delimiter(',')->required();
  ratio->add_option("--K", o.K);
  ratio->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  add_common(ratio);

  auto* oracle = app.add_subcommand("oracle-verify", "exhaustive gluing counts against the recurrence");
  oracle->add_option("N", o.big_n)->required();
  add_common(oracle);

  auto* sample = app.add_subcommand("sample", "uniform random triangulations, one map per line");
  sample->add_option("--n", o.n)->required();
  sample->add_option("--g", o.g)->required();
  sample->add_option("--seed", o.seed);
  sample->add_option("--samples", o.samples, "number of maps (per-sample derived seeds)");
  add_common(sample);

  auto* sepsys = app.add_subcommand("sepsys", "shortest separating non-contractible closed walk");
  sepsys->add_option("map", o.map_file)->required();
  sepsys->add_option("--lmax", o.lmax);
  add_common(sepsys);

  auto* eights = app.add_subcommand("eights", "simple SNCCs, thin and fat eights, one JSON line each");
  eights->add_option("map", o.map_file)->required();
  eights->add_option("--lmax", o.lmax);
  add_common(eights);

  auto* verify = app.add_subcommand("verify-eights", "check that every separating systole is bounded by an eight");
  verify->add_option("map", o.map_file);
  verify->add_option("--n", o.n);
  verify->add_option("--g", o.g);
  verify->add_option("--lmax", o.lmax);
  verify->add_option("--samples", o.samples, "sample this many maps instead of enumerating");
  verify->add_option("--seed", o.seed);
  add_common(verify);

  auto* experiment = app.add_subcommand("experiment", "sampling experiments");
  auto* exp_sepsys = experiment->add_subcommand("sepsys", "separating systoles at g = round(theta n)");
  experiment->require_subcommand(1);
  exp_sepsys->add_option("--theta", o.theta);
  exp_sepsys->add_option("--n,--n-list", o.n_list)->delimiter(',')->required();
  exp_sepsys->add_option("--samples", o.samples)->required();
  exp_sepsys->add_option("--lmax", o.lmax);
  exp_sepsys->add_option("--seed", o.seed);
  add_common(exp_sepsys);

  auto* cut = app.add_subcommand("cut", "cut a map along a simple cycle");
  cut->add_option("map", o.map_file)->required();
  cut->add_option("--cycle", o.cycle, "comma-separated darts")->required();
  add_common(cut);

  auto* val = app.add_subcommand("validate", "check map invariants");
  val->add_option("map", o.map_file)->required();
  add_common(val);

  auto* canon = app.add_subcommand("canonical", "canonical relabeling from the root");
  canon->add_option("map", o.map_file)->required();
  add_common(canon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  omp_set_num_threads(o.jobs);
  std::ofstream file;
  std::ostringstream buffer;
  try {
    int rc = 0;
    if (*count) rc = cmd_count(o, buffer);
    else if (*table) rc = cmd_table(o, buffer);
    else if (*ratio) rc = cmd_ratio(o, buffer);
    else if (*oracle) rc = cmd_oracle_verify(o, buffer);
    else if (*sample) rc = cmd_sample(o, buffer);
    else if (*sepsys) rc = cmd_sepsys(o, buffer);
    else if (*eights) rc = cmd_eights(o, buffer);
    else if (*verify) rc = cmd_verify_eights(o, buffer);
    else if (*exp_sepsys) rc = cmd_experiment(o, buffer);
    else if (*cut) rc = cmd_cut(o, buffer);
    else if (*val) rc = cmd_validate(o, buffer);
    else if (*canon) rc = cmd_canonical(o, buffer);
    if (o.out.empty()) {
      std::cout << buffer.str();
    } else {
      file.open(o.out);
      if (!file) throw DomainError("cannot write " + o.out);
      file << buffer.str();
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
