#include "bcslab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bcslab/algebraic.hpp"
#include "bcslab/color_coding.hpp"
#include "bcslab/corpus.hpp"
#include "bcslab/oracle.hpp"
#include "bcslab/rep_sets.hpp"
#include "bcslab/split_solver.hpp"

namespace bcslab {

namespace {

const std::vector<std::string> kSolvers{"split", "colorcoding", "repsets", "algebraic"};

std::size_t solver_index(const std::string& name) {
  return static_cast<std::size_t>(std::find(kSolvers.begin(), kSolvers.end(), name) - kSolvers.begin());
}

struct InstanceResult {
  std::vector<Disagreement> disagreements;
  std::vector<SolverTally> tallies;
  std::uint64_t checks = 0;
  std::uint64_t oracle_yes = 0;
};

std::uint64_t instance_seed(std::uint64_t seed, std::size_t instance) {
  return seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(instance) + 1));
}

InstanceResult check_instance(const RedBlueGraph& g, std::size_t index, const CrosscheckOptions& opts) {
  InstanceResult r;
  for (const auto& name : kSolvers) r.tallies.push_back({name});
  const bool is_split = split_partition(g).has_value();

  for (int k : opts.ks)
    for (WitnessKind kind : opts.kinds) {
      ++r.checks;
      const bool truth = oracle_solve(g, k, kind, SolveMode::Exact).has_value();
      if (truth) ++r.oracle_yes;

      auto report = [&](const std::string& solver, std::string detail) {
        r.disagreements.push_back({index, k, kind, solver, std::move(detail)});
      };
      auto record = [&](const std::string& solver, const std::optional<Witness>& w, bool deterministic) {
        SolverTally& t = r.tallies[solver_index(solver)];
        ++t.runs;
        if (truth) ++t.oracle_yes;
        if (w) {
          if (!truth) {
            ++t.false_positives;
            report(solver, "yes but oracle says no");
          }
          const ValidationReport v = validate_witness(g, *w, k);
          if (!v.valid || w->kind != kind) {
            ++t.invalid_witnesses;
            report(solver, "invalid witness: " + v.to_json());
          }
        } else if (truth) {
          ++t.false_negatives;
          if (deterministic) report(solver, "no but oracle says yes");
        }
      };

      if (opts.split && is_split && kind == WitnessKind::Subgraph) record("split", solve_split_ebcs(g, k), true);
      if (opts.colorcoding) record("colorcoding", hash_family_solve(g, k, kind), true);
      if (opts.repsets && kind == WitnessKind::Path) record("repsets", solve_ebp_repsets(g, k), true);
      if (opts.algebraic) {
        AlgebraicOptions ao;
        ao.trials = opts.algebraic_trials;
        ao.ell = opts.ell;
        ao.seed = instance_seed(opts.seed, index);
        const bool yes = randomized_solve(g, k, kind, ao).yes;
        SolverTally& t = r.tallies[solver_index("algebraic")];
        ++t.runs;
        if (truth) ++t.oracle_yes;
        if (yes && !truth) {
          ++t.false_positives;
          report("algebraic", "yes but oracle says no");
        }
        if (!yes && truth) ++t.false_negatives;
      }
    }
  return r;
}

}  // namespace

std::size_t CrosscheckReport::deterministic_disagreements() const {
  return static_cast<std::size_t>(std::count_if(disagreements.begin(), disagreements.end(),
                                                [](const Disagreement& d) { return d.solver != "algebraic"; }));
}

const SolverTally* CrosscheckReport::tally(const std::string& solver) const {
  for (const auto& t : tallies)
    if (t.solver == solver) return &t;
  return nullptr;
}

std::string CrosscheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["instances"] = instances;
  j["checks"] = checks;
  j["oracle_yes"] = oracle_yes;
  j["solvers"] = nlohmann::ordered_json::array();
  for (const auto& t : tallies)
    j["solvers"].push_back({{"solver", t.solver},
                            {"runs", t.runs},
                            {"oracle_yes", t.oracle_yes},
                            {"false_positives", t.false_positives},
                            {"false_negatives", t.false_negatives},
                            {"invalid_witnesses", t.invalid_witnesses}});
  j["disagreements"] = nlohmann::ordered_json::array();
  for (const auto& d : disagreements)
    j["disagreements"].push_back({{"instance", d.instance},
                                  {"k", d.k},
                                  {"kind", std::string(to_string(d.kind))},
                                  {"solver", d.solver},
                                  {"detail", d.detail}});
  return j.dump(2);
}

CrosscheckReport crosscheck(const std::vector<RedBlueGraph>& graphs, const CrosscheckOptions& opts) {
  std::vector<InstanceResult> results(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) { results[i] = check_instance(graphs[i], i, opts); });
  CrosscheckReport rep;
  rep.instances = graphs.size();
  for (const auto& name : kSolvers) rep.tallies.push_back({name});
  for (const auto& r : results) {
    rep.checks += r.checks;
    rep.oracle_yes += r.oracle_yes;
    rep.disagreements.insert(rep.disagreements.end(), r.disagreements.begin(), r.disagreements.end());
    for (std::size_t s = 0; s < kSolvers.size(); ++s) {
      SolverTally& t = rep.tallies[s];
      const SolverTally& x = r.tallies[s];
      t.runs += x.runs;
      t.oracle_yes += x.oracle_yes;
      t.false_positives += x.false_positives;
      t.false_negatives += x.false_negatives;
      t.invalid_witnesses += x.invalid_witnesses;
    }
  }
  return rep;
}

namespace {

std::function<void()> bench_job(const BenchSpec& spec, const RedBlueGraph& g, int k) {
  if (spec.algo == "colorcoding") {
    std::mt19937_64 rng(spec.seed);
    if (spec.kind == WitnessKind::Subgraph) {
      std::uniform_int_distribution<int> label(0, k - 1);
      EdgeColoring sigma;
      for (int e = 0; e < g.num_edges(); ++e) sigma.label.push_back(label(rng));
      return [&g, sigma, k] { (void)colorful_bcs_dp(g, sigma, k); };
    }
    std::uniform_int_distribution<int> label(0, k);
    VertexColoring tau;
    tau.label.push_back(0);
    for (int v = 1; v <= g.num_vertices(); ++v) tau.label.push_back(label(rng));
    if (spec.kind == WitnessKind::Tree) return [&g, tau, k] { (void)colorful_bt_dp(g, tau, k); };
    return [&g, tau, k] { (void)colorful_ebp_dp(g, tau, k); };
  }
  if (spec.algo == "algebraic") {
    const Circuit c = build_circuit(g, k, spec.kind);
    const int k_dim = spec.kind == WitnessKind::Subgraph ? k : k + 1;
    return [c, k_dim, spec] {
      for (int t = 0; t < spec.trials; ++t)
        (void)detect_multilinear(c, k_dim, spec.ell, 1, spec.seed + static_cast<std::uint64_t>(t));
    };
  }
  if (spec.algo == "repsets") {
    if (spec.kind != WitnessKind::Path) throw std::invalid_argument("bench: repsets only solves paths");
    return [&g, k] { (void)solve_ebp_repsets(g, k); };
  }
  if (spec.algo == "oracle") return [&g, k, spec] { (void)oracle_solve(g, k, spec.kind, SolveMode::Exact); };
  throw std::invalid_argument("bench: unknown algo '" + spec.algo + "'");
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  if (spec.reps < 1) throw std::invalid_argument("bench: reps must be positive");
  std::vector<RedBlueGraph> family;
  std::mt19937_64 rng(spec.seed);
  for (int i = 0; i < spec.instances; ++i) family.push_back(random_graph(spec.n, spec.p, rng));
  std::vector<BenchRow> rows;
  if (family.empty()) return rows;
  int m = 0;
  for (const auto& g : family) m += g.num_edges();
  for (int k : spec.ks) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("bench: k must be a positive even integer");
    std::vector<std::function<void()>> jobs;
    for (const auto& g : family) jobs.push_back(bench_job(spec, g, k));
    std::vector<double> times;
    for (int rep = 0; rep < spec.reps; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      for (const auto& job : jobs) job();
      times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    const double median = times.size() % 2 ? times[times.size() / 2]
                                           : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
    rows.push_back({spec.algo, spec.kind, k, spec.n, m, spec.reps, spec.timing ? median : 0.0});
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "algo,kind,k,n,m,reps,median_ms\n";
  for (const auto& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.median_ms);
    out << r.algo << ',' << to_string(r.kind) << ',' << r.k << ',' << r.n << ',' << r.m << ',' << r.reps << ',' << ms
        << '\n';
  }
  return out.str();
}

}  // namespace bcslab
