#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcslab/graph.hpp"

namespace bcslab {

struct CrosscheckOptions {
  std::vector<int> ks{2, 4};
  std::vector<WitnessKind> kinds{WitnessKind::Subgraph, WitnessKind::Tree, WitnessKind::Path};
  bool split = true;
  bool colorcoding = true;
  bool repsets = true;
  bool algebraic = true;
  int algebraic_trials = 32;
  int ell = 64;
  std::uint64_t seed = 1;
};

/// A deterministic solver that answered differently from the oracle, or any
/// solver that returned an invalid witness or a false positive.
struct Disagreement {
  std::size_t instance = 0;
  int k = 0;
  WitnessKind kind = WitnessKind::Subgraph;
  std::string solver;
  std::string detail;
};

struct SolverTally {
  std::string solver;
  std::uint64_t runs = 0;
  std::uint64_t oracle_yes = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
  std::uint64_t invalid_witnesses = 0;
};

struct CrosscheckReport {
  std::size_t instances = 0;
  std::uint64_t checks = 0;  // (instance, k, kind) triples
  std::uint64_t oracle_yes = 0;
  std::vector<Disagreement> disagreements;
  std::vector<SolverTally> tallies;  // fixed solver order

  std::size_t deterministic_disagreements() const;
  const SolverTally* tally(const std::string& solver) const;
  std::string to_json() const;
};

/// Every applicable solver against the exact oracle. Instances fan out over
/// thread_count() workers; the report is assembled in instance order.
CrosscheckReport crosscheck(const std::vector<RedBlueGraph>& graphs, const CrosscheckOptions& opts = {});

struct BenchSpec {
  std::string algo = "algebraic";  // colorcoding | algebraic | repsets | oracle
  WitnessKind kind = WitnessKind::Path;
  std::vector<int> ks{4, 6, 8};
  int n = 30;
  double p = 0.2;
  int instances = 1;
  int reps = 3;
  std::uint64_t seed = 1;
  int trials = 8;
  int ell = 32;
  bool timing = true;  // false writes 0 for the medians
};

struct BenchRow {
  std::string algo;
  WitnessKind kind = WitnessKind::Path;
  int k = 0;
  int n = 0;
  int m = 0;  // edges summed over the instances
  int reps = 0;
  double median_ms = 0;
};

/// Median wall-clock time per k, summed over the instances of the family.
/// colorcoding runs one DP under a fixed seeded coloring; algebraic runs a
/// decision with exactly `trials` evaluations (no early exit).
std::vector<BenchRow> run_bench(const BenchSpec& spec);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace bcslab
