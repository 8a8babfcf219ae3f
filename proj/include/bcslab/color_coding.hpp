#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bcslab/graph.hpp"

namespace bcslab {

/// Label per edge (index e) in 0..k-1.
struct EdgeColoring {
  std::vector<int> label;
};

/// Label per vertex, slot v for vertex v (slot 0 unused), in 0..k.
struct VertexColoring {
  std::vector<int> label;
};

/// Result of one colorful DP run. `entries` is the number of true table
/// entries, exposed so callers can check it against the m*k^2*2^k bound.
struct ColorfulResult {
  std::optional<Witness> witness;
  std::uint64_t entries = 0;
};

/// Connected, balanced, [k]-edge-colorful subgraph with k edges.
ColorfulResult colorful_bcs_dp(const RedBlueGraph& g, const EdgeColoring& sigma, int k);

/// Balanced tree with k edges whose k+1 vertices use every label of [k+1].
ColorfulResult colorful_bt_dp(const RedBlueGraph& g, const VertexColoring& tau, int k);

/// Balanced path with k edges whose k+1 vertices use every label of [k+1].
ColorfulResult colorful_ebp_dp(const RedBlueGraph& g, const VertexColoring& tau, int k);

/// Monte Carlo driver: ceil(e^p * ln(1/delta)) uniform colorings, p = k for
/// subgraphs (edge labels) and k+1 for trees and paths (vertex labels).
/// Trial i draws from mt19937_64 seeded with (seed, i).
std::optional<Witness> random_coloring_driver(const RedBlueGraph& g, int k, WitnessKind kind, double delta,
                                              std::uint64_t seed);

std::uint64_t coloring_trials(int labels, double delta);

class ScaleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Colorings of [universe] with p labels such that every p-subset is rainbow
/// under at least one member. Greedy cover over the explicit p-subsets, so
/// only for small instances: C(universe, p) must stay below about 10^6.
std::vector<std::vector<int>> greedy_hash_family(int universe, int p, std::uint64_t seed = 1);

/// Runs the colorful DP of `kind` under every member of the greedy family.
std::optional<Witness> hash_family_solve(const RedBlueGraph& g, int k, WitnessKind kind);

}  // namespace bcslab
