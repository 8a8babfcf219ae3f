#pragma once

#include <stdexcept>
#include <vector>

#include "bcslab/graph.hpp"

namespace bcslab {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Running red-minus-blue balance along a path, signed so the first edge
/// counts +1. Values are integers; they can go negative.
struct BalanceProfile {
  std::vector<int> values;
};

BalanceProfile balance_profile(const std::vector<EdgeColor>& colors);

/// Balanced path of length >= 2k -> strictly shorter balanced path of length >= k.
Witness shrink_path(const RedBlueGraph& g, const Witness& path, int k);

/// Balanced tree with >= 3k+2 edges -> strictly smaller balanced tree with >= k edges.
Witness shrink_tree(const RedBlueGraph& g, const Witness& tree, int k);

/// Balanced connected subgraph with >= 3k+3 edges -> strictly smaller one with >= k edges.
Witness shrink_subgraph(const RedBlueGraph& g, const Witness& sub, int k);

/// Repeats the single-step shrink of w's kind while it applies. Output sizes:
/// [k, 2k-1] for paths, [k, 3k+1] for trees, [k, 3k+2] for subgraphs.
Witness shrink_to_range(const RedBlueGraph& g, const Witness& w, int k);

}  // namespace bcslab
