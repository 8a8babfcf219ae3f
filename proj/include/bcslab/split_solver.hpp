#pragma once

#include <optional>
#include <stdexcept>

#include "bcslab/graph.hpp"

namespace bcslab {

class NotSplitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Balanced connected subgraph with exactly k edges on a split graph, or
/// nullopt when the graph has fewer than k/2 edges of some color.
/// Throws NotSplitError for non-split input and std::invalid_argument for odd k.
std::optional<Witness> solve_split_ebcs(const RedBlueGraph& g, int k);

/// Same, for a caller-supplied partition.
std::optional<Witness> solve_split_ebcs(const RedBlueGraph& g, const SplitPartition& part, int k);

}  // namespace bcslab
