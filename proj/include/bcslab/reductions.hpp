#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bcslab/graph.hpp"

namespace bcslab {

struct ReducedInstance {
  RedBlueGraph graph;
  int target = 0;                  // 2k
  std::optional<Witness> witness;  // forward image of a supplied source solution
};

/// Steiner tree (G, T, k) -> balanced connected subgraph (H, 2k). Colors of
/// G are ignored: its edges become blue and keep their indices; each terminal
/// gets a red pendant (vertex n+i for terminal i) and t_1 gets k-|T| more.
/// With `tree` (a subtree of G on at most k edges spanning T) the witness is
/// that tree grown to k edges plus every red edge.
ReducedInstance steiner_to_ebcs(const RedBlueGraph& g, const std::vector<Vertex>& terminals, int k,
                                const std::optional<std::vector<EdgeIndex>>& tree = std::nullopt);

/// Which new path vertices join the clique. The published choice takes the
/// even-indexed ones; for even k that puts u_k in the clique, where its blue
/// edges into C let a balanced path use blue edges at both ends. The default
/// takes the indices of parity opposite to k, so u_k stays outside.
enum class CliqueChoice { OppositeParity, EvenIndices };

/// Longest path from u0 of length k in a split graph -> balanced path (H, 2k).
/// New vertices u_1..u_k are n+1..n+k; u_0u_1 and the path u_1..u_k are red,
/// the rest blue. With `path` (u0, x1, ..., xk in G) the witness is the
/// combined path.
ReducedInstance longest_path_split_to_ebp(const RedBlueGraph& g, const SplitPartition& part, Vertex u0, int k,
                                          const std::optional<std::vector<Vertex>>& path = std::nullopt,
                                          CliqueChoice choice = CliqueChoice::OppositeParity);

}  // namespace bcslab
