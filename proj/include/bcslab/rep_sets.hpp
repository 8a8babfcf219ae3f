#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bcslab/graph.hpp"

namespace bcslab {

/// Vertex set as a bitmask, bit v-1 for vertex v (so n <= 64).
using VertexSet = std::uint64_t;

struct FamilyMember {
  VertexSet set = 0;
  std::vector<Vertex> walk;  // a path realizing `set`, in order
};

struct SetFamily {
  int ground_size = 0;
  int p = 0;
  std::vector<FamilyMember> sets;
};

struct RepConfig {
  int k_cap = 0;
  std::uint64_t field_prime = 0;
};

/// k_cap plus the smallest prime above ground_size + k_cap. The extra k_cap
/// evaluation points act as padding elements when |Y| < k_cap - p.
RepConfig make_rep_config(int ground_size, int k_cap);

/// Subfamily that (k_cap - p)-represents S, with at most C(k_cap, p) sets.
/// Sets are considered in input order; a set is kept iff its vector of
/// p x p minors is independent of the ones kept before it.
SetFamily reduce_family(const SetFamily& s, int k_cap, const RepConfig& cfg);

/// { X + v : X in S, v not in X }, witnesses extended by v.
SetFamily convolve_extend(const SetFamily& s, Vertex v);

/// Observer for every reduced family: paths from u to v with r red and b
/// blue edges.
using RepTrace = std::function<void(Vertex u, Vertex v, int r, int b, const SetFamily& reduced)>;

/// Exact balanced path of k edges by representative families.
std::optional<Witness> solve_ebp_repsets(const RedBlueGraph& g, int k, const RepTrace& trace = {});

/// Brute-force check that `rep` q-represents `full` for every |Y| <= q.
bool represents(const SetFamily& rep, const SetFamily& full, int q);

}  // namespace bcslab
