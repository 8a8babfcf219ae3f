#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bcslab/graph.hpp"

namespace bcslab {

/// Every red-blue graph on exactly n vertices (isolated vertices allowed),
/// one per isomorphism class. Smaller graphs appear with isolated vertices.
/// Practical up to n = 5.
std::vector<RedBlueGraph> all_red_blue_graphs(int n);

/// Every simple graph on exactly n vertices up to isomorphism, edges red.
/// Practical up to n = 6.
std::vector<RedBlueGraph> all_simple_graphs(int n);

/// Every tree with the given number of edges up to isomorphism, edges red.
std::vector<RedBlueGraph> all_trees(int edges);

/// G(n, p) with independent uniform edge colors.
RedBlueGraph random_graph(int n, double p, std::mt19937_64& rng);

/// `count` random graphs, n uniform in [n_min, n_max], p uniform in [0.25, 0.75].
std::vector<RedBlueGraph> random_corpus(int count, int n_min, int n_max, std::uint64_t seed);

/// All red-blue graphs on 5 vertices followed by 200 random graphs with n <= 8.
std::vector<RedBlueGraph> default_corpus(std::uint64_t seed = 1);

/// Same graph with edge i recolored to colors[i].
RedBlueGraph recolor(const RedBlueGraph& g, const std::vector<EdgeColor>& colors);

/// Worker count: BCSLAB_THREADS when set, else the hardware concurrency.
int thread_count();

/// Runs fn(0..count-1) over thread_count() workers. Callers write results
/// into preallocated slots so output order does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace bcslab
