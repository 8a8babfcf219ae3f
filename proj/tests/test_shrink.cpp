#include <doctest.h>

#include <random>

#include "bcslab/corpus.hpp"
#include "bcslab/shrink.hpp"
#include "support/brute.hpp"

using namespace bcslab;

namespace {

constexpr EdgeColor R = EdgeColor::Red;
constexpr EdgeColor B = EdgeColor::Blue;

RedBlueGraph path_graph(const std::vector<EdgeColor>& colors) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < colors.size(); ++i)
    edges.push_back({static_cast<Vertex>(i + 1), static_cast<Vertex>(i + 2), colors[i]});
  return RedBlueGraph(static_cast<int>(colors.size()) + 1, std::move(edges));
}

Witness all_edges(const RedBlueGraph& g, WitnessKind kind) {
  Witness w{kind, {}};
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) w.edges.push_back(e);
  return w;
}

std::vector<EdgeColor> colors_of(const RedBlueGraph& g, const Witness& w) {
  const OrderedPath p = order_path(g, w.edges);
  std::vector<EdgeColor> out;
  for (EdgeIndex e : p.edges) out.push_back(g.color(e));
  return out;
}

void check_shrunk(const RedBlueGraph& g, const Witness& in, const Witness& out, int k) {
  CHECK(out.size() < in.size());
  CHECK(out.size() >= k);
  CHECK(out.kind == in.kind);
  CHECK(brute::satisfies(g, out.edges, in.kind));
}

}  // namespace

TEST_CASE("balance profile") {
  CHECK(balance_profile({R, B, B, R}).values == std::vector<int>{1, 0, -1, 0});
  CHECK(balance_profile({R, R, B, B, R, B}).values == std::vector<int>{1, 2, 1, 0, 1, 0});
  CHECK(balance_profile({B, R}).values == std::vector<int>{1, 0});
}

TEST_CASE("path with equal terminal colors splits at an interior zero") {
  const RedBlueGraph g = path_graph({R, B, B, R});
  const Witness out = shrink_path(g, all_edges(g, WitnessKind::Path), 2);
  CHECK(out.size() == 2);
  CHECK(out.edges == std::vector<EdgeIndex>{0, 1});
}

TEST_CASE("path with different terminal colors drops both ends") {
  const RedBlueGraph g = path_graph({R, B, R, B});
  const Witness out = shrink_path(g, all_edges(g, WitnessKind::Path), 2);
  CHECK(out.edges == std::vector<EdgeIndex>{1, 2});
  CHECK(colors_of(g, out) == std::vector<EdgeColor>{B, R});
}

TEST_CASE("terminal rule takes precedence over the profile split") {
  // Terminals R and B differ, so the inner four edges are kept.
  const RedBlueGraph g = path_graph({R, R, B, B, R, B});
  const Witness out = shrink_path(g, all_edges(g, WitnessKind::Path), 2);
  CHECK(out.size() == 4);
  CHECK(out.edges == std::vector<EdgeIndex>{1, 2, 3, 4});
}

TEST_CASE("shrink_path preconditions") {
  const RedBlueGraph g = path_graph({R, B, R, B});
  CHECK_THROWS_AS(shrink_path(g, all_edges(g, WitnessKind::Path), 4), PreconditionError);
  CHECK_THROWS_AS(shrink_path(g, Witness{WitnessKind::Path, {0, 2}}, 2), std::invalid_argument);
  const RedBlueGraph unbalanced = path_graph({R, R, B, R});
  CHECK_THROWS_AS(shrink_path(unbalanced, all_edges(unbalanced, WitnessKind::Path), 2), std::invalid_argument);
}

TEST_CASE("double star drops one pendant of each color") {
  const RedBlueGraph g = brute::make(9, "1-3R 1-4R 1-5R 1-2R 2-6B 2-7B 2-8B 2-9B");
  const Witness in = all_edges(g, WitnessKind::Tree);
  const Witness out = shrink_tree(g, in, 2);
  check_shrunk(g, in, out, 2);
  CHECK(out.size() == 6);
}

TEST_CASE("tree that is a path delegates to shrink_path") {
  const RedBlueGraph g = path_graph({R, B, R, B, R, B, R, B});
  const Witness as_tree = shrink_tree(g, all_edges(g, WitnessKind::Tree), 2);
  const Witness as_path = shrink_path(g, all_edges(g, WitnessKind::Path), 2);
  CHECK(as_tree.edges == as_path.edges);
  CHECK(as_tree.kind == WitnessKind::Tree);
}

TEST_CASE("spider with red pendant edges splits at the center") {
  // Legs 1-2-3-4-5, 1-6-7-8-9, 1-10-11-12-13; leaf edges red.
  const RedBlueGraph g =
      brute::make(13, "1-2B 2-3B 3-4R 4-5R 1-6B 6-7B 7-8R 8-9R 1-10B 10-11B 11-12R 12-13R");
  const Witness in = all_edges(g, WitnessKind::Tree);
  const Witness out = shrink_tree(g, in, 2);
  check_shrunk(g, in, out, 2);
}

TEST_CASE("shrink_tree preconditions") {
  const RedBlueGraph g = brute::make(5, "1-2R 1-3B 1-4R 1-5B");
  CHECK_THROWS_AS(shrink_tree(g, all_edges(g, WitnessKind::Tree), 2), PreconditionError);
}

TEST_CASE("two stars joined by a bridge path") {
  const RedBlueGraph g = brute::make(11, "1-2R 1-3R 1-4R 5-6B 5-7B 5-8B 1-9B 9-10R 10-5B 5-11R");
  const Witness in = all_edges(g, WitnessKind::Subgraph);
  const Witness out = shrink_subgraph(g, in, 2);
  check_shrunk(g, in, out, 2);
}

TEST_CASE("balanced 10-cycle") {
  const RedBlueGraph g = brute::make(10, "1-2R 2-3B 3-4R 4-5B 5-6R 6-7B 7-8R 8-9B 9-10R 10-1B");
  const Witness in = all_edges(g, WitnessKind::Subgraph);
  const Witness out = shrink_subgraph(g, in, 2);
  check_shrunk(g, in, out, 2);
  CHECK(out.size() <= 9);
}

TEST_CASE("subgraph with 3k+2 edges is rejected") {
  const RedBlueGraph g = brute::make(8, "1-2R 2-3B 3-4R 4-5B 5-6R 6-7B 7-8R 8-1B");
  CHECK_THROWS_AS(shrink_subgraph(g, all_edges(g, WitnessKind::Subgraph), 2), PreconditionError);
}

TEST_CASE("iterated shrinking lands in the size range") {
  const RedBlueGraph p8 = path_graph({R, B, B, R, R, B, R, B});
  CHECK(shrink_to_range(p8, all_edges(p8, WitnessKind::Path), 2).size() == 2);

  // Balanced tree with 20 edges: a caterpillar.
  std::vector<Edge> edges;
  for (int i = 1; i <= 10; ++i) edges.push_back({i, i + 1, i % 2 ? R : B});
  for (int i = 1; i <= 10; ++i) edges.push_back({i, 11 + i, i % 2 ? B : R});
  const RedBlueGraph cat(21, edges);
  const Witness t = shrink_to_range(cat, all_edges(cat, WitnessKind::Tree), 2);
  CHECK(t.size() >= 2);
  CHECK(t.size() <= 7);
  CHECK(brute::satisfies(cat, t.edges, WitnessKind::Tree));

  const RedBlueGraph small = path_graph({R, B});
  CHECK(shrink_to_range(small, all_edges(small, WitnessKind::Path), 2).edges == std::vector<EdgeIndex>{0, 1});
}

TEST_CASE("random balanced paths shrink correctly") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int half = 2 + static_cast<int>(rng() % 8);
    std::vector<EdgeColor> cols(static_cast<std::size_t>(2 * half), R);
    for (int i = 0; i < half; ++i) cols[static_cast<std::size_t>(i)] = B;
    std::shuffle(cols.begin(), cols.end(), rng);
    const RedBlueGraph g = path_graph(cols);
    const Witness in = all_edges(g, WitnessKind::Path);
    for (int k = 2; 2 * k <= 2 * half; k += 2) {
      check_shrunk(g, in, shrink_path(g, in, k), k);
      const Witness it = shrink_to_range(g, in, k);
      CHECK(it.size() <= 2 * k - 1);
      CHECK(it.size() >= k);
    }
  }
}
