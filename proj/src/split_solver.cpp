#include "bcslab/split_solver.hpp"

#include <algorithm>
#include <string>

namespace bcslab {

namespace {

enum class Side : std::uint8_t { V, Rich, Poor, Independent };

class Builder {
 public:
  Builder(const RedBlueGraph& g, int half) : g_(g), half_(half), chosen_(static_cast<std::size_t>(g.num_edges()), 0) {}

  int count(EdgeColor c) const { return c == EdgeColor::Red ? red_ : blue_; }
  bool full(EdgeColor c) const { return count(c) >= half_; }
  bool has(EdgeIndex e) const { return chosen_[static_cast<std::size_t>(e)] != 0; }

  void add(EdgeIndex e) {
    if (has(e)) return;
    chosen_[static_cast<std::size_t>(e)] = 1;
    edges_.push_back(e);
    (g_.color(e) == EdgeColor::Red ? red_ : blue_)++;
  }

  // Adds edges of the pool one by one until color c reaches k/2.
  void fill(const std::vector<EdgeIndex>& pool, EdgeColor c) {
    for (EdgeIndex e : pool) {
      if (full(c)) return;
      add(e);
    }
  }

  std::vector<EdgeIndex> take() { return std::move(edges_); }

 private:
  const RedBlueGraph& g_;
  int half_;
  std::vector<char> chosen_;
  std::vector<EdgeIndex> edges_;
  int red_ = 0;
  int blue_ = 0;
};

}  // namespace

std::optional<Witness> solve_split_ebcs(const RedBlueGraph& g, const SplitPartition& part, int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer, got " + std::to_string(k));
  if (!is_split_partition(g, part)) throw NotSplitError("not a split partition of the graph");
  const int half = k / 2;
  if (g.count_color(EdgeColor::Red) < half || g.count_color(EdgeColor::Blue) < half) return std::nullopt;

  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> in_clique(n + 1, 0);
  for (Vertex c : part.clique) in_clique[static_cast<std::size_t>(c)] = 1;

  // v maximizes min(red degree into C, blue degree into C).
  Vertex v = part.clique.front();
  int best = -1;
  for (Vertex c : part.clique) {
    int red = 0;
    int blue = 0;
    for (const Incidence& inc : g.incident(c))
      if (in_clique[static_cast<std::size_t>(inc.neighbor)]) (g.color(inc.edge) == EdgeColor::Red ? red : blue)++;
    if (std::min(red, blue) > best) {
      best = std::min(red, blue);
      v = c;
    }
  }

  std::vector<EdgeIndex> to_red;   // E(v, X)
  std::vector<EdgeIndex> to_blue;  // E(v, Y)
  for (const Incidence& inc : g.incident(v)) {
    if (!in_clique[static_cast<std::size_t>(inc.neighbor)]) continue;
    (g.color(inc.edge) == EdgeColor::Red ? to_red : to_blue).push_back(inc.edge);
  }
  std::sort(to_red.begin(), to_red.end());
  std::sort(to_blue.begin(), to_blue.end());
  const int nx = static_cast<int>(to_red.size());
  const int ny = static_cast<int>(to_blue.size());

  Builder b(g, half);
  if (nx >= half && ny >= half) {
    b.fill(to_red, EdgeColor::Red);
    b.fill(to_blue, EdgeColor::Blue);
  } else if (nx < half && ny < half) {
    for (EdgeIndex e : to_red) b.add(e);
    for (EdgeIndex e : to_blue) b.add(e);
    std::vector<EdgeIndex> red_pool;
    std::vector<EdgeIndex> blue_pool;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) (g.color(e) == EdgeColor::Red ? red_pool : blue_pool).push_back(e);
    b.fill(red_pool, EdgeColor::Red);
    b.fill(blue_pool, EdgeColor::Blue);
  } else {
    // One color (rich) reaches k/2 around v, the other (poor) does not.
    const EdgeColor rich = nx >= half ? EdgeColor::Red : EdgeColor::Blue;
    const EdgeColor poor = opposite(rich);
    const std::vector<EdgeIndex>& to_rich = rich == EdgeColor::Red ? to_red : to_blue;
    const std::vector<EdgeIndex>& to_poor = rich == EdgeColor::Red ? to_blue : to_red;

    std::vector<Side> side(n + 1, Side::Independent);
    side[static_cast<std::size_t>(v)] = Side::V;
    std::vector<EdgeIndex> spoke(n + 1, -1);  // the rich edge {x, v} for x in X
    for (EdgeIndex e : to_rich) {
      const Vertex x = g.edge(e).other(v);
      side[static_cast<std::size_t>(x)] = Side::Rich;
      spoke[static_cast<std::size_t>(x)] = e;
    }
    for (EdgeIndex e : to_poor) side[static_cast<std::size_t>(g.edge(e).other(v))] = Side::Poor;

    auto between = [&](EdgeIndex e, Side a, Side c) {
      const Side su = side[static_cast<std::size_t>(g.edge(e).u)];
      const Side sv = side[static_cast<std::size_t>(g.edge(e).v)];
      return (su == a && sv == c) || (su == c && sv == a);
    };
    std::vector<EdgeIndex> poor_edges;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
      if (g.color(e) == poor) poor_edges.push_back(e);

    for (EdgeIndex e : to_poor) b.add(e);
    for (EdgeIndex e : poor_edges)
      if (!b.full(poor) && between(e, Side::Poor, Side::Independent)) b.add(e);
    for (EdgeIndex e : poor_edges)
      if (!b.full(poor) && (between(e, Side::V, Side::Independent) || between(e, Side::Poor, Side::Poor))) b.add(e);

    auto add_with_spoke = [&](EdgeIndex e) {
      Vertex x1 = g.edge(e).u;
      Vertex x2 = g.edge(e).v;
      if (side[static_cast<std::size_t>(x1)] != Side::Rich) std::swap(x1, x2);
      b.add(e);
      const bool both_rich = side[static_cast<std::size_t>(x2)] == Side::Rich;
      if (both_rich && (b.has(spoke[static_cast<std::size_t>(x1)]) || b.has(spoke[static_cast<std::size_t>(x2)])))
        return;
      if (both_rich && x2 < x1) std::swap(x1, x2);
      const EdgeIndex s = spoke[static_cast<std::size_t>(x1)];
      if (s < 0 || g.color(s) != rich) throw std::logic_error("split solver: missing spoke edge to v");
      b.add(s);
    };
    for (EdgeIndex e : poor_edges)
      if (!b.full(poor) && between(e, Side::Rich, Side::Poor)) add_with_spoke(e);
    // Poor edges inside X or between X and I also need a spoke to reach v.
    for (EdgeIndex e : poor_edges)
      if (!b.full(poor) && (between(e, Side::Rich, Side::Rich) || between(e, Side::Rich, Side::Independent)))
        add_with_spoke(e);
    b.fill(to_rich, rich);
  }

  Witness w{WitnessKind::Subgraph, b.take()};
  std::sort(w.edges.begin(), w.edges.end());
  const ValidationReport rep = validate_witness(g, w, k);
  if (!rep.valid) throw std::logic_error("split solver built an invalid witness: " + rep.to_json());
  return w;
}

std::optional<Witness> solve_split_ebcs(const RedBlueGraph& g, int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer, got " + std::to_string(k));
  const std::optional<SplitPartition> part = split_partition(g);
  if (!part) throw NotSplitError("graph is not a split graph");
  if (part->clique.empty()) {
    if (g.num_edges() == 0) return std::nullopt;
    throw std::logic_error("split partition with empty clique but edges present");
  }
  return solve_split_ebcs(g, *part, k);
}

}  // namespace bcslab
