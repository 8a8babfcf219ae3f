#include "bcslab/reductions.hpp"

#include <algorithm>
#include <string>

namespace bcslab {

namespace {

bool connected(const RedBlueGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x))
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        ++count;
        stack.push_back(inc.neighbor);
      }
  }
  return count == n;
}

}  // namespace

ReducedInstance steiner_to_ebcs(const RedBlueGraph& g, const std::vector<Vertex>& terminals, int k,
                                const std::optional<std::vector<EdgeIndex>>& tree) {
  const int n = g.num_vertices();
  const int ell = static_cast<int>(terminals.size());
  if (ell == 0) throw std::invalid_argument("steiner_to_ebcs: no terminals");
  if (ell > k) throw std::invalid_argument("steiner_to_ebcs: more terminals than k");
  if (k > g.num_edges()) throw std::invalid_argument("steiner_to_ebcs: k exceeds the number of edges");
  if (!connected(g)) throw std::invalid_argument("steiner_to_ebcs: graph is not connected");
  std::vector<Vertex> sorted = terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1 || sorted.back() > n)
    throw std::invalid_argument("steiner_to_ebcs: terminals must be distinct vertices");

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, EdgeColor::Blue});
  Vertex fresh = n;
  for (Vertex t : terminals) edges.push_back({t, ++fresh, EdgeColor::Red});
  for (int i = 0; i < k - ell; ++i) edges.push_back({terminals.front(), ++fresh, EdgeColor::Red});
  ReducedInstance out{RedBlueGraph(fresh, std::move(edges)), 2 * k, std::nullopt};

  if (tree) {
    std::vector<EdgeIndex> chosen = *tree;
    std::sort(chosen.begin(), chosen.end());
    if (static_cast<int>(chosen.size()) > k) throw std::invalid_argument("steiner_to_ebcs: tree has more than k edges");
    std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
    std::vector<char> touched(static_cast<std::size_t>(n) + 1, 0);
    for (EdgeIndex e : chosen) {
      in[static_cast<std::size_t>(e)] = 1;
      touched[static_cast<std::size_t>(g.edge(e).u)] = touched[static_cast<std::size_t>(g.edge(e).v)] = 1;
    }
    if (chosen.empty()) touched[static_cast<std::size_t>(terminals.front())] = 1;
    for (Vertex t : terminals)
      if (!touched[static_cast<std::size_t>(t)])
        throw std::invalid_argument("steiner_to_ebcs: supplied tree misses terminal " + std::to_string(t));
    // Grow to exactly k edges, always by the smallest edge touching the set.
    while (static_cast<int>(chosen.size()) < k) {
      EdgeIndex pick = -1;
      for (EdgeIndex e = 0; e < g.num_edges() && pick < 0; ++e)
        if (!in[static_cast<std::size_t>(e)] &&
            (touched[static_cast<std::size_t>(g.edge(e).u)] || touched[static_cast<std::size_t>(g.edge(e).v)]))
          pick = e;
      in[static_cast<std::size_t>(pick)] = 1;
      touched[static_cast<std::size_t>(g.edge(pick).u)] = touched[static_cast<std::size_t>(g.edge(pick).v)] = 1;
      chosen.push_back(pick);
    }
    Witness w{WitnessKind::Subgraph, chosen};
    for (EdgeIndex e = g.num_edges(); e < out.graph.num_edges(); ++e) w.edges.push_back(e);
    std::sort(w.edges.begin(), w.edges.end());
    if (!validate_witness(out.graph, w, 2 * k).valid)
      throw std::invalid_argument("steiner_to_ebcs: supplied tree does not span the terminals");
    out.witness = std::move(w);
  }
  return out;
}

ReducedInstance longest_path_split_to_ebp(const RedBlueGraph& g, const SplitPartition& part, Vertex u0, int k,
                                          const std::optional<std::vector<Vertex>>& path, CliqueChoice choice) {
  const int n = g.num_vertices();
  if (k < 1) throw std::invalid_argument("longest_path_split_to_ebp: k must be positive");
  std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);  // 0 clique, 1 independent
  for (Vertex c : part.clique) side.at(static_cast<std::size_t>(c)) = 0;
  for (Vertex i : part.independent) side.at(static_cast<std::size_t>(i)) = 1;
  if (std::count(side.begin() + 1, side.end(), -1) != 0 ||
      part.clique.size() + part.independent.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("longest_path_split_to_ebp: partition does not cover the vertices");
  for (std::size_t a = 0; a < part.clique.size(); ++a)
    for (std::size_t b = a + 1; b < part.clique.size(); ++b)
      if (!g.find_edge(part.clique[a], part.clique[b]))
        throw std::invalid_argument("longest_path_split_to_ebp: clique part is not a clique");
  for (const Edge& e : g.edges())
    if (side[static_cast<std::size_t>(e.u)] == 1 && side[static_cast<std::size_t>(e.v)] == 1)
      throw std::invalid_argument("longest_path_split_to_ebp: independent part has an edge");
  if (u0 < 1 || u0 > n || side[static_cast<std::size_t>(u0)] != 0)
    throw std::invalid_argument("longest_path_split_to_ebp: u0 must lie in the clique part");

  auto u = [n](int i) { return Vertex{n + i}; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, EdgeColor::Blue});
  edges.push_back({u0, u(1), EdgeColor::Red});
  for (int i = 1; i < k; ++i) edges.push_back({u(i), u(i + 1), EdgeColor::Red});
  std::vector<Vertex> s;
  for (int i = 1; i <= k; ++i) {
    const bool take = choice == CliqueChoice::EvenIndices ? i % 2 == 0 : i % 2 != k % 2;
    if (take) s.push_back(u(i));
  }
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) edges.push_back({s[a], s[b], EdgeColor::Blue});
  std::vector<Vertex> clique = part.clique;
  std::sort(clique.begin(), clique.end());
  for (Vertex c : clique)
    for (Vertex x : s)
      if (!(c == u0 && x == u(1))) edges.push_back({c, x, EdgeColor::Blue});  // u0-u1 is already red
  ReducedInstance out{RedBlueGraph(n + k, std::move(edges)), 2 * k, std::nullopt};

  if (path) {
    const std::vector<Vertex>& p = *path;
    if (static_cast<int>(p.size()) != k + 1 || p.front() != u0)
      throw std::invalid_argument("longest_path_split_to_ebp: path must be u0 followed by k vertices");
    Witness w{WitnessKind::Path, {}};
    for (int i = 0; i < k; ++i) {
      const auto e = g.find_edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
      if (!e) throw std::invalid_argument("longest_path_split_to_ebp: supplied path uses a non-edge");
      w.edges.push_back(*e);
    }
    for (int i = 0; i < k; ++i) w.edges.push_back(g.num_edges() + i);
    std::sort(w.edges.begin(), w.edges.end());
    if (!validate_witness(out.graph, w, 2 * k).valid)
      throw std::invalid_argument("longest_path_split_to_ebp: supplied path is not simple");
    out.witness = std::move(w);
  }
  return out;
}

}  // namespace bcslab
