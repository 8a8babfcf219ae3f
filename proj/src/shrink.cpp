#include "bcslab/shrink.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace bcslab {

BalanceProfile balance_profile(const std::vector<EdgeColor>& colors) {
  BalanceProfile p;
  if (colors.empty()) return p;
  const EdgeColor up = colors.front();
  int h = 0;
  for (EdgeColor c : colors) {
    h += c == up ? 1 : -1;
    p.values.push_back(h);
  }
  return p;
}

namespace {

void require_valid(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges, WitnessKind kind, const char* what) {
  const int size = static_cast<int>(edges.size());
  const ValidationReport rep = validate_witness(g, Witness{kind, edges}, size);
  if (!rep.valid) throw PreconditionError(std::string(what) + ": input is not a balanced " +
                                          std::string(to_string(kind)) + " (" + rep.failures.front() + ")");
}

void require_k(int k) {
  if (k < 2) throw PreconditionError("k must be at least 2");
}

// Index of the split point in a sequence of colors whose signed running sum
// starts at +1 and ends at 0: the first interior position where it is 0.
// Returns the length of the first half.
std::size_t first_interior_zero(const std::vector<EdgeColor>& colors) {
  const BalanceProfile prof = balance_profile(colors);
  for (std::size_t i = 0; i + 1 < prof.values.size(); ++i)
    if (prof.values[i] == 0) return i + 1;
  throw std::logic_error("balanced sequence with equal ends has no interior zero");
}

// Splits a balanced sequence with equal-colored ends at its first interior
// zero and returns the [begin, end) range of the longer half (ties: first).
std::pair<std::size_t, std::size_t> longer_half(const std::vector<EdgeColor>& colors) {
  const std::size_t cut = first_interior_zero(colors);
  if (cut >= colors.size() - cut) return {0, cut};
  return {cut, colors.size()};
}

// A tree given by local adjacency lists (ids 0..N-1, ascending = ascending
// original id). Holds the rooted data the split step needs.
struct RootedTree {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> subtree;
  std::vector<std::vector<int>> children;
};

RootedTree root_tree(const std::vector<std::vector<int>>& adj, int root) {
  const std::size_t n = adj.size();
  RootedTree t;
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  t.subtree.assign(n, 1);
  t.children.assign(n, {});
  std::vector<int> order{root};
  std::vector<char> seen(n, 0);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int x = order[i];
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      t.parent[static_cast<std::size_t>(y)] = x;
      t.depth[static_cast<std::size_t>(y)] = t.depth[static_cast<std::size_t>(x)] + 1;
      t.children[static_cast<std::size_t>(x)].push_back(y);
      order.push_back(y);
    }
  }
  for (std::size_t i = order.size(); i-- > 1;)
    t.subtree[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(order[i])])] += t.subtree[static_cast<std::size_t>(order[i])];
  return t;
}

// Picks the split vertex u (deepest with more than N/3 vertices below it,
// smallest id on ties) and the children whose subtrees form S: the shortest
// prefix reaching N/3 vertices, or all children when none does.
std::pair<int, std::vector<int>> choose_split(const RootedTree& t) {
  const int n = static_cast<int>(t.parent.size());
  int u = -1;
  for (int x = 0; x < n; ++x) {
    if (3 * t.subtree[static_cast<std::size_t>(x)] <= n) continue;
    if (u < 0 || t.depth[static_cast<std::size_t>(x)] > t.depth[static_cast<std::size_t>(u)]) u = x;
  }
  std::vector<int> taken;
  int acc = 0;
  for (int c : t.children[static_cast<std::size_t>(u)]) {
    taken.push_back(c);
    acc += t.subtree[static_cast<std::size_t>(c)];
    if (3 * acc >= n) break;
  }
  return {u, taken};
}

std::vector<char> mark_subtrees(const RootedTree& t, const std::vector<int>& roots) {
  std::vector<char> in(t.parent.size(), 0);
  std::vector<int> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    in[static_cast<std::size_t>(x)] = 1;
    for (int c : t.children[static_cast<std::size_t>(x)]) stack.push_back(c);
  }
  return in;
}

int first_vertex_with_degree_at_least(const std::vector<std::vector<int>>& adj, std::size_t d) {
  for (std::size_t x = 0; x < adj.size(); ++x)
    if (adj[x].size() >= d) return static_cast<int>(x);
  return -1;
}

// ---- edge-colored trees -------------------------------------------------

struct EdgeTree {
  std::vector<std::vector<int>> adj;                  // local vertex ids
  std::vector<std::vector<std::pair<int, int>>> inc;  // (neighbor, local edge)
  std::vector<std::pair<int, int>> ends;
  std::vector<EdgeColor> color;
  std::vector<EdgeIndex> original;
};

EdgeTree make_edge_tree(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges) {
  EdgeTree t;
  const std::vector<Vertex> vs = vertices_of(g, edges);
  auto local = [&vs](Vertex x) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin()); };
  t.adj.assign(vs.size(), {});
  t.inc.assign(vs.size(), {});
  std::vector<EdgeIndex> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeIndex e : sorted) {
    const int a = local(g.edge(e).u);
    const int b = local(g.edge(e).v);
    const int id = static_cast<int>(t.ends.size());
    t.ends.emplace_back(a, b);
    t.color.push_back(g.color(e));
    t.original.push_back(e);
    t.inc[static_cast<std::size_t>(a)].emplace_back(b, id);
    t.inc[static_cast<std::size_t>(b)].emplace_back(a, id);
  }
  for (std::size_t x = 0; x < vs.size(); ++x) {
    std::sort(t.inc[x].begin(), t.inc[x].end());
    for (auto [y, id] : t.inc[x]) t.adj[x].push_back(y);
  }
  return t;
}

int surplus(const std::vector<EdgeColor>& color, const std::vector<int>& items, EdgeColor c) {
  int d = 0;
  for (int i : items) d += color[static_cast<std::size_t>(i)] == c ? 1 : -1;
  return d;
}

// Grows `start` (a connected item set whose surplus in color c is positive)
// breadth-first over the rest of the tree until balanced. `next_items`
// yields the BFS discovery order of the remaining items.
std::vector<int> grow_until_balanced(std::vector<int> start, const std::vector<int>& order,
                                     const std::vector<EdgeColor>& color, EdgeColor c) {
  int d = surplus(color, start, c);
  for (int item : order) {
    if (d == 0) break;
    start.push_back(item);
    d += color[static_cast<std::size_t>(item)] == c ? 1 : -1;
  }
  if (d != 0) throw std::logic_error("breadth-first growth never balanced");
  return start;
}

std::vector<int> edge_tree_shrink(const EdgeTree& t, int k) {
  const int n = static_cast<int>(t.adj.size());
  const int m = static_cast<int>(t.ends.size());

  // (b) pendant edges of both colors: drop one of each.
  int red_pendant = -1;
  int blue_pendant = -1;
  for (int e = 0; e < m; ++e) {
    const auto [a, b] = t.ends[static_cast<std::size_t>(e)];
    if (t.adj[static_cast<std::size_t>(a)].size() != 1 && t.adj[static_cast<std::size_t>(b)].size() != 1) continue;
    int& slot = t.color[static_cast<std::size_t>(e)] == EdgeColor::Red ? red_pendant : blue_pendant;
    if (slot < 0) slot = e;
  }
  if (red_pendant >= 0 && blue_pendant >= 0) {
    std::vector<int> keep;
    for (int e = 0; e < m; ++e)
      if (e != red_pendant && e != blue_pendant) keep.push_back(e);
    return keep;
  }

  // (c) all pendant edges share color c.
  const EdgeColor c = red_pendant >= 0 ? EdgeColor::Red : EdgeColor::Blue;
  const int root = first_vertex_with_degree_at_least(t.adj, 3);
  const RootedTree rt = root_tree(t.adj, root);
  const auto [u, taken] = choose_split(rt);
  const std::vector<char> in_s = mark_subtrees(rt, taken);

  // T[S + u] and T[R] partition the edges and meet at u.
  std::vector<int> part_s;
  std::vector<int> part_r;
  for (int e = 0; e < m; ++e) {
    const auto [a, b] = t.ends[static_cast<std::size_t>(e)];
    const bool side_s = in_s[static_cast<std::size_t>(a)] || in_s[static_cast<std::size_t>(b)];
    (side_s ? part_s : part_r).push_back(e);
  }
  const int ds = surplus(t.color, part_s, c);
  const int dr = surplus(t.color, part_r, c);
  if (ds == 0 && static_cast<int>(part_s.size()) >= k) return part_s;
  if (dr == 0 && static_cast<int>(part_r.size()) >= k) return part_r;

  const std::vector<int>& start = ds > 0 ? part_s : part_r;
  std::vector<char> in_start(static_cast<std::size_t>(m), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  for (int e : start) {
    in_start[static_cast<std::size_t>(e)] = 1;
    for (int x : {t.ends[static_cast<std::size_t>(e)].first, t.ends[static_cast<std::size_t>(e)].second})
      seen[static_cast<std::size_t>(x)] = 1;
  }
  for (int x = 0; x < n; ++x)
    if (seen[static_cast<std::size_t>(x)]) queue.push_back(x);
  std::vector<int> order;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (auto [y, e] : t.inc[static_cast<std::size_t>(x)]) {
      if (in_start[static_cast<std::size_t>(e)] || seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      order.push_back(e);
      queue.push_back(y);
    }
  }
  return grow_until_balanced(start, order, t.color, c);
}

// ---- vertex-colored trees (line-graph side) ----------------------------

std::vector<int> vertex_path_shrink(const std::vector<std::vector<int>>& adj, const std::vector<EdgeColor>& color) {
  const int n = static_cast<int>(adj.size());
  int start = 0;
  for (int x = 0; x < n; ++x)
    if (adj[static_cast<std::size_t>(x)].size() <= 1) {
      start = x;
      break;
    }
  std::vector<int> seq{start};
  int prev = -1;
  while (static_cast<int>(seq.size()) < n) {
    const int cur = seq.back();
    for (int y : adj[static_cast<std::size_t>(cur)])
      if (y != prev) {
        prev = cur;
        seq.push_back(y);
        break;
      }
  }
  std::vector<EdgeColor> cols;
  for (int x : seq) cols.push_back(color[static_cast<std::size_t>(x)]);
  if (cols.front() != cols.back()) return {seq.begin() + 1, seq.end() - 1};
  const auto [lo, hi] = longer_half(cols);
  return {seq.begin() + static_cast<std::ptrdiff_t>(lo), seq.begin() + static_cast<std::ptrdiff_t>(hi)};
}

std::vector<int> vertex_tree_shrink(const std::vector<std::vector<int>>& adj, const std::vector<EdgeColor>& color,
                                    int k) {
  const int n = static_cast<int>(adj.size());
  if (first_vertex_with_degree_at_least(adj, 3) < 0) return vertex_path_shrink(adj, color);

  int red_leaf = -1;
  int blue_leaf = -1;
  for (int x = 0; x < n; ++x) {
    if (adj[static_cast<std::size_t>(x)].size() != 1) continue;
    int& slot = color[static_cast<std::size_t>(x)] == EdgeColor::Red ? red_leaf : blue_leaf;
    if (slot < 0) slot = x;
  }
  if (red_leaf >= 0 && blue_leaf >= 0) {
    std::vector<int> keep;
    for (int x = 0; x < n; ++x)
      if (x != red_leaf && x != blue_leaf) keep.push_back(x);
    return keep;
  }

  const EdgeColor c = red_leaf >= 0 ? EdgeColor::Red : EdgeColor::Blue;
  const RootedTree rt = root_tree(adj, first_vertex_with_degree_at_least(adj, 3));
  const auto [u, taken] = choose_split(rt);
  const std::vector<char> in_s = mark_subtrees(rt, taken);

  // X = S + u and R = V - S are both connected and share u.
  std::vector<int> part_x;
  std::vector<int> part_r;
  for (int x = 0; x < n; ++x) {
    if (in_s[static_cast<std::size_t>(x)] || x == u) part_x.push_back(x);
    if (!in_s[static_cast<std::size_t>(x)]) part_r.push_back(x);
  }
  const int dx = surplus(color, part_x, c);
  const int dr = surplus(color, part_r, c);
  if (dx == 0 && static_cast<int>(part_x.size()) >= k) return part_x;
  if (dr == 0 && static_cast<int>(part_r.size()) >= k) return part_r;

  const std::vector<int>& start = dx > 0 ? part_x : part_r;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  for (int x : start) seen[static_cast<std::size_t>(x)] = 1;
  for (int x = 0; x < n; ++x)
    if (seen[static_cast<std::size_t>(x)]) queue.push_back(x);
  std::vector<int> order;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      order.push_back(y);
      queue.push_back(y);
    }
  }
  return grow_until_balanced(start, order, color, c);
}

Witness finish(const RedBlueGraph& g, WitnessKind kind, std::vector<EdgeIndex> edges, int input_size, int k) {
  std::sort(edges.begin(), edges.end());
  Witness out{kind, std::move(edges)};
  const ValidationReport rep = validate_witness(g, out, out.size());
  if (!rep.valid || out.size() >= input_size || out.size() < k)
    throw std::logic_error("shrink produced an invalid result: " + rep.to_json());
  return out;
}

}  // namespace

Witness shrink_path(const RedBlueGraph& g, const Witness& path, int k) {
  require_k(k);
  require_valid(g, path.edges, WitnessKind::Path, "shrink_path");
  if (path.size() < 2 * k) throw PreconditionError("shrink_path: path shorter than 2k");
  const OrderedPath op = order_path(g, path.edges);
  std::vector<EdgeColor> cols;
  for (EdgeIndex e : op.edges) cols.push_back(g.color(e));
  std::vector<EdgeIndex> out;
  if (cols.front() != cols.back()) {
    out.assign(op.edges.begin() + 1, op.edges.end() - 1);
  } else {
    const auto [lo, hi] = longer_half(cols);
    out.assign(op.edges.begin() + static_cast<std::ptrdiff_t>(lo), op.edges.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return finish(g, path.kind, std::move(out), path.size(), k);
}

Witness shrink_tree(const RedBlueGraph& g, const Witness& tree, int k) {
  require_k(k);
  require_valid(g, tree.edges, WitnessKind::Tree, "shrink_tree");
  if (tree.size() < 3 * k + 2) throw PreconditionError("shrink_tree: tree has fewer than 3k+2 edges");
  const EdgeTree t = make_edge_tree(g, tree.edges);
  if (first_vertex_with_degree_at_least(t.adj, 3) < 0) {
    Witness as_path = shrink_path(g, Witness{WitnessKind::Path, tree.edges}, k);
    as_path.kind = tree.kind;
    return as_path;
  }
  std::vector<EdgeIndex> out;
  for (int e : edge_tree_shrink(t, k)) out.push_back(t.original[static_cast<std::size_t>(e)]);
  return finish(g, tree.kind, std::move(out), tree.size(), k);
}

Witness shrink_subgraph(const RedBlueGraph& g, const Witness& sub, int k) {
  require_k(k);
  require_valid(g, sub.edges, WitnessKind::Subgraph, "shrink_subgraph");
  if (sub.size() < 3 * k + 3) throw PreconditionError("shrink_subgraph: subgraph has fewer than 3k+3 edges");

  std::vector<EdgeIndex> items = sub.edges;
  std::sort(items.begin(), items.end());
  const RedBlueGraph h = edge_induced(g, items);
  const VertexColoredGraph lg = line_graph(h);
  const auto ladj = lg.adjacency();

  // BFS spanning tree of L(H) from its first vertex.
  const std::size_t n = static_cast<std::size_t>(lg.n);
  std::vector<std::vector<int>> tree(n);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (Vertex yv : ladj[static_cast<std::size_t>(x) + 1]) {
      const int y = yv - 1;
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      tree[static_cast<std::size_t>(x)].push_back(y);
      tree[static_cast<std::size_t>(y)].push_back(x);
      queue.push_back(y);
    }
  }
  for (auto& l : tree) std::sort(l.begin(), l.end());
  std::vector<EdgeColor> color(n);
  for (std::size_t i = 0; i < n; ++i) color[i] = lg.vcolor[i + 1];

  std::vector<EdgeIndex> out;
  for (int x : vertex_tree_shrink(tree, color, k)) out.push_back(items[static_cast<std::size_t>(x)]);
  return finish(g, sub.kind, std::move(out), sub.size(), k);
}

Witness shrink_to_range(const RedBlueGraph& g, const Witness& w, int k) {
  require_k(k);
  require_valid(g, w.edges, w.kind, "shrink_to_range");
  if (w.size() < k) throw PreconditionError("shrink_to_range: witness smaller than k");
  Witness cur = w;
  switch (w.kind) {
    case WitnessKind::Path:
      while (cur.size() >= 2 * k) cur = shrink_path(g, cur, k);
      break;
    case WitnessKind::Tree:
      while (cur.size() >= 3 * k + 2) cur = shrink_tree(g, cur, k);
      break;
    case WitnessKind::Subgraph:
      while (cur.size() >= 3 * k + 3) cur = shrink_subgraph(g, cur, k);
      break;
  }
  return cur;
}

}  // namespace bcslab
