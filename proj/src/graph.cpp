#include "bcslab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bcslab {

char color_letter(EdgeColor c) { return c == EdgeColor::Red ? 'R' : 'B'; }

GraphError::GraphError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

RedBlueGraph::RedBlueGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) + 1, {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw GraphError("edge " + std::to_string(i) + " has an endpoint outside 1.." + std::to_string(n));
    if (e.u == e.v) throw GraphError("edge " + std::to_string(i) + " is a self-loop");
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      throw GraphError("edge " + std::to_string(i) + " duplicates an earlier edge");
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<EdgeIndex>(i)});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<EdgeIndex>(i)});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
}

std::vector<EdgeIndex> RedBlueGraph::edge_neighbors(EdgeIndex e) const {
  const Edge& ed = edge(e);
  std::vector<EdgeIndex> out;
  for (Vertex x : {ed.u, ed.v})
    for (const Incidence& inc : incident(x))
      if (inc.edge != e) out.push_back(inc.edge);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EdgeIndex> RedBlueGraph::find_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return std::nullopt;
  for (const Incidence& inc : incident(a))
    if (inc.neighbor == b) return inc.edge;
  return std::nullopt;
}

int RedBlueGraph::count_color(EdgeColor c) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [c](const Edge& e) { return e.color == c; }));
}

namespace {

int parse_int(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw GraphError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
  }
  if (pos != tok.size()) throw GraphError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
  return value;
}

}  // namespace

RedBlueGraph parse_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (n < 0) {
      if (head != "graph" || toks.size() != 2) throw GraphError("expected header 'graph <n> <m>'", line_no);
      n = parse_int(toks[0], line_no, "vertex count");
      m = parse_int(toks[1], line_no, "edge count");
      if (n < 0 || m < 0) throw GraphError("negative count in header", line_no);
      continue;
    }
    if (head != "e" || toks.size() != 3) throw GraphError("expected edge line 'e <u> <v> <R|B>'", line_no);
    const int u = parse_int(toks[0], line_no, "endpoint");
    const int v = parse_int(toks[1], line_no, "endpoint");
    if (u < 1 || u > n || v < 1 || v > n) throw GraphError("vertex out of range 1.." + std::to_string(n), line_no);
    if (u == v) throw GraphError("self-loop", line_no);
    EdgeColor c;
    if (toks[2] == "R") {
      c = EdgeColor::Red;
    } else if (toks[2] == "B") {
      c = EdgeColor::Blue;
    } else {
      throw GraphError("unknown color '" + toks[2] + "'", line_no);
    }
    if (!seen.insert(std::minmax(u, v)).second) throw GraphError("duplicate edge", line_no);
    if (static_cast<int>(edges.size()) == m) throw GraphError("more edge lines than the header declares", line_no);
    edges.push_back({u, v, c});
  }
  if (n < 0) throw GraphError("missing 'graph' header");
  if (static_cast<int>(edges.size()) != m)
    throw GraphError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return RedBlueGraph(n, std::move(edges));
}

RedBlueGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

RedBlueGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const RedBlueGraph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << color_letter(e.color) << '\n';
  return out.str();
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Subgraph: return "subgraph";
    case WitnessKind::Tree: return "tree";
    case WitnessKind::Path: return "path";
  }
  return "?";
}

WitnessKind parse_kind(std::string_view s) {
  if (s == "subgraph") return WitnessKind::Subgraph;
  if (s == "tree") return WitnessKind::Tree;
  if (s == "path") return WitnessKind::Path;
  throw std::invalid_argument("unknown kind '" + std::string(s) + "'");
}

Witness normalized(Witness w) {
  std::sort(w.edges.begin(), w.edges.end());
  return w;
}

std::string ValidationReport::to_json() const {
  nlohmann::json j;
  j["valid"] = valid;
  j["failures"] = failures;
  return j.dump();
}

ColorCount count_colors(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges) {
  ColorCount c;
  for (EdgeIndex e : edges) (g.color(e) == EdgeColor::Red ? c.red : c.blue)++;
  return c;
}

std::vector<Vertex> vertices_of(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<Vertex> vs;
  vs.reserve(edges.size() * 2);
  for (EdgeIndex e : edges) {
    vs.push_back(g.edge(e).u);
    vs.push_back(g.edge(e).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

ValidationReport validate_witness(const RedBlueGraph& g, const Witness& w, int k) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.valid = false;
    rep.failures.push_back(std::move(msg));
  };
  if (k < 2 || k % 2 != 0) fail("k must be a positive even integer, got " + std::to_string(k));

  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeIndex e : w.edges) {
    if (e < 0 || e >= g.num_edges()) {
      fail("edge index " + std::to_string(e) + " out of range");
      return rep;
    }
    if (used[static_cast<std::size_t>(e)]) {
      fail("edge index " + std::to_string(e) + " repeated");
      return rep;
    }
    used[static_cast<std::size_t>(e)] = 1;
  }
  if (w.size() != k) fail("size " + std::to_string(w.size()) + " differs from k = " + std::to_string(k));
  const ColorCount cc = count_colors(g, w.edges);
  if (cc.red != cc.blue)
    fail("unbalanced: " + std::to_string(cc.red) + " red vs " + std::to_string(cc.blue) + " blue");
  if (w.edges.empty()) {
    fail("empty edge set");
    return rep;
  }

  const std::vector<Vertex> vs = vertices_of(g, w.edges);
  auto local = [&vs](Vertex x) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
  };
  DisjointSets dsu(static_cast<int>(vs.size()));
  bool cycle = false;
  std::vector<int> deg(vs.size(), 0);
  for (EdgeIndex e : w.edges) {
    const int a = local(g.edge(e).u);
    const int b = local(g.edge(e).v);
    if (!dsu.unite(a, b)) cycle = true;
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  int components = 0;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    if (dsu.find(i) == i) ++components;
  if (components != 1) fail("not connected (" + std::to_string(components) + " components)");

  if (w.kind != WitnessKind::Subgraph && cycle) fail("contains a cycle");
  if (w.kind == WitnessKind::Path && std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; }))
    fail("a vertex has degree greater than 2");
  return rep;
}

OrderedPath order_path(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges) {
  OrderedPath p;
  if (edges.empty()) return p;
  std::vector<Vertex> vs = vertices_of(g, edges);
  std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> local(vs.size());
  auto idx = [&vs](Vertex x) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin()); };
  for (EdgeIndex e : edges) {
    local[idx(g.edge(e).u)].push_back({g.edge(e).v, e});
    local[idx(g.edge(e).v)].push_back({g.edge(e).u, e});
  }
  Vertex start = -1;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (local[i].size() == 1) {
      start = vs[i];
      break;
    }
  if (start < 0) throw std::invalid_argument("edge set is not a path");
  p.vertices.push_back(start);
  Vertex prev = -1;
  Vertex cur = start;
  while (p.edges.size() < edges.size()) {
    bool moved = false;
    for (auto [nb, e] : local[idx(cur)]) {
      if (nb == prev) continue;
      if (!p.edges.empty() && e == p.edges.back()) continue;
      p.edges.push_back(e);
      p.vertices.push_back(nb);
      prev = cur;
      cur = nb;
      moved = true;
      break;
    }
    if (!moved) throw std::invalid_argument("edge set is not a path");
  }
  return p;
}

std::vector<std::vector<Vertex>> VertexColoredGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

VertexColoredGraph line_graph(const RedBlueGraph& g) {
  VertexColoredGraph lg;
  lg.n = g.num_edges();
  lg.vcolor.assign(static_cast<std::size_t>(lg.n) + 1, EdgeColor::Red);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) lg.vcolor[static_cast<std::size_t>(e) + 1] = g.color(e);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e)
    for (EdgeIndex f : g.edge_neighbors(e))
      if (f > e) lg.edges.emplace_back(e + 1, f + 1);
  return lg;
}

bool is_split_partition(const RedBlueGraph& g, const SplitPartition& part) {
  const int n = g.num_vertices();
  std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
  for (int s = 0; s < 2; ++s)
    for (Vertex v : s == 0 ? part.clique : part.independent) {
      if (v < 1 || v > n || side[static_cast<std::size_t>(v)] != -1) return false;
      side[static_cast<std::size_t>(v)] = s;
    }
  if (std::count(side.begin() + 1, side.end(), -1) != 0) return false;
  for (std::size_t a = 0; a < part.clique.size(); ++a)
    for (std::size_t b = a + 1; b < part.clique.size(); ++b)
      if (!g.find_edge(part.clique[a], part.clique[b])) return false;
  for (const Edge& e : g.edges())
    if (side[static_cast<std::size_t>(e.u)] == 1 && side[static_cast<std::size_t>(e.v)] == 1) return false;
  return true;
}

std::optional<SplitPartition> split_partition(const RedBlueGraph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  // Hammer-Simeone: m = max{i : d_i >= i - 1}; split iff the degree sums balance.
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(order[static_cast<std::size_t>(i - 1)]) >= i - 1) m = i;
  long long head = 0;
  long long tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[static_cast<std::size_t>(i)]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

  std::vector<char> in_clique(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < m; ++i) in_clique[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;

  // The last clique vertex may have no neighbour in I; when I is non-empty it
  // moves over, so leaves of a star land on the independent side.
  if (m > 0 && m < n) {
    const Vertex last = order[static_cast<std::size_t>(m - 1)];
    const bool touches_independent = std::any_of(g.incident(last).begin(), g.incident(last).end(),
        [&](const Incidence& inc) { return !in_clique[static_cast<std::size_t>(inc.neighbor)]; });
    if (!touches_independent) in_clique[static_cast<std::size_t>(last)] = 0;
  }

  SplitPartition part;
  for (Vertex v = 1; v <= n; ++v) (in_clique[static_cast<std::size_t>(v)] ? part.clique : part.independent).push_back(v);

  for (std::size_t i = 0; i < part.clique.size(); ++i)
    for (std::size_t j = i + 1; j < part.clique.size(); ++j)
      if (!g.find_edge(part.clique[i], part.clique[j])) return std::nullopt;
  for (const Edge& e : g.edges())
    if (!in_clique[static_cast<std::size_t>(e.u)] && !in_clique[static_cast<std::size_t>(e.v)]) return std::nullopt;
  return part;
}

RedBlueGraph edge_induced(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges) {
  const std::vector<Vertex> vs = vertices_of(g, edges);
  auto local = [&vs](Vertex x) { return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin()) + 1; };
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (EdgeIndex e : edges) out.push_back({local(g.edge(e).u), local(g.edge(e).v), g.color(e)});
  return RedBlueGraph(static_cast<int>(vs.size()), std::move(out));
}

}  // namespace bcslab
