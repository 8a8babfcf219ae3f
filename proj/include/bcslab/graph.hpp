#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcslab {

using Vertex = int;      // 1-based
using EdgeIndex = int;   // 0-based position in input order

enum class EdgeColor : std::uint8_t { Red, Blue };

inline EdgeColor opposite(EdgeColor c) { return c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red; }
char color_letter(EdgeColor c);

struct Edge {
  Vertex u;
  Vertex v;
  EdgeColor color;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
};

struct Incidence {
  Vertex neighbor;
  EdgeIndex edge;
};

/// Thrown by graph construction and parsing. Parse failures carry the
/// offending 1-based line number (0 when not tied to a line).
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

/// Simple undirected graph with a red/blue color on every edge.
/// Vertices are 1..n, edges keep their input order. Immutable once built.
class RedBlueGraph {
 public:
  RedBlueGraph() = default;
  RedBlueGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  EdgeColor color(EdgeIndex e) const { return edge(e).color; }

  /// Incident (neighbor, edge) pairs of v, sorted by neighbor id.
  const std::vector<Incidence>& incident(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  /// Edges sharing exactly one endpoint with e, ascending index.
  std::vector<EdgeIndex> edge_neighbors(EdgeIndex e) const;

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;
  int count_color(EdgeColor c) const;

  friend bool operator==(const RedBlueGraph& a, const RedBlueGraph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const Edge& x = a.edges_[i];
      const Edge& y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || x.color != y.color) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

RedBlueGraph parse_graph(std::istream& in);
RedBlueGraph parse_graph(std::string_view text);
RedBlueGraph read_graph_file(const std::string& path);
std::string serialize_graph(const RedBlueGraph& g);

enum class WitnessKind : std::uint8_t { Subgraph, Tree, Path };

std::string_view to_string(WitnessKind kind);
WitnessKind parse_kind(std::string_view s);

struct Witness {
  WitnessKind kind = WitnessKind::Subgraph;
  std::vector<EdgeIndex> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Witness with its edge list sorted ascending; paths included.
Witness normalized(Witness w);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;

  std::string to_json() const;
};

/// Checks that w is a balanced connected subgraph/tree/path of exactly k edges.
ValidationReport validate_witness(const RedBlueGraph& g, const Witness& w, int k);

/// Red/blue counts of an edge set.
struct ColorCount {
  int red = 0;
  int blue = 0;
};
ColorCount count_colors(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges);

/// Distinct endpoints of an edge set, ascending.
std::vector<Vertex> vertices_of(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges);

/// Edges of a valid path witness in walk order, with the visited vertices
/// (edges.size() + 1 of them). The walk starts at the smaller endpoint.
struct OrderedPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;
};
OrderedPath order_path(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges);

/// Vertex-colored simple graph; vertices are 1..n.
struct VertexColoredGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<EdgeColor> vcolor;  // index 1..n, slot 0 unused

  std::vector<std::vector<Vertex>> adjacency() const;
};

/// Vertex i+1 of the result is edge i of g, colored like it.
VertexColoredGraph line_graph(const RedBlueGraph& g);

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

std::optional<SplitPartition> split_partition(const RedBlueGraph& g);

/// Parts cover V exactly once, the clique is complete and the rest is edgeless.
bool is_split_partition(const RedBlueGraph& g, const SplitPartition& part);

/// Subgraph on the given edges, vertices renumbered 1..|V(edges)| in
/// ascending order of original id. Edge i of the result is edges[i].
RedBlueGraph edge_induced(const RedBlueGraph& g, const std::vector<EdgeIndex>& edges);

}  // namespace bcslab
