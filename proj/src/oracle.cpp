#include "bcslab/oracle.hpp"

#include <algorithm>
#include <string>

namespace bcslab {

namespace {

void require_even(int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer, got " + std::to_string(k));
}

// Enumerates connected edge sets whose smallest index is `root`, branching
// include/exclude on the smallest frontier edge. Every set is reached at one
// leaf only: sibling branches disagree on the branching edge.
class Enumerator {
 public:
  Enumerator(const RedBlueGraph& g, int k, WitnessKind kind, std::uint64_t budget,
             const std::function<bool(const std::vector<EdgeIndex>&)>& visit)
      : g_(g), k_(k), half_(k / 2), kind_(kind), budget_(budget), visit_(visit),
        in_set_(static_cast<std::size_t>(g.num_edges()), 0),
        excluded_(static_cast<std::size_t>(g.num_edges()), 0),
        deg_(static_cast<std::size_t>(g.num_vertices()) + 1, 0) {}

  // Returns false once the visitor asked to stop.
  bool run() {
    for (EdgeIndex r = 0; r < g_.num_edges() && !stopped_; ++r) {
      root_ = r;
      add(r);
      grow();
      remove(r);
    }
    return !stopped_;
  }

 private:
  void add(EdgeIndex e) {
    in_set_[static_cast<std::size_t>(e)] = 1;
    set_.push_back(e);
    const Edge& ed = g_.edge(e);
    for (Vertex x : {ed.u, ed.v})
      if (deg_[static_cast<std::size_t>(x)]++ == 0) verts_.push_back(x);
    (ed.color == EdgeColor::Red ? red_ : blue_)++;
  }

  void remove(EdgeIndex e) {
    in_set_[static_cast<std::size_t>(e)] = 0;
    set_.pop_back();
    const Edge& ed = g_.edge(e);
    for (Vertex x : {ed.v, ed.u})
      if (--deg_[static_cast<std::size_t>(x)] == 0) verts_.erase(std::find(verts_.begin(), verts_.end(), x));
    (ed.color == EdgeColor::Red ? red_ : blue_)--;
  }

  std::optional<EdgeIndex> frontier() const {
    std::optional<EdgeIndex> best;
    for (Vertex x : verts_)
      for (const Incidence& inc : g_.incident(x)) {
        const EdgeIndex e = inc.edge;
        if (e <= root_ || in_set_[static_cast<std::size_t>(e)] || excluded_[static_cast<std::size_t>(e)]) continue;
        if (!best || e < *best) best = e;
      }
    return best;
  }

  bool can_include(EdgeIndex e) const {
    const Edge& ed = g_.edge(e);
    if (ed.color == EdgeColor::Red ? red_ >= half_ : blue_ >= half_) return false;
    if (kind_ == WitnessKind::Subgraph) return true;
    const int du = deg_[static_cast<std::size_t>(ed.u)];
    const int dv = deg_[static_cast<std::size_t>(ed.v)];
    if (du > 0 && dv > 0) return false;  // closes a cycle
    if (kind_ == WitnessKind::Path && std::max(du, dv) >= 2) return false;
    return true;
  }

  void grow() {
    if (stopped_) return;
    if (++nodes_ > budget_)
      throw ResourceLimitError("oracle enumeration budget of " + std::to_string(budget_) + " nodes exceeded");
    if (static_cast<int>(set_.size()) == k_) {
      if (red_ == blue_) {
        std::vector<EdgeIndex> sorted = set_;
        std::sort(sorted.begin(), sorted.end());
        if (!visit_(sorted)) stopped_ = true;
      }
      return;
    }
    const std::optional<EdgeIndex> f = frontier();
    if (!f) return;
    if (can_include(*f)) {
      add(*f);
      grow();
      remove(*f);
    }
    excluded_[static_cast<std::size_t>(*f)] = 1;
    grow();
    excluded_[static_cast<std::size_t>(*f)] = 0;
  }

  const RedBlueGraph& g_;
  int k_;
  int half_;
  WitnessKind kind_;
  std::uint64_t budget_;
  const std::function<bool(const std::vector<EdgeIndex>&)>& visit_;
  std::vector<char> in_set_;
  std::vector<char> excluded_;
  std::vector<int> deg_;
  std::vector<Vertex> verts_;
  std::vector<EdgeIndex> set_;
  EdgeIndex root_ = 0;
  int red_ = 0;
  int blue_ = 0;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

void oracle_enumerate(const RedBlueGraph& g, int k, WitnessKind kind,
                      const std::function<bool(const std::vector<EdgeIndex>&)>& visit, const OracleOptions& opts) {
  require_even(k);
  if (g.count_color(EdgeColor::Red) < k / 2 || g.count_color(EdgeColor::Blue) < k / 2) return;
  Enumerator(g, k, kind, opts.budget, visit).run();
}

std::optional<Witness> oracle_solve(const RedBlueGraph& g, int k, WitnessKind kind, SolveMode mode,
                                    const OracleOptions& opts) {
  require_even(k);
  const int limit = 2 * std::min(g.count_color(EdgeColor::Red), g.count_color(EdgeColor::Blue));
  const int last = mode == SolveMode::Exact ? k : limit;
  for (int size = k; size <= last; size += 2) {
    std::optional<Witness> found;
    oracle_enumerate(g, size, kind, [&](const std::vector<EdgeIndex>& edges) {
      found = Witness{kind, edges};
      return false;
    }, opts);
    if (found) return found;
  }
  return std::nullopt;
}

std::uint64_t oracle_count(const RedBlueGraph& g, int k, WitnessKind kind, const OracleOptions& opts) {
  std::uint64_t count = 0;
  oracle_enumerate(g, k, kind, [&count](const std::vector<EdgeIndex>&) {
    ++count;
    return true;
  }, opts);
  return count;
}

}  // namespace bcslab
