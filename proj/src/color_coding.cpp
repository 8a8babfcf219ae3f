#include "bcslab/color_coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <string>

namespace bcslab {

namespace {

using Mask = std::uint32_t;

constexpr int kMaxLabels = 24;

void check_k(int k, int labels) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer, got " + std::to_string(k));
  if (labels > kMaxLabels) throw std::invalid_argument("colorful DP supports at most " + std::to_string(kMaxLabels) + " labels");
}

int popcount(Mask m) { return std::popcount(m); }

Mask bit(int label) { return Mask{1} << label; }

// Masks of [labels] grouped by popcount, ascending numerically inside a group.
std::vector<std::vector<Mask>> masks_by_size(int labels) {
  std::vector<std::vector<Mask>> out(static_cast<std::size_t>(labels) + 1);
  for (Mask m = 0; m < (Mask{1} << labels); ++m) out[static_cast<std::size_t>(popcount(m))].push_back(m);
  return out;
}

// Dense 0/1 table over (mask, red count, slot).
class Table {
 public:
  Table(int labels, int half, int slots)
      : half_(half), slots_(slots),
        data_((std::size_t{1} << labels) * static_cast<std::size_t>(half + 1) * static_cast<std::size_t>(slots), 0) {}

  bool get(Mask m, int r, int slot) const {
    if (r < 0 || r > half_) return false;
    return data_[index(m, r, slot)] != 0;
  }
  void set(Mask m, int r, int slot) { data_[index(m, r, slot)] = 1; }
  std::uint64_t count() const { return static_cast<std::uint64_t>(std::count(data_.begin(), data_.end(), 1)); }

 private:
  std::size_t index(Mask m, int r, int slot) const {
    return (static_cast<std::size_t>(m) * static_cast<std::size_t>(half_ + 1) + static_cast<std::size_t>(r)) *
               static_cast<std::size_t>(slots_) +
           static_cast<std::size_t>(slot);
  }

  int half_;
  int slots_;
  std::vector<std::uint8_t> data_;
};

int is_red(const RedBlueGraph& g, EdgeIndex e) { return g.color(e) == EdgeColor::Red ? 1 : 0; }

// ---------------------------------------------------------------- subgraph

class BcsDp {
 public:
  BcsDp(const RedBlueGraph& g, const EdgeColoring& sigma, int k)
      : g_(g), sigma_(sigma), k_(k), half_(k / 2), lam_(k, k / 2, g.num_edges()),
        near_(k, k / 2, g.num_vertices() + 1) {}

  ColorfulResult run() {
    ColorfulResult res;
    const auto groups = masks_by_size(k_);
    for (int size = 1; size <= k_; ++size) {
      for (Mask L : groups[static_cast<std::size_t>(size)])
        for (EdgeIndex e = 0; e < g_.num_edges(); ++e) {
          if (!(L & bit(label(e)))) continue;
          for (int r = 0; r <= half_; ++r)
            if (holds(e, L, r)) lam_.set(L, r, e);
        }
      for (Mask L : groups[static_cast<std::size_t>(size)])
        for (int r = 0; r <= half_; ++r)
          for (EdgeIndex e = 0; e < g_.num_edges(); ++e)
            if (lam_.get(L, r, e)) {
              near_.set(L, r, g_.edge(e).u);
              near_.set(L, r, g_.edge(e).v);
            }
    }
    res.entries = lam_.count();
    const Mask full = (Mask{1} << k_) - 1;
    for (EdgeIndex e = 0; e < g_.num_edges(); ++e)
      if (lam_.get(full, half_, e)) {
        Witness w{WitnessKind::Subgraph, {}};
        rebuild(e, full, half_, w.edges);
        std::sort(w.edges.begin(), w.edges.end());
        res.witness = std::move(w);
        break;
      }
    return res;
  }

 private:
  int label(EdgeIndex e) const { return sigma_.label[static_cast<std::size_t>(e)]; }

  bool near(EdgeIndex e, Mask L, int r) const {
    const int b = popcount(L) - r;
    if (b < 0 || b > half_) return false;
    return near_.get(L, r, g_.edge(e).u) || near_.get(L, r, g_.edge(e).v);
  }

  bool valid_counts(Mask L, int r) const {
    const int b = popcount(L) - r;
    return r >= 0 && r <= half_ && b >= 0 && b <= half_;
  }

  bool holds(EdgeIndex e, Mask L, int r) const {
    if (!valid_counts(L, r)) return false;
    const int red = is_red(g_, e);
    const int r0 = r - red;
    if (r0 < 0 || popcount(L) - r - (1 - red) < 0) return false;
    const Mask rest = L & ~bit(label(e));
    if (rest == 0) return true;
    if (near(e, rest, r0)) return true;
    return split(e, rest, r0).has_value();
  }

  struct Split {
    Mask a;
    int ra;
  };

  std::optional<Split> split(EdgeIndex e, Mask rest, int r0) const {
    const Mask low = rest & (~rest + 1);
    for (Mask a = (rest - 1) & rest; a != 0; a = (a - 1) & rest) {
      if (!(a & low)) continue;
      const Mask b = rest ^ a;
      for (int ra = 0; ra <= std::min(r0, popcount(a)); ++ra)
        if (valid_counts(a, ra) && valid_counts(b, r0 - ra) && near(e, a, ra) && near(e, b, r0 - ra))
          return Split{a, ra};
    }
    return std::nullopt;
  }

  // First neighbor edge of e (ascending index) with a true entry.
  std::optional<EdgeIndex> pick(EdgeIndex e, Mask L, int r) const {
    for (EdgeIndex f : g_.edge_neighbors(e))
      if (lam_.get(L, r, f)) return f;
    return std::nullopt;
  }

  void rebuild(EdgeIndex e, Mask L, int r, std::vector<EdgeIndex>& out) const {
    out.push_back(e);
    const Mask rest = L & ~bit(label(e));
    if (rest == 0) return;
    const int r0 = r - is_red(g_, e);
    if (near(e, rest, r0)) {
      rebuild(*pick(e, rest, r0), rest, r0, out);
      return;
    }
    const Split s = *split(e, rest, r0);
    rebuild(*pick(e, s.a, s.ra), s.a, s.ra, out);
    rebuild(*pick(e, rest ^ s.a, r0 - s.ra), rest ^ s.a, r0 - s.ra, out);
  }

  const RedBlueGraph& g_;
  const EdgeColoring& sigma_;
  int k_;
  int half_;
  Table lam_;
  Table near_;  // near_(L, r, v): some edge at v has a true entry
};

// -------------------------------------------------------------------- tree

class BtDp {
 public:
  BtDp(const RedBlueGraph& g, const VertexColoring& tau, int k)
      : g_(g), tau_(tau), labels_(k + 1), half_(k / 2), lam_(k + 1, k / 2, g.num_edges()),
        at_(k + 1, k / 2, g.num_vertices() + 1) {}

  ColorfulResult run() {
    ColorfulResult res;
    const auto groups = masks_by_size(labels_);
    for (int size = 2; size <= labels_; ++size) {
      for (Mask L : groups[static_cast<std::size_t>(size)])
        for (EdgeIndex e = 0; e < g_.num_edges(); ++e)
          for (int r = 0; r <= half_; ++r)
            if (holds(e, L, r)) lam_.set(L, r, e);
      for (Mask L : groups[static_cast<std::size_t>(size)])
        for (int r = 0; r <= half_; ++r)
          for (EdgeIndex e = 0; e < g_.num_edges(); ++e)
            if (lam_.get(L, r, e)) {
              at_.set(L, r, g_.edge(e).u);
              at_.set(L, r, g_.edge(e).v);
            }
    }
    res.entries = lam_.count();
    const Mask full = (Mask{1} << labels_) - 1;
    for (EdgeIndex e = 0; e < g_.num_edges(); ++e)
      if (lam_.get(full, half_, e)) {
        Witness w{WitnessKind::Tree, {}};
        rebuild(e, full, half_, w.edges);
        std::sort(w.edges.begin(), w.edges.end());
        res.witness = std::move(w);
        break;
      }
    return res;
  }

 private:
  int label(Vertex v) const { return tau_.label[static_cast<std::size_t>(v)]; }

  bool valid_counts(Mask L, int r) const {
    const int b = popcount(L) - 1 - r;
    return r >= 0 && r <= half_ && b >= 0 && b <= half_;
  }

  // A true entry on some edge at v with label set L and r red edges.
  bool tree_at(Vertex v, Mask L, int r) const { return valid_counts(L, r) && at_.get(L, r, v); }

  struct Step {
    enum Kind { LeafU, LeafV, Split } kind;
    Mask side_v = 0;
    int r_v = 0;
  };

  std::optional<Step> decompose(EdgeIndex e, Mask L, int r) const {
    const Edge& ed = g_.edge(e);
    const Mask bu = bit(label(ed.u));
    const Mask bv = bit(label(ed.v));
    const int r0 = r - is_red(g_, e);
    if (r0 < 0) return std::nullopt;
    if (tree_at(ed.v, L & ~bu, r0)) return Step{Step::LeafU};
    if (tree_at(ed.u, L & ~bv, r0)) return Step{Step::LeafV};
    const Mask free = L & ~bu & ~bv;
    for (Mask a = free;; a = (a - 1) & free) {
      const Mask side_v = a | bv;
      const Mask side_u = L ^ side_v;
      if (popcount(side_v) >= 2 && popcount(side_u) >= 2)
        for (int rv = 0; rv <= r0; ++rv)
          if (tree_at(ed.v, side_v, rv) && tree_at(ed.u, side_u, r0 - rv)) return Step{Step::Split, side_v, rv};
      if (a == 0) break;
    }
    return std::nullopt;
  }

  bool holds(EdgeIndex e, Mask L, int r) const {
    if (!valid_counts(L, r)) return false;
    const Edge& ed = g_.edge(e);
    const Mask bu = bit(label(ed.u));
    const Mask bv = bit(label(ed.v));
    if (bu == bv || !(L & bu) || !(L & bv)) return false;
    const int red = is_red(g_, e);
    if (popcount(L) == 2) return r == red;
    if (r - red < 0 || popcount(L) - 1 - r - (1 - red) < 0) return false;
    return decompose(e, L, r).has_value();
  }

  std::optional<EdgeIndex> pick(Vertex x, EdgeIndex skip, Mask L, int r) const {
    for (const Incidence& inc : g_.incident(x))
      if (inc.edge != skip && lam_.get(L, r, inc.edge)) return inc.edge;
    return std::nullopt;
  }

  void rebuild(EdgeIndex e, Mask L, int r, std::vector<EdgeIndex>& out) const {
    out.push_back(e);
    if (popcount(L) == 2) return;
    const Edge& ed = g_.edge(e);
    const int r0 = r - is_red(g_, e);
    const Step s = *decompose(e, L, r);
    const Mask bu = bit(label(ed.u));
    const Mask bv = bit(label(ed.v));
    if (s.kind == Step::LeafU) {
      rebuild(*pick(ed.v, e, L & ~bu, r0), L & ~bu, r0, out);
    } else if (s.kind == Step::LeafV) {
      rebuild(*pick(ed.u, e, L & ~bv, r0), L & ~bv, r0, out);
    } else {
      rebuild(*pick(ed.v, e, s.side_v, s.r_v), s.side_v, s.r_v, out);
      rebuild(*pick(ed.u, e, L ^ s.side_v, r0 - s.r_v), L ^ s.side_v, r0 - s.r_v, out);
    }
  }

  const RedBlueGraph& g_;
  const VertexColoring& tau_;
  int labels_;
  int half_;
  Table lam_;
  Table at_;
};

// -------------------------------------------------------------------- path

class PathDp {
 public:
  PathDp(const RedBlueGraph& g, const VertexColoring& tau, int k)
      : g_(g), tau_(tau), labels_(k + 1), half_(k / 2), d_(k + 1, k / 2, g.num_vertices() + 1) {}

  ColorfulResult run() {
    ColorfulResult res;
    const int n = g_.num_vertices();
    for (Vertex v = 1; v <= n; ++v) d_.set(bit(label(v)), 0, v);
    const auto groups = masks_by_size(labels_);
    for (int size = 2; size <= labels_; ++size)
      for (Mask L : groups[static_cast<std::size_t>(size)])
        for (int r = 0; r <= half_; ++r) {
          const int b = size - 1 - r;
          if (b < 0 || b > half_) continue;
          for (Vertex v = 1; v <= n; ++v)
            if ((L & bit(label(v))) && previous(v, L, r)) d_.set(L, r, v);
        }
    res.entries = d_.count();
    const Mask full = (Mask{1} << labels_) - 1;
    for (Vertex v = 1; v <= n; ++v)
      if (d_.get(full, half_, v)) {
        Witness w{WitnessKind::Path, {}};
        Mask L = full;
        int r = half_;
        Vertex x = v;
        while (popcount(L) > 1) {
          const Incidence inc = *previous(x, L, r);
          w.edges.push_back(inc.edge);
          r -= is_red(g_, inc.edge);
          L &= ~bit(label(x));
          x = inc.neighbor;
        }
        std::sort(w.edges.begin(), w.edges.end());
        res.witness = std::move(w);
        break;
      }
    return res;
  }

 private:
  int label(Vertex v) const { return tau_.label[static_cast<std::size_t>(v)]; }

  // The first incidence at v that extends a shorter colorful path to v.
  std::optional<Incidence> previous(Vertex v, Mask L, int r) const {
    const Mask rest = L & ~bit(label(v));
    for (const Incidence& inc : g_.incident(v)) {
      const int r0 = r - is_red(g_, inc.edge);
      if (r0 >= 0 && d_.get(rest, r0, inc.neighbor)) return inc;
    }
    return std::nullopt;
  }

  const RedBlueGraph& g_;
  const VertexColoring& tau_;
  int labels_;
  int half_;
  Table d_;
};

void check_labels(const std::vector<int>& label, std::size_t expect, int labels, const char* what) {
  if (label.size() != expect) throw std::invalid_argument(std::string(what) + " coloring has the wrong length");
  for (int x : label)
    if (x < 0 || x >= labels) throw std::invalid_argument(std::string(what) + " label out of range");
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::optional<Witness> run_kind(const RedBlueGraph& g, int k, WitnessKind kind, const std::vector<int>& labels) {
  if (kind == WitnessKind::Subgraph) return colorful_bcs_dp(g, EdgeColoring{labels}, k).witness;
  VertexColoring tau{std::vector<int>(static_cast<std::size_t>(g.num_vertices()) + 1, 0)};
  std::copy(labels.begin(), labels.end(), tau.label.begin() + 1);
  return kind == WitnessKind::Tree ? colorful_bt_dp(g, tau, k).witness : colorful_ebp_dp(g, tau, k).witness;
}

}  // namespace

ColorfulResult colorful_bcs_dp(const RedBlueGraph& g, const EdgeColoring& sigma, int k) {
  check_k(k, k);
  check_labels(sigma.label, static_cast<std::size_t>(g.num_edges()), k, "edge");
  return BcsDp(g, sigma, k).run();
}

ColorfulResult colorful_bt_dp(const RedBlueGraph& g, const VertexColoring& tau, int k) {
  check_k(k, k + 1);
  check_labels(std::vector<int>(tau.label.begin() + (tau.label.empty() ? 0 : 1), tau.label.end()),
               static_cast<std::size_t>(g.num_vertices()), k + 1, "vertex");
  return BtDp(g, tau, k).run();
}

ColorfulResult colorful_ebp_dp(const RedBlueGraph& g, const VertexColoring& tau, int k) {
  check_k(k, k + 1);
  check_labels(std::vector<int>(tau.label.begin() + (tau.label.empty() ? 0 : 1), tau.label.end()),
               static_cast<std::size_t>(g.num_vertices()), k + 1, "vertex");
  return PathDp(g, tau, k).run();
}

std::uint64_t coloring_trials(int labels, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(std::exp(static_cast<double>(labels)) * std::log(1.0 / delta)));
}

std::optional<Witness> random_coloring_driver(const RedBlueGraph& g, int k, WitnessKind kind, double delta,
                                              std::uint64_t seed) {
  const int labels = kind == WitnessKind::Subgraph ? k : k + 1;
  check_k(k, labels);
  const std::uint64_t trials = coloring_trials(labels, delta);
  const std::size_t universe =
      static_cast<std::size_t>(kind == WitnessKind::Subgraph ? g.num_edges() : g.num_vertices());
  if (g.count_color(EdgeColor::Red) < k / 2 || g.count_color(EdgeColor::Blue) < k / 2) return std::nullopt;
  std::vector<int> coloring(universe);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, t);
    std::uniform_int_distribution<int> pick(0, labels - 1);
    for (int& c : coloring) c = pick(rng);
    if (auto w = run_kind(g, k, kind, coloring)) return w;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> greedy_hash_family(int universe, int p, std::uint64_t seed) {
  if (universe < 0 || p < 1) throw std::invalid_argument("greedy_hash_family: bad arguments");
  std::vector<int> identity(static_cast<std::size_t>(universe));
  for (int i = 0; i < universe; ++i) identity[static_cast<std::size_t>(i)] = std::min(i, p - 1);
  if (universe <= p) return {identity};
  if (universe > 63 || p > 30) throw ScaleLimitError("greedy_hash_family: universe or p too large");
  double subsets = 1.0;
  for (int i = 0; i < p; ++i) subsets = subsets * (universe - i) / (i + 1);
  if (subsets > 2.0e6) throw ScaleLimitError("greedy_hash_family: C(" + std::to_string(universe) + ", " +
                                            std::to_string(p) + ") subsets is beyond the greedy cover's scale");

  // All p-subsets of [universe] as bitmasks, via Gosper's hack.
  std::vector<std::uint64_t> open;
  const std::uint64_t limit = std::uint64_t{1} << universe;
  for (std::uint64_t s = (std::uint64_t{1} << p) - 1; s < limit;) {
    open.push_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }

  const std::uint32_t full = (std::uint32_t{1} << p) - 1;
  auto rainbow = [&](const std::vector<int>& col, std::uint64_t s) {
    std::uint32_t seen = 0;
    for (std::uint64_t x = s; x; x &= x - 1) seen |= std::uint32_t{1} << col[static_cast<std::size_t>(std::countr_zero(x))];
    return seen == full;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, p - 1);
  std::vector<std::vector<int>> family;
  constexpr int kCandidates = 16;
  while (!open.empty()) {
    std::vector<int> best;
    std::size_t best_cover = 0;
    for (int c = 0; c < kCandidates; ++c) {
      std::vector<int> col(static_cast<std::size_t>(universe));
      for (int& x : col) x = pick(rng);
      // Force the first open subset to be rainbow so every round makes progress.
      int next = 0;
      for (std::uint64_t x = open.front(); x; x &= x - 1) col[static_cast<std::size_t>(std::countr_zero(x))] = next++;
      std::size_t cover = 0;
      for (std::uint64_t s : open) cover += rainbow(col, s) ? 1 : 0;
      if (cover > best_cover) {
        best_cover = cover;
        best = std::move(col);
      }
    }
    std::erase_if(open, [&](std::uint64_t s) { return rainbow(best, s); });
    family.push_back(std::move(best));
  }
  return family;
}

std::optional<Witness> hash_family_solve(const RedBlueGraph& g, int k, WitnessKind kind) {
  const int labels = kind == WitnessKind::Subgraph ? k : k + 1;
  check_k(k, labels);
  const int universe = kind == WitnessKind::Subgraph ? g.num_edges() : g.num_vertices();
  if (universe < labels && kind == WitnessKind::Subgraph) return std::nullopt;
  if (g.count_color(EdgeColor::Red) < k / 2 || g.count_color(EdgeColor::Blue) < k / 2) return std::nullopt;

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  const std::vector<std::vector<int>>* family = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({universe, labels});
    if (it == cache.end()) it = cache.emplace(std::make_pair(universe, labels), greedy_hash_family(universe, labels)).first;
    family = &it->second;  // map nodes are stable
  }
  for (const std::vector<int>& col : *family)
    if (auto w = run_kind(g, k, kind, col)) return w;
  return std::nullopt;
}

}  // namespace bcslab
