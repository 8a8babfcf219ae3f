#include "bcslab/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace bcslab {

namespace {

// Pair (a, b), a < b, of 0-based vertices in lexicographic order.
struct PairTable {
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> index;  // n*n, -1 on the diagonal

  explicit PairTable(int n_) : n(n_), index(static_cast<std::size_t>(n_ * n_), -1) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        index[static_cast<std::size_t>(a * n + b)] = index[static_cast<std::size_t>(b * n + a)] =
            static_cast<int>(pairs.size());
        pairs.emplace_back(a, b);
      }
  }
};

// A labeled graph as one symbol per pair (0 = none, 1 = red, 2 = blue).
// It is kept iff no vertex permutation yields a lexicographically smaller
// symbol string.
bool is_canonical(const PairTable& t, const std::vector<int>& code, const std::vector<std::vector<int>>& perms) {
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
      const auto [a, b] = t.pairs[i];
      const int other =
          code[static_cast<std::size_t>(t.index[static_cast<std::size_t>(p[static_cast<std::size_t>(a)] * t.n +
                                                                         p[static_cast<std::size_t>(b)])])];
      if (other < code[i]) return false;
      if (other > code[i]) break;
    }
  }
  return true;
}

std::vector<RedBlueGraph> enumerate(int n, int symbols) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports 1..7 vertices");
  const PairTable t(n);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<RedBlueGraph> out;
  std::vector<int> code(t.pairs.size(), 0);
  for (;;) {
    if (is_canonical(t, code, perms)) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < code.size(); ++i)
        if (code[i] != 0)
          edges.push_back({t.pairs[i].first + 1, t.pairs[i].second + 1,
                           code[i] == 1 ? EdgeColor::Red : EdgeColor::Blue});
      out.emplace_back(n, std::move(edges));
    }
    std::size_t i = 0;
    while (i < code.size() && code[i] == symbols - 1) code[i++] = 0;
    if (i == code.size()) break;
    ++code[i];
  }
  return out;
}

// AHU string of the tree rooted at r.
std::string ahu(const std::vector<std::vector<int>>& adj, int r, int parent) {
  std::vector<std::string> kids;
  for (int c : adj[static_cast<std::size_t>(r)])
    if (c != parent) kids.push_back(ahu(adj, c, r));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string tree_code(const std::vector<std::vector<int>>& adj) {
  std::string best;
  for (int r = 0; r < static_cast<int>(adj.size()); ++r) {
    std::string s = ahu(adj, r, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace

std::vector<RedBlueGraph> all_red_blue_graphs(int n) { return enumerate(n, 3); }

std::vector<RedBlueGraph> all_simple_graphs(int n) { return enumerate(n, 2); }

std::vector<RedBlueGraph> all_trees(int edges) {
  if (edges < 0 || edges > 14) throw std::invalid_argument("all_trees supports 0..14 edges");
  std::map<std::string, std::vector<std::vector<int>>> level{{"()", {{}}}};
  for (int e = 0; e < edges; ++e) {
    std::map<std::string, std::vector<std::vector<int>>> next;
    for (const auto& [code, adj] : level)
      for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        auto grown = adj;
        const int leaf = static_cast<int>(grown.size());
        grown.emplace_back(1, v);
        grown[static_cast<std::size_t>(v)].push_back(leaf);
        std::string c = tree_code(grown);
        next.emplace(std::move(c), std::move(grown));
      }
    level = std::move(next);
  }
  std::vector<RedBlueGraph> out;
  for (const auto& [code, adj] : level) {
    std::vector<Edge> es;
    for (int a = 0; a < static_cast<int>(adj.size()); ++a)
      for (int b : adj[static_cast<std::size_t>(a)])
        if (a < b) es.push_back({a + 1, b + 1, EdgeColor::Red});
    out.emplace_back(static_cast<int>(adj.size()), std::move(es));
  }
  return out;
}

RedBlueGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution present(p);
  std::bernoulli_distribution red(0.5);
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (present(rng)) edges.push_back({a, b, red(rng) ? EdgeColor::Red : EdgeColor::Blue});
  return RedBlueGraph(n, std::move(edges));
}

std::vector<RedBlueGraph> random_corpus(int count, int n_min, int n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(n_min, n_max);
  std::uniform_real_distribution<double> density(0.25, 0.75);
  std::vector<RedBlueGraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = size(rng);
    const double p = density(rng);
    out.push_back(random_graph(n, p, rng));
  }
  return out;
}

std::vector<RedBlueGraph> default_corpus(std::uint64_t seed) {
  std::vector<RedBlueGraph> out = all_red_blue_graphs(5);
  for (auto& g : random_corpus(200, 6, 8, seed)) out.push_back(std::move(g));
  return out;
}

RedBlueGraph recolor(const RedBlueGraph& g, const std::vector<EdgeColor>& colors) {
  if (colors.size() != static_cast<std::size_t>(g.num_edges())) throw std::invalid_argument("recolor: size mismatch");
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].color = colors[i];
  return RedBlueGraph(g.num_vertices(), std::move(edges));
}

int thread_count() {
  if (const char* env = std::getenv("BCSLAB_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace bcslab
