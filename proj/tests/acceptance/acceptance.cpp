// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bcslab/algebraic.hpp"
#include "bcslab/color_coding.hpp"
#include "bcslab/corpus.hpp"
#include "bcslab/harness.hpp"
#include "bcslab/oracle.hpp"
#include "bcslab/reductions.hpp"
#include "bcslab/rep_sets.hpp"
#include "bcslab/shrink.hpp"
#include "bcslab/split_solver.hpp"
#include "support/brute.hpp"

using namespace bcslab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

std::vector<RedBlueGraph> recolorings(const RedBlueGraph& shape) {
  std::vector<RedBlueGraph> out;
  const int m = shape.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<EdgeColor> cols;
    for (int e = 0; e < m; ++e) cols.push_back(mask >> e & 1 ? EdgeColor::Blue : EdgeColor::Red);
    out.push_back(recolor(shape, cols));
  }
  return out;
}

Witness everything(const RedBlueGraph& g, WitnessKind kind) {
  Witness w{kind, {}};
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) w.edges.push_back(e);
  return w;
}

// 1. Oracle equivalence of every solver on the default corpus.
void oracle_equivalence(Outcome& o) {
  const auto start = Clock::now();
  const auto corpus = default_corpus(1);
  CrosscheckOptions opts;
  opts.ks = {2, 4};
  opts.algebraic_trials = 32;
  opts.ell = 64;
  const CrosscheckReport rep = crosscheck(corpus, opts);
  const double secs = seconds_since(start);
  o.note << rep.instances << " graphs, " << rep.checks << " checks, " << rep.oracle_yes << " yes;";
  for (const auto& t : rep.tallies) {
    o.note << ' ' << t.solver << " runs=" << t.runs << " fp=" << t.false_positives << " fn=" << t.false_negatives
           << " bad=" << t.invalid_witnesses << ';';
    if (t.false_positives || t.false_negatives || t.invalid_witnesses) o.fail(t.solver + " disagrees with the oracle");
  }
  if (!rep.disagreements.empty()) o.fail(std::to_string(rep.disagreements.size()) + " disagreements");
  const auto* alg = rep.tally("algebraic");
  if (!alg || alg->oracle_yes == 0) o.fail("no YES instances for the algebraic solver");
  o.note << " " << secs << " s";
  if (secs > 600) o.fail("slower than 10 minutes");
}

// 2. Split graphs: presence iff both color classes have k/2 edges.
void split_characterization(Outcome& o) {
  std::uint64_t graphs = 0, colorings = 0, checks = 0, yes = 0;
  for (int n = 1; n <= 6; ++n)
    for (const RedBlueGraph& shape : all_simple_graphs(n)) {
      if (!brute::is_split(shape)) continue;
      ++graphs;
      for (const RedBlueGraph& g : recolorings(shape)) {
        ++colorings;
        for (int k = 2; k <= std::max(2, g.num_edges() + 2); k += 2) {
          ++checks;
          const auto w = solve_split_ebcs(g, k);
          const bool expect =
              g.count_color(EdgeColor::Red) >= k / 2 && g.count_color(EdgeColor::Blue) >= k / 2;
          if (w.has_value() != expect) o.fail("presence mismatch");
          if (!w) continue;
          ++yes;
          if (w->size() != k || !brute::satisfies(g, w->edges, WitnessKind::Subgraph) ||
              !validate_witness(g, *w, k).valid)
            o.fail("invalid witness");
        }
      }
    }
  o.note << graphs << " split shapes (n <= 6), " << colorings << " colorings, " << checks << " (graph, k) checks, "
         << yes << " witnesses";
}

// 3. Shrinking on paths, trees and generated subgraphs.
void shrinking(Outcome& o) {
  std::uint64_t paths = 0, trees = 0, subs = 0;
  auto single = [&](const RedBlueGraph& g, const Witness& in, const Witness& out, int k) {
    if (out.size() >= in.size() || out.size() < k || out.kind != in.kind || !brute::satisfies(g, out.edges, in.kind))
      o.fail(std::string("bad single step on a ") + std::string(to_string(in.kind)));
  };
  auto iterated = [&](const RedBlueGraph& g, const Witness& in, int k, int hi) {
    const Witness out = shrink_to_range(g, in, k);
    if (out.size() < k || out.size() > hi || !brute::satisfies(g, out.edges, in.kind))
      o.fail(std::string("iterated ") + std::string(to_string(in.kind)) + " outside its range");
  };
  const int k = 2;
  for (int len = 2; len <= 12; len += 2) {
    std::vector<Edge> edges;
    for (int i = 1; i <= len; ++i) edges.push_back({i, i + 1, EdgeColor::Red});
    for (const RedBlueGraph& g : recolorings(RedBlueGraph(len + 1, edges))) {
      if (2 * g.count_color(EdgeColor::Red) != len) continue;
      ++paths;
      const Witness in = everything(g, WitnessKind::Path);
      if (len >= 2 * k) single(g, in, shrink_path(g, in, k), k);
      iterated(g, in, k, 2 * k - 1);
    }
  }
  for (int e = 2; e <= 10; e += 2)
    for (const RedBlueGraph& shape : all_trees(e))
      for (const RedBlueGraph& g : recolorings(shape)) {
        if (2 * g.count_color(EdgeColor::Red) != e) continue;
        ++trees;
        const Witness in = everything(g, WitnessKind::Tree);
        if (e >= 3 * k + 2) single(g, in, shrink_tree(g, in, k), k);
        iterated(g, in, k, 3 * k + 1);
      }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const int kk = i % 2 ? 4 : 2;
    // Random connected graph: a random spanning tree plus extra edges.
    const int n = 6 + static_cast<int>(rng() % 9);
    std::set<std::pair<int, int>> es;
    for (int v = 2; v <= n; ++v) es.insert({1 + static_cast<int>(rng() % (v - 1)), v});
    const int target = std::max(3 * kk + 3, n - 1) + static_cast<int>(rng() % 8);
    const int total = std::min(target + (target % 2), n * (n - 1) / 2 - (n * (n - 1) / 2) % 2);
    while (static_cast<int>(es.size()) < total) {
      int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
      if (a == b) continue;
      es.insert({std::min(a, b), std::max(a, b)});
    }
    if (static_cast<int>(es.size()) < 3 * kk + 3) {
      --i;
      continue;
    }
    std::vector<EdgeColor> cols(es.size(), EdgeColor::Red);
    for (std::size_t j = 0; j < es.size() / 2; ++j) cols[j] = EdgeColor::Blue;
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<Edge> edges;
    std::size_t j = 0;
    for (auto [a, b] : es) edges.push_back({a, b, cols[j++]});
    const RedBlueGraph g(n, edges);
    ++subs;
    const Witness in = everything(g, WitnessKind::Subgraph);
    single(g, in, shrink_subgraph(g, in, kk), kk);
    iterated(g, in, kk, 3 * kk + 2);
  }
  o.note << paths << " balanced paths (length <= 12), " << trees << " balanced trees (<= 10 edges), " << subs
         << " subgraphs (k in {2,4})";
}

// 4. Every reduced family represents the full path family.
void representative_families(Outcome& o) {
  std::uint64_t families = 0, graphs = 0;
  auto corpus = random_corpus(40, 4, 10, 404);
  for (const RedBlueGraph& g : corpus) {
    ++graphs;
    for (int k : {2, 4, 6}) {
      const auto w = solve_ebp_repsets(g, k, [&](Vertex u, Vertex v, int r, int b, const SetFamily& fam) {
        ++families;
        const int p = r + b + 1;
        if (fam.p != p || fam.sets.size() > binom(k + 1, p)) o.fail("family larger than C(k+1, p)");
        SetFamily full{g.num_vertices(), p, {}};
        for (VertexSet s : brute::path_sets(g, u, v, r, b)) full.sets.push_back({s, {}});
        if (!represents(fam, full, k + 1 - p)) o.fail("family does not represent the path family");
      });
      if (w.has_value() != brute::exists(g, k, WitnessKind::Path)) o.fail("decision differs from brute force");
    }
  }
  o.note << families << " reduced families over " << graphs << " graphs (n <= 10, k in {2,4,6})";
}

// 5. Algebra engine.
void algebra_engine(Outcome& o) {
  const auto start = Clock::now();
  std::uint64_t squares = 0;
  for (int k = 1; k <= 10; ++k)
    for (std::uint32_t v = 0; v < (1u << k); ++v) {
      const auto g = GroupAlgebraElement::shifted(k, 64, AlgebraBasis::Group, v, 1);
      const auto n = GroupAlgebraElement::shifted(k, 64, AlgebraBasis::Nilpotent, v, 1);
      if (!ga_multiply(g, g, AlgebraBackend::XorConvolution).is_zero() ||
          !ga_multiply(n, n, AlgebraBackend::SubsetConvolution).is_zero())
        o.fail("(1+v)^2 != 0");
      ++squares;
    }
  std::mt19937_64 rng(5);
  std::uint64_t pairs = 0;
  for (int k = 0; k <= 8; ++k)
    for (int i = 0; i < 1000; ++i) {
      GroupAlgebraElement a = GroupAlgebraElement::zero(k, 64, AlgebraBasis::Group), b = a;
      for (auto& c : a.coeffs) c = rng();
      for (auto& c : b.coeffs) c = rng();
      if (!(change_basis(ga_multiply(a, b, AlgebraBackend::XorConvolution)) ==
            ga_multiply(change_basis(a), change_basis(b), AlgebraBackend::SubsetConvolution)))
        o.fail("backends disagree");
      ++pairs;
    }
  std::uint64_t circuits = 0;
  for (const RedBlueGraph& g : default_corpus(1)) {
    if (g.num_edges() > 8) continue;
    for (int k : {2, 4})
      for (WitnessKind kind : {WitnessKind::Subgraph, WitnessKind::Tree, WitnessKind::Path}) {
        std::set<std::uint64_t> want;
        oracle_enumerate(g, k, kind, [&](const std::vector<EdgeIndex>& es) {
          want.insert(kind == WitnessKind::Subgraph ? brute::edge_mask(es) : brute::vertex_mask(g, es));
          return true;
        });
        if (std::vector<std::uint64_t>(want.begin(), want.end()) != multilinear_support(build_circuit(g, k, kind)))
          o.fail("circuit support differs from the oracle family");
        ++circuits;
      }
  }
  o.note << squares << " squares (k_dim <= 10), " << pairs << " basis pairs (k_dim <= 8), " << circuits
         << " circuits (m <= 8, k <= 4); " << seconds_since(start) << " s";
}

// 6. Reductions against brute-force source decisions.
void reduction_equivalence(Outcome& o) {
  // With n <= 6 a connected source has a Steiner tree for every k >= n - 1 and
  // no path longer than 5, so larger k only repeat answers at higher cost.
  const int kSteinerCap = 5, kPathCap = 6;
  std::uint64_t steiner = 0, paths = 0, published_mismatch = 0;
  for (int n = 1; n <= 6; ++n)
    for (const RedBlueGraph& shape : all_simple_graphs(n)) {
      std::vector<Vertex> everyone;
      for (Vertex v = 1; v <= n; ++v) everyone.push_back(v);
      const bool connected = n >= 2 && shape.num_edges() > 0 && brute::steiner(shape, everyone, n - 1);
      if (connected)
        for (std::uint32_t tmask = 1; tmask < (1u << n); ++tmask) {
          std::vector<Vertex> terms;
          for (Vertex v = 1; v <= n; ++v)
            if (tmask >> (v - 1) & 1) terms.push_back(v);
          for (int k = static_cast<int>(terms.size()); k <= std::min(kSteinerCap, shape.num_edges()); ++k) {
            const ReducedInstance r = steiner_to_ebcs(shape, terms, k);
            ++steiner;
            if (r.graph.count_color(EdgeColor::Red) != k) o.fail("Steiner instance red count");
            if (oracle_solve(r.graph, 2 * k, WitnessKind::Subgraph, SolveMode::AtLeast).has_value() !=
                brute::steiner(shape, terms, k))
              o.fail("Steiner reduction changes the answer");
          }
        }
      if (const auto part = split_partition(shape))
        for (Vertex u0 : part->clique)
          for (int k = 1; k <= kPathCap; ++k) {
            const bool truth = brute::path_from(shape, u0, k);
            const ReducedInstance r = longest_path_split_to_ebp(shape, *part, u0, k);
            ++paths;
            if (r.graph.count_color(EdgeColor::Red) != k || !split_partition(r.graph))
              o.fail("path instance is malformed");
            if (oracle_solve(r.graph, 2 * k, WitnessKind::Path, SolveMode::Exact).has_value() != truth)
              o.fail("path reduction changes the answer");
            const ReducedInstance pub =
                longest_path_split_to_ebp(shape, *part, u0, k, std::nullopt, CliqueChoice::EvenIndices);
            if (oracle_solve(pub.graph, 2 * k, WitnessKind::Path, SolveMode::Exact).has_value() != truth)
              ++published_mismatch;
          }
    }
  o.note << steiner << " Steiner instances (k <= " << kSteinerCap << "), " << paths << " split-path instances (k <= "
         << kPathCap << "); even-index clique choice would disagree on " << published_mismatch;
}

// 7. Scaling smoke tests.
void scaling(Outcome& o) {
  std::mt19937_64 rng(30);
  const RedBlueGraph g = random_graph(30, 0.2, rng);
  {
    std::mt19937_64 crng(10);
    EdgeColoring sigma;
    for (int e = 0; e < g.num_edges(); ++e) sigma.label.push_back(static_cast<int>(crng() % 10));
    VertexColoring tau{{0}};
    for (int v = 1; v <= 30; ++v) tau.label.push_back(static_cast<int>(crng() % 11));
    for (int which = 0; which < 3; ++which) {
      const auto start = Clock::now();
      if (which == 0) (void)colorful_bcs_dp(g, sigma, 10);
      if (which == 1) (void)colorful_bt_dp(g, tau, 10);
      if (which == 2) (void)colorful_ebp_dp(g, tau, 10);
      const double s = seconds_since(start);
      o.note << (which == 0 ? "subgraph" : which == 1 ? "tree" : "path") << " DP " << s << " s; ";
      if (s > 60) o.fail("colorful DP over 60 s");
    }
  }
  {
    // Worst case for a decision: all 8 trials evaluated.
    const Circuit c = build_circuit_ebp(g, 12);
    const auto start = Clock::now();
    for (int t = 0; t < 8; ++t) (void)detect_multilinear(c, 13, 32, 1, 100 + static_cast<std::uint64_t>(t));
    const double s = seconds_since(start);
    o.note << "algebraic path k=12 t=8 " << s << " s; ";
    if (s > 60) o.fail("algebraic decision over 60 s");
  }
  BenchSpec spec;
  spec.algo = "algebraic";
  spec.kind = WitnessKind::Path;
  spec.ks = {4, 6, 8, 10, 12};
  spec.n = 30;
  spec.p = 0.2;
  spec.reps = 3;
  spec.trials = 8;
  spec.ell = 32;
  const auto rows = run_bench(spec);
  o.note << "growth ratios";
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = rows[i].median_ms / rows[i - 1].median_ms;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %d->%d: %.2f", rows[i - 1].k, rows[i].k, ratio);
    o.note << buf;
    if (ratio < 1.5 || ratio > 4.0) o.fail("growth ratio outside [1.5, 4]");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 oracle equivalence", oracle_equivalence},
      {"2 split-graph characterization", split_characterization},
      {"3 shrinking", shrinking},
      {"4 representative families", representative_families},
      {"5 algebra engine", algebra_engine},
      {"6 reduction equivalence", reduction_equivalence},
      {"7 scaling smoke", scaling},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f s", seconds_since(start));
    std::printf("%s  %-32s [%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.note.str().c_str(),
                o.pass ? "" : " -- ", o.first_failure.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
