// bcslab command-line front end. Exit status: 0 yes/valid/clean, 1 no/invalid/
// disagreement, 2 error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcslab/algebraic.hpp"
#include "bcslab/color_coding.hpp"
#include "bcslab/corpus.hpp"
#include "bcslab/graph.hpp"
#include "bcslab/harness.hpp"
#include "bcslab/oracle.hpp"
#include "bcslab/reductions.hpp"
#include "bcslab/rep_sets.hpp"
#include "bcslab/shrink.hpp"
#include "bcslab/split_solver.hpp"

using namespace bcslab;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_even(int k) {
  if (k < 2 || k % 2 != 0) throw UsageError("k must be even and at least 2, got " + std::to_string(k));
}

// "1,2,3" -> {1, 2, 3}. Lists are one token so they never swallow a positional.
std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "' in list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> word_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

ojson edges_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return normalized(*w).edges;
}

// Accepts {"kind": ..., "edges": [...]} or a solve result ({"kind", "witness"}).
Witness read_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open witness file '" + path + "'");
  const nlohmann::json j = nlohmann::json::parse(in);
  Witness w;
  w.kind = parse_kind(j.at("kind").get<std::string>());
  const auto& list = j.contains("edges") ? j.at("edges") : j.at("witness");
  if (list.is_null()) throw std::runtime_error("witness file has no edges");
  w.edges = list.get<std::vector<EdgeIndex>>();
  return w;
}

ojson witness_json(const Witness& w) {
  ojson j;
  j["format"] = 1;
  j["kind"] = std::string(to_string(w.kind));
  j["size"] = w.size();
  j["edges"] = normalized(w).edges;
  return j;
}

std::vector<RedBlueGraph> read_corpus_dir(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  std::vector<RedBlueGraph> out;
  for (const auto& f : files) out.push_back(read_graph_file(f));
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct Common {
  std::string graph_file;
  std::string kind = "subgraph";
  int k = 2;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced connected subgraph toolkit"};
  app.require_subcommand(1);
  int status = 0;

  // solve
  Common solve;
  std::string algo = "oracle";
  int trials = 0;
  double delta = 0.01;
  int ell = 64;
  bool want_witness = false;
  bool no_timing = false;
  auto* cmd_solve = app.add_subcommand("solve", "decide one instance");
  cmd_solve->add_option("graph", solve.graph_file, "graph file")->required();
  cmd_solve->add_option("--algo", algo, "oracle|split|colorcoding|repsets|algebraic");
  cmd_solve->add_option("--kind", solve.kind, "subgraph|tree|path");
  cmd_solve->add_option("-k", solve.k, "witness size (even)")->required();
  cmd_solve->add_option("--seed", solve.seed);
  cmd_solve->add_option("--trials", trials, "algebraic trials (0 = default)");
  cmd_solve->add_option("--delta", delta, "color-coding failure probability");
  cmd_solve->add_option("--ell", ell, "field GF(2^ell), ell in {16,32,64}");
  cmd_solve->add_flag("--witness", want_witness, "extract a witness (algebraic)");
  cmd_solve->add_option("--budget", solve.budget, "oracle search budget");
  cmd_solve->add_flag("--no-timing", no_timing, "report millis as 0");
  cmd_solve->callback([&] {
    require_even(solve.k);
    const WitnessKind kind = parse_kind(solve.kind);
    const RedBlueGraph g = read_graph_file(solve.graph_file);
    const auto start = std::chrono::steady_clock::now();
    std::optional<Witness> w;
    bool yes = false;
    if (algo == "oracle") {
      w = oracle_solve(g, solve.k, kind, SolveMode::Exact, OracleOptions{solve.budget});
    } else if (algo == "split") {
      if (kind != WitnessKind::Subgraph) throw UsageError("split solves --kind subgraph only");
      w = solve_split_ebcs(g, solve.k);
    } else if (algo == "colorcoding") {
      w = random_coloring_driver(g, solve.k, kind, delta, solve.seed);
    } else if (algo == "repsets") {
      if (kind != WitnessKind::Path) throw UsageError("repsets solves --kind path only");
      w = solve_ebp_repsets(g, solve.k);
    } else if (algo == "algebraic") {
      AlgebraicOptions opts;
      opts.trials = trials;
      opts.ell = ell;
      opts.seed = solve.seed;
      opts.want_witness = want_witness;
      const AlgebraicResult r = randomized_solve(g, solve.k, kind, opts);
      yes = r.yes;
      w = r.witness;
    } else {
      throw UsageError("unknown algo '" + algo + "'");
    }
    if (algo != "algebraic") yes = w.has_value();
    const double ms =
        no_timing ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ojson j;
    j["format"] = 1;
    j["answer"] = yes ? "yes" : "no";
    j["witness"] = edges_json(w);
    j["algo"] = algo;
    j["kind"] = std::string(to_string(kind));
    j["k"] = solve.k;
    j["seed"] = solve.seed;
    j["millis"] = std::round(ms * 1000.0) / 1000.0;
    std::cout << j.dump() << '\n';
    status = yes ? 0 : 1;
  });

  // oracle
  Common orc;
  std::string mode = "exact";
  bool count = false;
  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force ground truth");
  cmd_oracle->add_option("graph", orc.graph_file)->required();
  cmd_oracle->add_option("--kind", orc.kind);
  cmd_oracle->add_option("-k", orc.k)->required();
  cmd_oracle->add_option("--mode", mode, "exact|atleast");
  cmd_oracle->add_flag("--count", count, "also count witnesses of size exactly k");
  cmd_oracle->add_option("--budget", orc.budget);
  cmd_oracle->callback([&] {
    require_even(orc.k);
    const WitnessKind kind = parse_kind(orc.kind);
    if (mode != "exact" && mode != "atleast") throw UsageError("unknown mode '" + mode + "'");
    const RedBlueGraph g = read_graph_file(orc.graph_file);
    const OracleOptions opts{orc.budget};
    const auto w = oracle_solve(g, orc.k, kind, mode == "exact" ? SolveMode::Exact : SolveMode::AtLeast, opts);
    ojson j;
    j["format"] = 1;
    j["answer"] = w ? "yes" : "no";
    j["witness"] = edges_json(w);
    j["kind"] = std::string(to_string(kind));
    j["k"] = orc.k;
    j["mode"] = mode;
    if (count) j["count"] = oracle_count(g, orc.k, kind, opts);
    std::cout << j.dump() << '\n';
    status = w ? 0 : 1;
  });

  // validate
  std::string val_graph, val_witness;
  int val_k = 0;
  auto* cmd_validate = app.add_subcommand("validate", "check a witness file");
  cmd_validate->add_option("graph", val_graph)->required();
  cmd_validate->add_option("witness", val_witness, "witness JSON")->required();
  cmd_validate->add_option("-k", val_k, "expected size (default: witness size)");
  cmd_validate->callback([&] {
    const RedBlueGraph g = read_graph_file(val_graph);
    const Witness w = read_witness(val_witness);
    const ValidationReport r = validate_witness(g, w, val_k > 0 ? val_k : w.size());
    std::cout << r.to_json() << '\n';
    status = r.valid ? 0 : 1;
  });

  // shrink
  std::string sh_graph, sh_witness;
  int sh_k = 2;
  bool iterate = false;
  auto* cmd_shrink = app.add_subcommand("shrink", "shrink a balanced witness towards size k");
  cmd_shrink->add_option("graph", sh_graph)->required();
  cmd_shrink->add_option("witness", sh_witness, "witness JSON")->required();
  cmd_shrink->add_option("-k", sh_k)->required();
  cmd_shrink->add_flag("--iterate", iterate, "repeat until the size bound of the kind is met");
  cmd_shrink->callback([&] {
    require_even(sh_k);
    const RedBlueGraph g = read_graph_file(sh_graph);
    const Witness w = read_witness(sh_witness);
    Witness out;
    if (iterate)
      out = shrink_to_range(g, w, sh_k);
    else if (w.kind == WitnessKind::Path)
      out = shrink_path(g, w, sh_k);
    else if (w.kind == WitnessKind::Tree)
      out = shrink_tree(g, w, sh_k);
    else
      out = shrink_subgraph(g, w, sh_k);
    std::cout << witness_json(out).dump() << '\n';
  });

  // generate
  auto* cmd_generate = app.add_subcommand("generate", "write a reduced instance and its JSON sidecar");
  cmd_generate->require_subcommand(1);
  std::string gen_graph, gen_out;
  int gen_k = 1;
  std::string terminals_arg, tree_arg, path_arg;
  Vertex u0 = 1;
  bool even_indices = false;

  auto emit = [&](const std::string& reduction, const RedBlueGraph& src, ojson source, const ReducedInstance& r) {
    write_text(gen_out, serialize_graph(r.graph));
    ojson j;
    j["format"] = 1;
    j["reduction"] = reduction;
    source["graph"] = serialize_graph(src);
    j["source"] = std::move(source);
    j["target_k"] = r.target;
    j["kind"] = reduction == "steiner" ? "subgraph" : "path";
    j["witness"] = edges_json(r.witness);
    write_text(gen_out + ".json", j.dump(2) + "\n");
  };

  auto* gen_steiner = cmd_generate->add_subcommand("steiner", "Steiner tree -> balanced connected subgraph");
  gen_steiner->add_option("graph", gen_graph)->required();
  gen_steiner->add_option("-o,--out", gen_out, "output graph file; sidecar at <out>.json")->required();
  gen_steiner->add_option("-k", gen_k, "Steiner edge budget")->required();
  gen_steiner->add_option("--terminals", terminals_arg, "comma-separated")->required();
  gen_steiner->add_option("--tree", tree_arg, "source tree edges, for the forward witness");
  gen_steiner->callback([&] {
    const RedBlueGraph g = read_graph_file(gen_graph);
    const std::vector<Vertex> terminals = int_list(terminals_arg);
    const std::vector<EdgeIndex> tree = int_list(tree_arg);
    const ReducedInstance r =
        steiner_to_ebcs(g, terminals, gen_k, tree.empty() ? std::nullopt : std::optional(tree));
    emit("steiner", g, ojson{{"terminals", terminals}, {"k", gen_k}}, r);
  });

  auto* gen_split = cmd_generate->add_subcommand("splitpath", "longest path in a split graph -> balanced path");
  gen_split->add_option("graph", gen_graph)->required();
  gen_split->add_option("-o,--out", gen_out, "output graph file; sidecar at <out>.json")->required();
  gen_split->add_option("-k", gen_k, "path length")->required();
  gen_split->add_option("--u0", u0, "start vertex in the clique part")->required();
  gen_split->add_option("--path", path_arg, "source path u0,x1,...,xk, for the forward witness");
  gen_split->add_flag("--even-indices", even_indices, "put even-indexed new vertices in the clique");
  gen_split->callback([&] {
    const RedBlueGraph g = read_graph_file(gen_graph);
    const auto part = split_partition(g);
    if (!part) throw UsageError("source graph is not split");
    const std::vector<Vertex> path = int_list(path_arg);
    const ReducedInstance r =
        longest_path_split_to_ebp(g, *part, u0, gen_k, path.empty() ? std::nullopt : std::optional(path),
                                  even_indices ? CliqueChoice::EvenIndices : CliqueChoice::OppositeParity);
    emit("splitpath", g, ojson{{"u0", u0}, {"k", gen_k}, {"clique", part->clique}}, r);
  });

  // crosscheck
  std::string corpus_dir;
  int random_count = -1, n_min = 6, n_max = 8;
  CrosscheckOptions cc;
  std::string cc_ks, cc_kinds;
  auto* cmd_cross = app.add_subcommand("crosscheck", "all solvers against the oracle");
  cmd_cross->add_option("corpus", corpus_dir, "directory of .graph files (default: built-in corpus)");
  cmd_cross->add_option("--random", random_count, "use this many random graphs instead");
  cmd_cross->add_option("--nmin", n_min);
  cmd_cross->add_option("--nmax", n_max);
  cmd_cross->add_option("--ks", cc_ks, "comma-separated, default 2,4");
  cmd_cross->add_option("--kinds", cc_kinds, "comma-separated, default all");
  cmd_cross->add_option("--trials", cc.algebraic_trials);
  cmd_cross->add_option("--ell", cc.ell);
  cmd_cross->add_option("--seed", cc.seed);
  cmd_cross->callback([&] {
    if (!cc_ks.empty()) cc.ks = int_list(cc_ks);
    for (int k : cc.ks) require_even(k);
    if (!cc_kinds.empty()) {
      cc.kinds.clear();
      for (const auto& s : word_list(cc_kinds)) cc.kinds.push_back(parse_kind(s));
    }
    require_ell(cc.ell);
    std::vector<RedBlueGraph> graphs;
    if (!corpus_dir.empty())
      graphs = read_corpus_dir(corpus_dir);
    else if (random_count >= 0)
      graphs = random_corpus(random_count, n_min, n_max, cc.seed);
    else
      graphs = default_corpus(cc.seed);
    const CrosscheckReport rep = crosscheck(graphs, cc);
    std::cout << rep.to_json() << '\n';
    status = rep.disagreements.empty() ? 0 : 1;
  });

  // bench
  BenchSpec bs;
  std::string bench_kind = "path";
  std::string bench_ks;
  bool bench_no_timing = false;
  auto* cmd_bench = app.add_subcommand("bench", "median wall-clock time per k, as CSV");
  cmd_bench->add_option("--algo", bs.algo, "colorcoding|algebraic|repsets|oracle");
  cmd_bench->add_option("--kind", bench_kind);
  cmd_bench->add_option("--ks", bench_ks, "comma-separated, default 4,6,8");
  cmd_bench->add_option("-n", bs.n);
  cmd_bench->add_option("-p", bs.p, "edge probability");
  cmd_bench->add_option("--instances", bs.instances);
  cmd_bench->add_option("--reps", bs.reps);
  cmd_bench->add_option("--seed", bs.seed);
  cmd_bench->add_option("--trials", bs.trials);
  cmd_bench->add_option("--ell", bs.ell);
  cmd_bench->add_flag("--no-timing", bench_no_timing, "report medians as 0");
  cmd_bench->callback([&] {
    bs.kind = parse_kind(bench_kind);
    if (!bench_ks.empty()) bs.ks = int_list(bench_ks);
    bs.timing = !bench_no_timing;
    std::cout << bench_csv(run_bench(bs));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
