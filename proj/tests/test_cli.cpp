#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "bcslab/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BCSLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("bcslab_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

const char* kStar = "graph 5 4\ne 1 2 R\ne 1 3 R\ne 1 4 B\ne 1 5 B\n";
const char* kAllRed = "graph 3 2\ne 1 2 R\ne 2 3 R\n";

}  // namespace

TEST_CASE("solve: split on the star") {
  Workdir w;
  const std::string star = w.write("star.graph", kStar);
  const Run r = run("solve --algo split --kind subgraph -k 4 --no-timing " + star);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == 1);
  CHECK(j["answer"] == "yes");
  CHECK(j["witness"] == nlohmann::json::array({0, 1, 2, 3}));
  CHECK(j["algo"] == "split");
  CHECK(j["millis"] == 0.0);
}

TEST_CASE("solve: no answer exits 1") {
  Workdir w;
  const std::string g = w.write("allred.graph", kAllRed);
  const Run r = run("solve --algo oracle --kind path -k 2 " + g);
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["answer"] == "no");
  CHECK(j["witness"].is_null());
}

TEST_CASE("solve: errors exit 2") {
  Workdir w;
  const std::string g = w.write("g.graph", kStar);
  CHECK(run("solve --algo algebraic --kind tree -k 3 " + g).status == 2);
  CHECK(run("solve --algo quantum --kind tree -k 2 " + g).status == 2);
  CHECK(run("solve --algo oracle --kind cycle -k 2 " + g).status == 2);
  CHECK(run("solve --algo oracle -k 2 " + (w.dir / "missing.graph").string()).status == 2);
  CHECK(run("solve --algo repsets --kind tree -k 2 " + g).status == 2);
  CHECK(run("frobnicate").status == 2);
  const std::string c4 = w.write("c4.graph", "graph 4 4\ne 1 2 R\ne 2 3 B\ne 3 4 R\ne 4 1 B\n");
  CHECK(run("solve --algo split -k 2 " + c4).status == 2);
}

TEST_CASE("solve: every algorithm, same answer, byte-identical reruns") {
  Workdir w;
  const std::string g =
      w.write("g.graph", "graph 6 7\ne 1 2 R\ne 2 3 B\ne 3 4 R\ne 4 5 B\ne 5 6 R\ne 1 6 B\ne 2 5 R\n");
  for (const char* algo : {"oracle", "colorcoding", "repsets", "algebraic"}) {
    const std::string args = std::string("solve --no-timing --kind path -k 4 --seed 5 --witness --algo ") + algo + " " + g;
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["answer"] == "yes");
    CHECK(j["kind"] == "path");
    CHECK(j["k"] == 4);
    CHECK(j["seed"] == 5);
  }
}

TEST_CASE("validate and shrink") {
  Workdir w;
  const std::string g = w.write("p.graph", "graph 5 4\ne 1 2 R\ne 2 3 B\ne 3 4 R\ne 4 5 B\n");
  const std::string wit = w.write("w.json", R"({"kind":"path","edges":[0,1,2,3]})");
  const Run v = run("validate " + g + " " + wit);
  CHECK(v.status == 0);
  CHECK(nlohmann::json::parse(v.out)["valid"] == true);
  CHECK(run("validate -k 2 " + g + " " + wit).status == 1);

  const Run s = run("shrink -k 2 " + g + " " + wit);
  CHECK(s.status == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["edges"] == nlohmann::json::array({1, 2}));
  CHECK(j["kind"] == "path");

  const std::string bad = w.write("bad.json", R"({"kind":"path","edges":[0,2]})");
  CHECK(run("shrink -k 2 " + g + " " + bad).status == 2);
}

TEST_CASE("generate writes a graph and a sidecar") {
  Workdir w;
  const std::string src = w.write("tri.graph", "graph 3 3\ne 1 2 R\ne 2 3 R\ne 1 3 R\n");
  const std::string out = (w.dir / "h.graph").string();
  CHECK(run("generate splitpath -k 2 --u0 1 --path 1,2,3 -o " + out + " " + src).status == 0);
  const bcslab::RedBlueGraph h = bcslab::read_graph_file(out);
  CHECK(h.num_vertices() == 5);
  CHECK(h.count_color(bcslab::EdgeColor::Red) == 2);
  std::ifstream side(out + ".json");
  const auto j = nlohmann::json::parse(side);
  CHECK(j["target_k"] == 4);
  CHECK(j["source"]["k"] == 2);
  CHECK(j["witness"].size() == 4);
  const Run s = run("solve --algo oracle --kind path -k 4 " + out);
  CHECK(s.status == 0);

  const std::string p3 = w.write("p3.graph", "graph 3 2\ne 1 2 R\ne 2 3 R\n");
  CHECK(run("generate steiner -k 2 --terminals 1,3 --tree 0,1 -o " + out + " " + p3).status == 0);
  CHECK(run("solve --algo oracle --kind subgraph -k 4 " + out).status == 0);
  CHECK(run("generate steiner -k 1 --terminals 1,3 -o " + out + " " + p3).status == 2);
}

TEST_CASE("crosscheck on a directory and on an empty one") {
  Workdir w;
  w.write("a.graph", kStar);
  w.write("b.graph", kAllRed);
  const Run r = run("crosscheck --ks 2,4 " + w.dir.string());
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["instances"] == 2);
  CHECK(j["disagreements"].empty());

  const fs::path empty = w.dir / "empty";
  fs::create_directories(empty);
  const Run e = run("crosscheck " + empty.string());
  CHECK(e.status == 0);
  CHECK(nlohmann::json::parse(e.out)["checks"] == 0);
}

TEST_CASE("bench prints CSV") {
  const Run r = run("bench --algo colorcoding --kind subgraph --ks 2,4 -n 10 --reps 1 --no-timing");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("algo,kind,k,n,m,reps,median_ms\ncolorcoding,subgraph,2,10,", 0) == 0);
  CHECK(r.out == run("bench --algo colorcoding --kind subgraph --ks 2,4 -n 10 --reps 1 --no-timing").out);
  CHECK(run("bench --instances 0").out == "algo,kind,k,n,m,reps,median_ms\n");
}
