#include <doctest.h>

#include "bcslab/corpus.hpp"
#include "bcslab/rep_sets.hpp"
#include "support/brute.hpp"

using namespace bcslab;

namespace {

VertexSet bits(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= VertexSet{1} << (v - 1);
  return s;
}

SetFamily family(int n, int p, std::initializer_list<VertexSet> sets) {
  SetFamily f{n, p, {}};
  for (VertexSet s : sets) f.sets.push_back({s, {}});
  return f;
}

std::uint64_t binom(int n, int r) {
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace

TEST_CASE("rep config") {
  const RepConfig cfg = make_rep_config(10, 5);
  CHECK(cfg.k_cap == 5);
  CHECK(cfg.field_prime == 17);
}

TEST_CASE("singletons reduce to at most k_cap sets") {
  const SetFamily s = family(4, 1, {bits({1}), bits({2}), bits({3})});
  const SetFamily r = reduce_family(s, 2, make_rep_config(4, 2));
  CHECK(r.sets.size() <= 2);
  CHECK(represents(r, s, 1));
}

TEST_CASE("single set is kept") {
  const SetFamily s = family(5, 2, {bits({2, 4})});
  const SetFamily r = reduce_family(s, 3, make_rep_config(5, 3));
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets[0].set == bits({2, 4}));
}

TEST_CASE("all pairs with q = 0 reduce to one set") {
  SetFamily s{4, 2, {}};
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) s.sets.push_back({bits({a, b}), {}});
  const SetFamily r = reduce_family(s, 2, make_rep_config(4, 2));
  CHECK(r.sets.size() == 1);
  CHECK(represents(r, s, 0));
}

TEST_CASE("represents detects a missing set") {
  const SetFamily full = family(4, 1, {bits({1}), bits({2})});
  CHECK_FALSE(represents(family(4, 1, {bits({1})}), full, 1));
  CHECK(represents(full, full, 1));
}

TEST_CASE("random families reduce to representative subfamilies") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const int p = 1 + static_cast<int>(rng() % 3);
    const int k_cap = p + static_cast<int>(rng() % 3);
    SetFamily s{n, p, {}};
    brute::any_subset(n, p, [&](const std::vector<int>& c) {
      if (rng() % 3 == 0) {
        VertexSet x = 0;
        for (int v : c) x |= VertexSet{1} << v;
        s.sets.push_back({x, {}});
      }
      return false;
    });
    const SetFamily r = reduce_family(s, k_cap, make_rep_config(n, k_cap));
    CHECK(r.sets.size() <= binom(k_cap, p));
    CHECK(represents(r, s, k_cap - p));
    for (const auto& m : r.sets)
      CHECK(std::any_of(s.sets.begin(), s.sets.end(), [&](const FamilyMember& x) { return x.set == m.set; }));
  }
}

TEST_CASE("convolve_extend") {
  SetFamily s{4, 2, {{bits({1, 2}), {1, 2}}}};
  const SetFamily a = convolve_extend(s, 3);
  REQUIRE(a.sets.size() == 1);
  CHECK(a.sets[0].set == bits({1, 2, 3}));
  CHECK(a.sets[0].walk == std::vector<Vertex>{1, 2, 3});
  CHECK(a.p == 3);
  CHECK(convolve_extend(s, 2).sets.empty());

  const SetFamily b = convolve_extend(family(4, 1, {bits({1}), bits({2})}), 3);
  REQUIRE(b.sets.size() == 2);
  CHECK(b.sets[0].set == bits({1, 3}));
  CHECK(b.sets[1].set == bits({2, 3}));
}

TEST_CASE("solve_ebp_repsets examples") {
  const RedBlueGraph p = brute::make(3, "1-2R 2-3B");
  const auto w = solve_ebp_repsets(p, 2);
  REQUIRE(w);
  CHECK(w->edges == std::vector<EdgeIndex>{0, 1});
  CHECK(w->kind == WitnessKind::Path);

  const RedBlueGraph k4 = brute::make(4, "1-2R 2-3B 3-4R 1-4B 1-3R 2-4B");
  CHECK(solve_ebp_repsets(k4, 4).has_value() == brute::exists(k4, 4, WitnessKind::Path));

  const RedBlueGraph red = brute::make(4, "1-2R 2-3R 3-4R 1-4R");
  CHECK_FALSE(solve_ebp_repsets(red, 2));
  CHECK_FALSE(solve_ebp_repsets(red, 4));
  CHECK_THROWS(solve_ebp_repsets(red, 3));
}

TEST_CASE("solve_ebp_repsets matches brute force") {
  for (const RedBlueGraph& g : random_corpus(120, 4, 9, 77))
    for (int k : {2, 4, 6}) {
      const auto w = solve_ebp_repsets(g, k);
      REQUIRE(w.has_value() == brute::exists(g, k, WitnessKind::Path));
      if (w) REQUIRE(brute::satisfies(g, w->edges, WitnessKind::Path));
    }
}

TEST_CASE("every traced family represents the full path family") {
  for (const RedBlueGraph& g : random_corpus(15, 5, 8, 5))
    for (int k : {2, 4}) {
      (void)solve_ebp_repsets(g, k, [&](Vertex u, Vertex v, int r, int b, const SetFamily& fam) {
        const int p = r + b + 1;
        REQUIRE(fam.p == p);
        CHECK(fam.sets.size() <= binom(k + 1, p));
        SetFamily full{g.num_vertices(), p, {}};
        for (VertexSet s : brute::path_sets(g, u, v, r, b)) full.sets.push_back({s, {}});
        for (const auto& m : fam.sets) {
          CHECK(full.sets.end() !=
                std::find_if(full.sets.begin(), full.sets.end(), [&](const FamilyMember& x) { return x.set == m.set; }));
          REQUIRE(m.walk.size() == static_cast<std::size_t>(p));
          CHECK(m.walk.front() == u);
          CHECK(m.walk.back() == v);
        }
        CHECK(represents(fam, full, k + 1 - p));
      });
    }
}
