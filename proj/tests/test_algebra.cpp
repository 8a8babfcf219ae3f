#include <doctest.h>

#include <map>
#include <random>

#include "bcslab/circuit.hpp"
#include "bcslab/corpus.hpp"
#include "bcslab/gf2.hpp"
#include "bcslab/group_algebra.hpp"
#include "bcslab/oracle.hpp"
#include "support/brute.hpp"

using namespace bcslab;

namespace {

// Shift-and-add multiply modulo the field polynomial, one bit at a time.
std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, int ell) {
  const std::uint64_t low = ell == 64 ? 0x1B : ell == 32 ? 0x8D : 0x2B;  // poly minus x^ell
  const std::uint64_t top = std::uint64_t{1} << (ell - 1);
  const std::uint64_t mask = ell == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ell) - 1;
  std::uint64_t r = 0;
  for (int i = ell - 1; i >= 0; --i) {
    const bool carry = r & top;
    r = (r << 1) & mask;
    if (carry) r ^= low;
    if (b >> i & 1) r ^= a;
  }
  return r;
}

GroupAlgebraElement random_element(int k_dim, int ell, AlgebraBasis basis, std::mt19937_64& rng) {
  GroupAlgebraElement a = GroupAlgebraElement::zero(k_dim, ell, basis);
  const std::uint64_t mask = ell == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ell) - 1;
  for (auto& c : a.coeffs) c = rng() & mask;
  return a;
}

// Naive XOR convolution.
GroupAlgebraElement xor_product(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out = GroupAlgebraElement::zero(a.k_dim, a.ell, AlgebraBasis::Group);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i ^ j] ^= slow_mul(a.coeffs[i], b.coeffs[j], a.ell);
  return out;
}

// Multilinear monomials with integer coefficients, by sparse expansion.
std::map<std::uint64_t, std::uint64_t> expand(const Circuit& c) {
  std::vector<std::map<std::uint64_t, std::uint64_t>> val(c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    auto& out = val[i];
    switch (g.op) {
      case GateOp::Const0: break;
      case GateOp::Const1: out[0] = 1; break;
      case GateOp::Input: out[std::uint64_t{1} << g.a] = 1; break;
      case GateOp::Add:
        out = val[static_cast<std::size_t>(g.a)];
        for (auto [m, x] : val[static_cast<std::size_t>(g.b)]) out[m] += x;
        break;
      case GateOp::Mul:
        for (auto [m1, x1] : val[static_cast<std::size_t>(g.a)])
          for (auto [m2, x2] : val[static_cast<std::size_t>(g.b)])
            if (!(m1 & m2)) out[m1 | m2] += x1 * x2;
        break;
    }
  }
  return val[static_cast<std::size_t>(c.output())];
}

std::vector<std::uint64_t> keys(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::vector<std::uint64_t> out;
  for (auto [k, v] : m)
    if (v) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("field multiplication matches shift-and-add") {
  std::mt19937_64 rng(1);
  for (int ell : {16, 32, 64}) {
    const std::uint64_t mask = ell == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ell) - 1;
    for (int i = 0; i < 5000; ++i) {
      const std::uint64_t a = rng() & mask, b = rng() & mask;
      REQUIRE(gf_mul(a, b, ell) == slow_mul(a, b, ell));
    }
    CHECK(gf_mul(mask, mask, ell) == slow_mul(mask, mask, ell));
  }
  std::uint64_t a = 0x123456789abcdefULL;
  CHECK(GF2<64>::mul(a, 1) == a);
  CHECK(GF2<32>::mul(0x80000000u, 2) == 0x8D);
}

TEST_CASE("field axioms") {
  std::mt19937_64 rng(2);
  for (int ell : {16, 32, 64}) {
    const std::uint64_t mask = ell == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ell) - 1;
    for (int i = 0; i < 200; ++i) {
      GF2lElement x{rng() & mask, ell}, y{rng() & mask, ell}, z{rng() & mask, ell};
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      if (x.bits) CHECK(x * x.inverse() == GF2lElement{1, ell});
    }
    CHECK(gf_pow(3, 0, ell) == 1);
  }
  CHECK_THROWS(require_ell(48));
  CHECK(valid_ell(16));
  CHECK_FALSE(valid_ell(8));
}

TEST_CASE("(1+v)^2 vanishes in both bases") {
  for (int k = 1; k <= 6; ++k)
    for (std::uint32_t v = 0; v < (1u << k); ++v) {
      const auto g = GroupAlgebraElement::shifted(k, 64, AlgebraBasis::Group, v, 1);
      CHECK(ga_multiply(g, g, AlgebraBackend::XorConvolution).is_zero());
      const auto n = GroupAlgebraElement::shifted(k, 64, AlgebraBasis::Nilpotent, v, 1);
      CHECK(ga_multiply(n, n, AlgebraBackend::SubsetConvolution).is_zero());
    }
}

TEST_CASE("identity is the unit") {
  std::mt19937_64 rng(3);
  for (AlgebraBasis basis : {AlgebraBasis::Group, AlgebraBasis::Nilpotent}) {
    const AlgebraBackend be =
        basis == AlgebraBasis::Group ? AlgebraBackend::XorConvolution : AlgebraBackend::SubsetConvolution;
    const auto a = random_element(5, 32, basis, rng);
    CHECK(ga_multiply(a, GroupAlgebraElement::one(5, 32, basis), be) == a);
    CHECK(ga_multiply(GroupAlgebraElement::one(5, 32, basis), a, be) == a);
  }
}

TEST_CASE("XOR convolution matches the naive product") {
  std::mt19937_64 rng(4);
  for (int k = 0; k <= 5; ++k) {
    const auto a = random_element(k, 16, AlgebraBasis::Group, rng);
    const auto b = random_element(k, 16, AlgebraBasis::Group, rng);
    CHECK(ga_multiply(a, b, AlgebraBackend::XorConvolution) == xor_product(a, b));
  }
}

TEST_CASE("change_basis") {
  const auto id = change_basis(GroupAlgebraElement::one(3, 64, AlgebraBasis::Group));
  CHECK(id.basis == AlgebraBasis::Nilpotent);
  CHECK(id.coeffs == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0, 0, 0});

  GroupAlgebraElement e = GroupAlgebraElement::zero(2, 64, AlgebraBasis::Group);
  e.coeffs[3] = 1;
  CHECK(change_basis(e).coeffs == std::vector<std::uint64_t>{1, 1, 1, 1});

  std::mt19937_64 rng(5);
  for (int k = 0; k <= 8; ++k) {
    const auto a = random_element(k, 64, AlgebraBasis::Group, rng);
    CHECK(change_basis(change_basis(a)) == a);
  }
}

TEST_CASE("basis change is a ring isomorphism") {
  std::mt19937_64 rng(6);
  for (int k = 0; k <= 8; ++k)
    for (int i = 0; i < 20; ++i) {
      const auto a = random_element(k, 32, AlgebraBasis::Group, rng);
      const auto b = random_element(k, 32, AlgebraBasis::Group, rng);
      REQUIRE(change_basis(ga_multiply(a, b, AlgebraBackend::XorConvolution)) ==
              ga_multiply(change_basis(a), change_basis(b), AlgebraBackend::SubsetConvolution));
    }
}

TEST_CASE("multiply rejects mismatched operands") {
  const auto g = GroupAlgebraElement::one(3, 64, AlgebraBasis::Group);
  const auto n = GroupAlgebraElement::one(3, 64, AlgebraBasis::Nilpotent);
  CHECK_THROWS(ga_multiply(g, n, AlgebraBackend::XorConvolution));
  CHECK_THROWS(ga_multiply(g, g, AlgebraBackend::SubsetConvolution));
  CHECK_THROWS(ga_add(g, GroupAlgebraElement::one(4, 64, AlgebraBasis::Group)));
}

TEST_CASE("circuit folding and dump") {
  Circuit c(2);
  const int x = c.input(0), y = c.input(1);
  CHECK(c.input(0) == x);
  CHECK(c.add(x, c.zero()) == x);
  CHECK(c.mul(x, c.one()) == x);
  CHECK(c.mul(x, c.zero()) == c.zero());
  const int xy = c.mul(x, y);
  const int xx = c.mul(x, x);
  c.set_output(c.add(xy, xx));
  CHECK(c.degree_bound() == 2);
  CHECK(c.homogeneous_degree() == 2);
  const std::string d = c.dump();
  CHECK(d.rfind("g0 = C0\ng1 = C1\ng2 = IN x0\ng3 = IN x1\ng4 = MUL g2 g3\n", 0) == 0);
  CHECK(d.find("ADD g4 g5") != std::string::npos);
  CHECK(d.substr(d.size() - 7) == "out g6\n");
  CHECK(multilinear_support(c) == std::vector<std::uint64_t>{0b11});

  Circuit mixed(1);
  mixed.set_output(mixed.add(mixed.input(0), mixed.one()));
  CHECK_FALSE(mixed.homogeneous_degree().has_value());
}

TEST_CASE("builder examples") {
  CHECK(build_circuit_ebcs(brute::make(2, "1-2R"), 2).is_zero());
  CHECK(build_circuit_ebt(brute::make(2, "1-2R"), 2).is_zero());
  CHECK(build_circuit_ebp(brute::make(3, "1-2R 2-3R"), 2).is_zero());

  const RedBlueGraph tri = brute::make(3, "1-2R 2-3B 1-3R");
  const Circuit bcs = build_circuit_ebcs(tri, 2);
  CHECK(multilinear_support(bcs) == std::vector<std::uint64_t>{0b011, 0b110});
  CHECK(bcs.homogeneous_degree() == 2);

  const RedBlueGraph path = brute::make(3, "1-2R 2-3B");
  CHECK(multilinear_support(build_circuit_ebt(path, 2)) == std::vector<std::uint64_t>{0b111});
  CHECK(build_circuit_ebt(path, 2).homogeneous_degree() == 3);
  const auto p = expand(build_circuit_ebp(path, 2));
  CHECK(p.at(0b111) == 2);  // both orientations

  // Two balanced paths on {1,2,3}, each in two orientations.
  const auto t = expand(build_circuit_ebp(tri, 2));
  CHECK(keys(t) == std::vector<std::uint64_t>{0b111});
  CHECK(t.at(0b111) == 2 * oracle_count(tri, 2, WitnessKind::Path));
}

TEST_CASE("expansion support equals the oracle witness family") {
  for (const RedBlueGraph& g : random_corpus(60, 3, 6, 99)) {
    if (g.num_edges() > 8) continue;
    for (int k : {2, 4})
      for (WitnessKind kind : {WitnessKind::Subgraph, WitnessKind::Tree, WitnessKind::Path}) {
        const Circuit c = build_circuit(g, k, kind);
        CHECK(c.degree_bound() <= (kind == WitnessKind::Subgraph ? k : k + 1));
        std::set<std::uint64_t> want;
        oracle_enumerate(g, k, kind, [&](const std::vector<EdgeIndex>& es) {
          want.insert(kind == WitnessKind::Subgraph ? brute::edge_mask(es) : brute::vertex_mask(g, es));
          return true;
        });
        const auto support = multilinear_support(c);
        REQUIRE(std::vector<std::uint64_t>(want.begin(), want.end()) == support);
        CHECK(keys(expand(c)) == support);
      }
  }
}
