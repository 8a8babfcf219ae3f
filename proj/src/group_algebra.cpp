#include "bcslab/group_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bcslab {

namespace {

constexpr int kMaxDim = 24;

void check_shape(int k_dim, int ell) {
  require_ell(ell);
  if (k_dim < 0 || k_dim > kMaxDim) throw std::invalid_argument("k_dim out of range: " + std::to_string(k_dim));
}

void check_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.k_dim != b.k_dim || a.ell != b.ell || a.basis != b.basis)
    throw std::invalid_argument("group algebra elements differ in dimension, field or basis");
}

template <int L>
GroupAlgebraElement xor_convolution(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out = GroupAlgebraElement::zero(a.k_dim, a.ell, a.basis);
  const std::size_t n = a.coeffs.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (a.coeffs[u] == 0) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (b.coeffs[v]) out.coeffs[u ^ v] ^= GF2<L>::mul(a.coeffs[u], b.coeffs[v]);
  }
  return out;
}

// Ranked subset convolution. Characteristic 2 makes the Moebius transform
// equal to the zeta transform.
template <int L>
GroupAlgebraElement subset_convolution(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  const int k = a.k_dim;
  const std::size_t n = a.coeffs.size();
  const std::size_t ranks = static_cast<std::size_t>(k) + 1;
  std::vector<std::uint64_t> fa(ranks * n, 0);
  std::vector<std::uint64_t> fb(ranks * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t r = static_cast<std::size_t>(std::popcount(s));
    fa[r * n + s] = a.coeffs[s];
    fb[r * n + s] = b.coeffs[s];
  }
  auto zeta = [&](std::uint64_t* f) {
    for (int j = 0; j < k; ++j) {
      const std::size_t bit = std::size_t{1} << j;
      for (std::size_t s = 0; s < n; ++s)
        if (s & bit) f[s] ^= f[s ^ bit];
    }
  };
  for (std::size_t r = 0; r < ranks; ++r) {
    zeta(&fa[r * n]);
    zeta(&fb[r * n]);
  }
  std::vector<std::uint64_t> h(ranks * n, 0);
  for (std::size_t r = 0; r < ranks; ++r)
    for (std::size_t i = 0; i <= r; ++i) {
      const std::uint64_t* x = &fa[i * n];
      const std::uint64_t* y = &fb[(r - i) * n];
      std::uint64_t* z = &h[r * n];
      for (std::size_t s = 0; s < n; ++s)
        if (x[s] && y[s]) z[s] ^= GF2<L>::mul(x[s], y[s]);
    }
  for (std::size_t r = 0; r < ranks; ++r) zeta(&h[r * n]);
  GroupAlgebraElement out = GroupAlgebraElement::zero(a.k_dim, a.ell, a.basis);
  for (std::size_t s = 0; s < n; ++s) out.coeffs[s] = h[static_cast<std::size_t>(std::popcount(s)) * n + s];
  return out;
}

template <template <int> class F, typename... Args>
GroupAlgebraElement by_ell(int ell, const Args&... args) {
  switch (ell) {
    case 16: return F<16>::run(args...);
    case 32: return F<32>::run(args...);
    default: return F<64>::run(args...);
  }
}

template <int L>
struct XorOp {
  static GroupAlgebraElement run(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return xor_convolution<L>(a, b);
  }
};

template <int L>
struct SubsetOp {
  static GroupAlgebraElement run(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return subset_convolution<L>(a, b);
  }
};

}  // namespace

GroupAlgebraElement GroupAlgebraElement::zero(int k_dim, int ell, AlgebraBasis basis) {
  check_shape(k_dim, ell);
  return GroupAlgebraElement{k_dim, ell, basis, std::vector<std::uint64_t>(std::size_t{1} << k_dim, 0)};
}

GroupAlgebraElement GroupAlgebraElement::one(int k_dim, int ell, AlgebraBasis basis) {
  GroupAlgebraElement e = zero(k_dim, ell, basis);
  e.coeffs[0] = 1;  // identity / empty monomial, the same in both bases
  return e;
}

GroupAlgebraElement GroupAlgebraElement::shifted(int k_dim, int ell, AlgebraBasis basis, std::uint32_t v,
                                                 std::uint64_t lambda) {
  GroupAlgebraElement e = zero(k_dim, ell, basis);
  if (v >= (std::uint32_t{1} << k_dim)) throw std::invalid_argument("group element outside Z_2^k_dim");
  if (basis == AlgebraBasis::Group) {
    e.coeffs[0] ^= lambda;
    e.coeffs[v] ^= lambda;
  } else {
    // 1 + prod_{j in v}(1 + u_j) = sum over nonempty S within v of u^S.
    for (std::uint32_t s = v; s != 0; s = (s - 1) & v) e.coeffs[s] = lambda;
  }
  return e;
}

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same(a, b);
  GroupAlgebraElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] ^= b.coeffs[i];
  return out;
}

GroupAlgebraElement ga_scale(const GroupAlgebraElement& a, std::uint64_t s) {
  GroupAlgebraElement out = a;
  for (std::uint64_t& c : out.coeffs) c = gf_mul(c, s, a.ell);
  return out;
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b, AlgebraBackend backend) {
  check_same(a, b);
  if (backend == AlgebraBackend::XorConvolution) {
    if (a.basis != AlgebraBasis::Group) throw std::invalid_argument("XOR convolution needs the group basis");
    return by_ell<XorOp>(a.ell, a, b);
  }
  if (a.basis != AlgebraBasis::Nilpotent) throw std::invalid_argument("subset convolution needs the nilpotent basis");
  return by_ell<SubsetOp>(a.ell, a, b);
}

GroupAlgebraElement change_basis(const GroupAlgebraElement& a) {
  GroupAlgebraElement out = a;
  out.basis = a.basis == AlgebraBasis::Group ? AlgebraBasis::Nilpotent : AlgebraBasis::Group;
  const std::size_t n = out.coeffs.size();
  for (int j = 0; j < a.k_dim; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t s = 0; s < n; ++s)
      if (!(s & bit)) out.coeffs[s] ^= out.coeffs[s | bit];
  }
  return out;
}

}  // namespace bcslab
