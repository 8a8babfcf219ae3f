#include "bcslab/algebraic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bcslab {

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t field_mask(int ell) { return ell == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ell) - 1; }

std::uint64_t nonzero(std::mt19937_64& rng, int ell) {
  for (;;)
    if (const std::uint64_t x = rng() & field_mask(ell)) return x;
}

// Gates reachable from the output, ascending.
std::vector<int> live_gates(const Circuit& c) {
  const std::size_t n = c.gates().size();
  std::vector<char> live(n, 0);
  live[static_cast<std::size_t>(c.output())] = 1;
  for (std::size_t i = n; i-- > 0;) {
    if (!live[i]) continue;
    const Gate& g = c.gates()[i];
    if (g.op == GateOp::Add || g.op == GateOp::Mul) {
      live[static_cast<std::size_t>(g.a)] = 1;
      live[static_cast<std::size_t>(g.b)] = 1;
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (live[i]) out.push_back(static_cast<int>(i));
  return out;
}

GroupAlgebraElement evaluate(const Circuit& c, const Substitution& s, int k_dim, int ell, AlgebraBasis basis) {
  const AlgebraBackend backend =
      basis == AlgebraBasis::Group ? AlgebraBackend::XorConvolution : AlgebraBackend::SubsetConvolution;
  const std::vector<int> order = live_gates(c);
  std::vector<int> last_use(c.gates().size(), -1);
  for (int i : order) {
    const Gate& g = c.gate(i);
    if (g.op == GateOp::Add || g.op == GateOp::Mul) {
      last_use[static_cast<std::size_t>(g.a)] = i;
      last_use[static_cast<std::size_t>(g.b)] = i;
    }
  }
  std::vector<GroupAlgebraElement> val(c.gates().size());
  for (int i : order) {
    const Gate& g = c.gate(i);
    GroupAlgebraElement& out = val[static_cast<std::size_t>(i)];
    switch (g.op) {
      case GateOp::Const0: out = GroupAlgebraElement::zero(k_dim, ell, basis); break;
      case GateOp::Const1: out = GroupAlgebraElement::one(k_dim, ell, basis); break;
      case GateOp::Input:
        out = GroupAlgebraElement::shifted(k_dim, ell, basis, s.v[static_cast<std::size_t>(g.a)],
                                           s.lambda[static_cast<std::size_t>(g.a)]);
        break;
      case GateOp::Add:
        out = ga_add(ga_scale(val[static_cast<std::size_t>(g.a)], s.wire[2 * static_cast<std::size_t>(i)]),
                     ga_scale(val[static_cast<std::size_t>(g.b)], s.wire[2 * static_cast<std::size_t>(i) + 1]));
        break;
      case GateOp::Mul:
        out = ga_multiply(val[static_cast<std::size_t>(g.a)], val[static_cast<std::size_t>(g.b)], backend);
        break;
    }
    if (g.op == GateOp::Add || g.op == GateOp::Mul)
      for (int operand : {g.a, g.b})
        if (last_use[static_cast<std::size_t>(operand)] == i && operand != c.output())
          val[static_cast<std::size_t>(operand)] = GroupAlgebraElement{};
  }
  return val[static_cast<std::size_t>(c.output())];
}

template <int L>
std::uint64_t top_coefficient(const Circuit& c, const Substitution& s, int k_dim) {
  const std::vector<int> order = live_gates(c);
  std::vector<std::size_t> slot(c.gates().size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) slot[static_cast<std::size_t>(order[i])] = i;
  const std::uint64_t total = std::uint64_t{1} << k_dim;
  const std::size_t width = static_cast<std::size_t>(std::min<std::uint64_t>(64, total));
  std::vector<std::uint64_t> val(order.size() * width);
  std::uint64_t acc = 0;
  for (std::uint64_t base = 0; base < total; base += width) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int id = order[i];
      const Gate& g = c.gate(id);
      std::uint64_t* dst = &val[i * width];
      switch (g.op) {
        case GateOp::Const0: std::fill(dst, dst + width, 0); break;
        case GateOp::Const1: std::fill(dst, dst + width, 1); break;
        case GateOp::Input: {
          const std::uint64_t v = s.v[static_cast<std::size_t>(g.a)];
          const std::uint64_t lam = s.lambda[static_cast<std::size_t>(g.a)];
          for (std::size_t t = 0; t < width; ++t) dst[t] = (std::popcount(v & (base + t)) & 1) ? lam : 0;
          break;
        }
        case GateOp::Add: {
          const std::uint64_t* x = &val[slot[static_cast<std::size_t>(g.a)] * width];
          const std::uint64_t* y = &val[slot[static_cast<std::size_t>(g.b)] * width];
          const std::uint64_t sa = s.wire[2 * static_cast<std::size_t>(id)];
          const std::uint64_t sb = s.wire[2 * static_cast<std::size_t>(id) + 1];
          for (std::size_t t = 0; t < width; ++t) dst[t] = GF2<L>::mul(sa, x[t]) ^ GF2<L>::mul(sb, y[t]);
          break;
        }
        case GateOp::Mul: {
          const std::uint64_t* x = &val[slot[static_cast<std::size_t>(g.a)] * width];
          const std::uint64_t* y = &val[slot[static_cast<std::size_t>(g.b)] * width];
          for (std::size_t t = 0; t < width; ++t) dst[t] = GF2<L>::mul(x[t], y[t]);
          break;
        }
      }
    }
    const std::uint64_t* out = &val[slot[static_cast<std::size_t>(c.output())] * width];
    for (std::size_t t = 0; t < width; ++t) acc ^= out[t];
  }
  return acc;
}

void check_dim(const Circuit& c, int k_dim, int ell) {
  require_ell(ell);
  if (k_dim < 0 || k_dim > 24) throw std::invalid_argument("k_dim out of range");
  if (c.degree_bound() > k_dim)
    throw std::invalid_argument("circuit degree bound " + std::to_string(c.degree_bound()) + " exceeds k_dim " +
                                std::to_string(k_dim));
}

}  // namespace

Substitution draw_substitution(const Circuit& c, int k_dim, int ell, std::mt19937_64& rng) {
  Substitution s;
  const std::size_t vars = static_cast<std::size_t>(c.num_vars());
  s.v.resize(vars);
  s.lambda.resize(vars);
  for (std::size_t i = 0; i < vars; ++i) {
    s.v[i] = static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << k_dim) - 1));
    s.lambda[i] = nonzero(rng, ell);
  }
  s.wire.resize(2 * c.gates().size());
  for (std::uint64_t& w : s.wire) w = nonzero(rng, ell);
  return s;
}

GroupAlgebraElement evaluate_nilpotent(const Circuit& c, const Substitution& s, int k_dim, int ell) {
  check_dim(c, k_dim, ell);
  return evaluate(c, s, k_dim, ell, AlgebraBasis::Nilpotent);
}

GroupAlgebraElement evaluate_group(const Circuit& c, const Substitution& s, int k_dim, int ell) {
  check_dim(c, k_dim, ell);
  return evaluate(c, s, k_dim, ell, AlgebraBasis::Group);
}

std::uint64_t evaluate_top_coefficient(const Circuit& c, const Substitution& s, int k_dim, int ell) {
  check_dim(c, k_dim, ell);
  if (c.homogeneous_degree() != k_dim && !c.is_zero())
    throw std::invalid_argument("top-coefficient evaluation needs a circuit homogeneous of degree k_dim");
  switch (ell) {
    case 16: return top_coefficient<16>(c, s, k_dim);
    case 32: return top_coefficient<32>(c, s, k_dim);
    default: return top_coefficient<64>(c, s, k_dim);
  }
}

bool detect_multilinear(const Circuit& c, int k_dim, int ell, int trials, std::uint64_t seed, DetectMethod method) {
  check_dim(c, k_dim, ell);
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (c.is_zero()) return false;
  if (method == DetectMethod::Auto)
    method = c.homogeneous_degree() == k_dim ? DetectMethod::TopCoefficient : DetectMethod::Full;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    const Substitution s = draw_substitution(c, k_dim, ell, rng);
    const bool hit = method == DetectMethod::TopCoefficient ? evaluate_top_coefficient(c, s, k_dim, ell) != 0
                                                            : !evaluate_nilpotent(c, s, k_dim, ell).is_zero();
    if (hit) return true;
  }
  return false;
}

int default_trials(int k) { return std::max(16, k); }

namespace {

bool test_edges(const RedBlueGraph& g, const std::vector<EdgeIndex>& keep, int k, WitnessKind kind, int k_dim,
                const AlgebraicOptions& opts, int trials, std::uint64_t seed) {
  std::vector<Edge> edges;
  for (EdgeIndex e : keep) edges.push_back(g.edge(e));
  const RedBlueGraph sub(g.num_vertices(), std::move(edges));
  if (sub.count_color(EdgeColor::Red) < k / 2 || sub.count_color(EdgeColor::Blue) < k / 2) return false;
  return detect_multilinear(build_circuit(sub, k, kind), k_dim, opts.ell, trials, seed);
}

}  // namespace

AlgebraicResult randomized_solve(const RedBlueGraph& g, int k, WitnessKind kind, const AlgebraicOptions& opts) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer, got " + std::to_string(k));
  require_ell(opts.ell);
  const int k_dim = kind == WitnessKind::Subgraph ? k : k + 1;
  const int trials = opts.trials > 0 ? opts.trials : default_trials(k);
  AlgebraicResult res;
  std::vector<EdgeIndex> keep(static_cast<std::size_t>(g.num_edges()));
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) keep[static_cast<std::size_t>(e)] = e;
  res.yes = test_edges(g, keep, k, kind, k_dim, opts, trials, opts.seed);
  if (!res.yes || !opts.want_witness) return res;

  // A positive test is always right, so `keep` contains a solution throughout.
  std::uint64_t step = 0;
  for (int pass = 0; pass < 3 && static_cast<int>(keep.size()) > k; ++pass)
    for (EdgeIndex e = 0; e < g.num_edges() && static_cast<int>(keep.size()) > k; ++e) {
      const auto it = std::find(keep.begin(), keep.end(), e);
      if (it == keep.end()) continue;
      std::vector<EdgeIndex> trial = keep;
      trial.erase(trial.begin() + (it - keep.begin()));
      ++step;
      if (test_edges(g, trial, k, kind, k_dim, opts, trials, opts.seed + 0x9e3779b97f4a7c15ULL * step))
        keep = std::move(trial);
    }
  if (static_cast<int>(keep.size()) == k) {
    Witness w{kind, keep};
    if (validate_witness(g, w, k).valid) res.witness = std::move(w);
  }
  return res;
}

}  // namespace bcslab
