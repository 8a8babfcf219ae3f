#include "bcslab/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bcslab {

Circuit::Circuit(int num_vars) : num_vars_(num_vars), input_gate_(static_cast<std::size_t>(num_vars), -1) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  push({GateOp::Const0}, 0, kMixed);
  push({GateOp::Const1}, 0, 0);
}

int Circuit::push(Gate g, int max_deg, int hom_deg) {
  gates_.push_back(g);
  max_degree_.push_back(max_deg);
  hom_degree_.push_back(hom_deg);
  return static_cast<int>(gates_.size()) - 1;
}

int Circuit::input(int var) {
  if (var < 0 || var >= num_vars_) throw std::out_of_range("circuit variable out of range");
  int& g = input_gate_[static_cast<std::size_t>(var)];
  if (g < 0) g = push({GateOp::Input, var}, 1, 1);
  return g;
}

int Circuit::add(int a, int b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int ha = hom_degree_[static_cast<std::size_t>(a)];
  const int hb = hom_degree_[static_cast<std::size_t>(b)];
  const int md = std::max(max_degree_[static_cast<std::size_t>(a)], max_degree_[static_cast<std::size_t>(b)]);
  return push({GateOp::Add, a, b}, md, ha == hb ? ha : kMixed);
}

int Circuit::mul(int a, int b) {
  if (a == 0 || b == 0) return 0;
  if (a == 1) return b;
  if (b == 1) return a;
  const int ha = hom_degree_[static_cast<std::size_t>(a)];
  const int hb = hom_degree_[static_cast<std::size_t>(b)];
  const int md = max_degree_[static_cast<std::size_t>(a)] + max_degree_[static_cast<std::size_t>(b)];
  return push({GateOp::Mul, a, b}, md, ha == kMixed || hb == kMixed ? kMixed : ha + hb);
}

int Circuit::sum(const std::vector<int>& terms) {
  int acc = 0;
  for (int t : terms) acc = add(acc, t);
  return acc;
}

std::optional<int> Circuit::homogeneous_degree() const {
  const int h = hom_degree_[static_cast<std::size_t>(output_)];
  if (h == kMixed) return std::nullopt;
  return h;
}

std::string Circuit::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    out << 'g' << i << " = ";
    switch (g.op) {
      case GateOp::Input: out << "IN x" << g.a; break;
      case GateOp::Const0: out << "C0"; break;
      case GateOp::Const1: out << "C1"; break;
      case GateOp::Add: out << "ADD g" << g.a << " g" << g.b; break;
      case GateOp::Mul: out << "MUL g" << g.a << " g" << g.b; break;
    }
    out << '\n';
  }
  out << "out g" << output_ << '\n';
  return out.str();
}

namespace {

void require_even(int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer, got " + std::to_string(k));
}

int is_red(const RedBlueGraph& g, EdgeIndex e) { return g.color(e) == EdgeColor::Red ? 1 : 0; }

// Gate table over (slot, r, b), 0 (the zero gate) when absent.
class Cells {
 public:
  Cells(int slots, int half)
      : half_(half), data_(static_cast<std::size_t>(slots) * static_cast<std::size_t>((half + 1) * (half + 1)), 0) {}
  int get(int slot, int r, int b) const {
    if (r < 0 || b < 0 || r > half_ || b > half_) return 0;
    return data_[index(slot, r, b)];
  }
  void set(int slot, int r, int b, int gate) { data_[index(slot, r, b)] = gate; }

 private:
  std::size_t index(int slot, int r, int b) const {
    return (static_cast<std::size_t>(slot) * static_cast<std::size_t>(half_ + 1) + static_cast<std::size_t>(r)) *
               static_cast<std::size_t>(half_ + 1) +
           static_cast<std::size_t>(b);
  }
  int half_;
  std::vector<int> data_;
};

}  // namespace

Circuit build_circuit_ebcs(const RedBlueGraph& g, int k) {
  require_even(k);
  const int m = g.num_edges();
  const int h = k / 2;
  Circuit c(m);
  Cells p(m, h);     // P(e, r, b)
  Cells near(m, h);  // sum of P(e', r, b) over e' in N(e)
  std::vector<std::vector<EdgeIndex>> nbrs(static_cast<std::size_t>(m));
  for (EdgeIndex e = 0; e < m; ++e) nbrs[static_cast<std::size_t>(e)] = g.edge_neighbors(e);

  for (int j = 1; j <= k; ++j) {
    for (int r = std::max(0, j - h); r <= std::min(j, h); ++r) {
      const int b = j - r;
      for (EdgeIndex e = 0; e < m; ++e) {
        const int red = is_red(g, e);
        if (red ? r == 0 : b == 0) continue;
        if (j == 1) {
          p.set(e, r, b, c.input(e));
          continue;
        }
        std::vector<int> terms;
        // Split: a connected part through a neighbor, and a part containing e.
        for (int r1 = 0; r1 <= r; ++r1)
          for (int b1 = 0; b1 <= b; ++b1) {
            if (r1 + b1 == 0 || r1 + b1 == j) continue;
            const int lhs = near.get(e, r1, b1);
            const int rhs = p.get(e, r - r1, b - b1);
            if (lhs && rhs) terms.push_back(c.mul(lhs, rhs));
          }
        // Extension: e attached to a connected part through a neighbor.
        const int rest = near.get(e, r - red, b - (1 - red));
        if (rest) terms.push_back(c.mul(c.input(e), rest));
        p.set(e, r, b, c.sum(terms));
      }
    }
    for (int r = std::max(0, j - h); r <= std::min(j, h); ++r)
      for (EdgeIndex e = 0; e < m; ++e) {
        std::vector<int> terms;
        for (EdgeIndex f : nbrs[static_cast<std::size_t>(e)]) terms.push_back(p.get(f, r, j - r));
        near.set(e, r, j - r, c.sum(terms));
      }
  }
  std::vector<int> top;
  for (EdgeIndex e = 0; e < m; ++e) top.push_back(p.get(e, h, h));
  c.set_output(c.sum(top));
  return c;
}

Circuit build_circuit_ebt(const RedBlueGraph& g, int k) {
  require_even(k);
  const int m = g.num_edges();
  const int h = k / 2;
  Circuit c(g.num_vertices());
  Cells p(m, h);
  // side(e, x, r, b): sum of P(e', r, b) over e' != e at endpoint x of e.
  Cells side_u(m, h);
  Cells side_v(m, h);
  auto y = [&](Vertex v) { return c.input(v - 1); };

  for (int j = 1; j <= k; ++j) {
    for (int r = std::max(0, j - h); r <= std::min(j, h); ++r) {
      const int b = j - r;
      for (EdgeIndex e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        const int red = is_red(g, e);
        if (red ? r == 0 : b == 0) continue;
        if (j == 1) {
          p.set(e, r, b, c.mul(y(ed.u), y(ed.v)));
          continue;
        }
        const int r0 = r - red;
        const int b0 = b - (1 - red);
        std::vector<int> terms;
        for (int r1 = 0; r1 <= r0; ++r1)
          for (int b1 = 0; b1 <= b0; ++b1) {
            if (r1 + b1 == 0 || r1 + b1 == j - 1) continue;
            const int at_u = side_u.get(e, r1, b1);
            const int at_v = side_v.get(e, r0 - r1, b0 - b1);
            if (at_u && at_v) terms.push_back(c.mul(at_u, at_v));
          }
        if (const int at_v = side_v.get(e, r0, b0)) terms.push_back(c.mul(y(ed.u), at_v));
        if (const int at_u = side_u.get(e, r0, b0)) terms.push_back(c.mul(y(ed.v), at_u));
        p.set(e, r, b, c.sum(terms));
      }
    }
    for (int r = std::max(0, j - h); r <= std::min(j, h); ++r)
      for (EdgeIndex e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        for (auto [x, cells] : {std::pair{ed.u, &side_u}, std::pair{ed.v, &side_v}}) {
          std::vector<int> terms;
          for (const Incidence& inc : g.incident(x))
            if (inc.edge != e) terms.push_back(p.get(inc.edge, r, j - r));
          cells->set(e, r, j - r, c.sum(terms));
        }
      }
  }
  std::vector<int> top;
  for (EdgeIndex e = 0; e < m; ++e) top.push_back(p.get(e, h, h));
  c.set_output(c.sum(top));
  return c;
}

Circuit build_circuit_ebp(const RedBlueGraph& g, int k) {
  require_even(k);
  const int n = g.num_vertices();
  const int h = k / 2;
  Circuit c(n);
  Cells p(n + 1, h);
  for (Vertex v = 1; v <= n; ++v) p.set(v, 0, 0, c.input(v - 1));
  for (int j = 1; j <= k; ++j)
    for (int r = std::max(0, j - h); r <= std::min(j, h); ++r) {
      const int b = j - r;
      for (Vertex v = 1; v <= n; ++v) {
        std::vector<int> terms;
        for (const Incidence& inc : g.incident(v)) {
          const int red = is_red(g, inc.edge);
          terms.push_back(p.get(inc.neighbor, r - red, b - (1 - red)));
        }
        p.set(v, r, b, c.mul(c.input(v - 1), c.sum(terms)));
      }
    }
  std::vector<int> top;
  for (Vertex v = 1; v <= n; ++v) top.push_back(p.get(v, h, h));
  c.set_output(c.sum(top));
  return c;
}

Circuit build_circuit(const RedBlueGraph& g, int k, WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Subgraph: return build_circuit_ebcs(g, k);
    case WitnessKind::Tree: return build_circuit_ebt(g, k);
    case WitnessKind::Path: return build_circuit_ebp(g, k);
  }
  throw std::invalid_argument("unknown witness kind");
}

std::vector<std::uint64_t> multilinear_support(const Circuit& c) {
  if (c.num_vars() > 64) throw std::invalid_argument("multilinear_support needs at most 64 variables");
  // Only gates reachable from the output are expanded.
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
  std::vector<std::vector<std::uint64_t>> mono(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!live[i]) continue;
    const Gate& g = c.gates()[i];
    std::vector<std::uint64_t>& out = mono[i];
    switch (g.op) {
      case GateOp::Const0: break;
      case GateOp::Const1: out = {0}; break;
      case GateOp::Input: out = {std::uint64_t{1} << g.a}; break;
      case GateOp::Add: {
        const auto& x = mono[static_cast<std::size_t>(g.a)];
        const auto& y = mono[static_cast<std::size_t>(g.b)];
        std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        break;
      }
      case GateOp::Mul: {
        for (std::uint64_t x : mono[static_cast<std::size_t>(g.a)])
          for (std::uint64_t y : mono[static_cast<std::size_t>(g.b)])
            if (!(x & y)) out.push_back(x | y);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        break;
      }
    }
  }
  return mono[static_cast<std::size_t>(c.output())];
}

}  // namespace bcslab
