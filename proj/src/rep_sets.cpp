#include "bcslab/rep_sets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <tuple>

namespace bcslab {

namespace {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = det * a[c][c] % p;
    const std::uint64_t inv = mod_inv(a[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t j = c; j < n; ++j) a[r][j] = (a[r][j] + (p - f) * a[c][j]) % p;
    }
  }
  return det;
}

// p-subsets of [k_cap] in colex order.
std::vector<std::vector<int>> colex_subsets(int k_cap, int p) {
  std::vector<std::vector<int>> out;
  if (p > k_cap) return out;
  for (std::uint32_t s = (std::uint32_t{1} << p) - 1; s < (std::uint32_t{1} << k_cap);) {
    std::vector<int> rows;
    for (std::uint32_t x = s; x; x &= x - 1) rows.push_back(std::countr_zero(x));
    out.push_back(std::move(rows));
    if (p == 0) break;
    const std::uint32_t c = s & (~s + 1);
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

RepConfig make_rep_config(int ground_size, int k_cap) {
  std::uint64_t q = static_cast<std::uint64_t>(ground_size + k_cap) + 1;
  while (!is_prime(q)) ++q;
  return RepConfig{k_cap, q};
}

SetFamily reduce_family(const SetFamily& s, int k_cap, const RepConfig& cfg) {
  if (s.p > k_cap) throw std::invalid_argument("reduce_family: p exceeds k_cap");
  const std::uint64_t prime = cfg.field_prime;
  if (prime <= static_cast<std::uint64_t>(s.ground_size + k_cap) || !is_prime(prime))
    throw std::invalid_argument("reduce_family: field prime too small");
  SetFamily out{s.ground_size, s.p, {}};
  if (s.sets.size() <= 1) {
    out.sets = s.sets;
    return out;
  }
  const auto rows = colex_subsets(k_cap, s.p);

  // Reduced echelon basis: pivot column per kept vector.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivot;
  for (const FamilyMember& m : s.sets) {
    std::vector<int> cols;
    for (VertexSet x = m.set; x; x &= x - 1) cols.push_back(std::countr_zero(x) + 1);
    std::vector<std::uint64_t> vec(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<std::vector<std::uint64_t>> minor(static_cast<std::size_t>(s.p),
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(s.p)));
      for (int a = 0; a < s.p; ++a)
        for (int b = 0; b < s.p; ++b)
          minor[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              mod_pow(static_cast<std::uint64_t>(cols[static_cast<std::size_t>(b)]),
                      static_cast<std::uint64_t>(rows[i][static_cast<std::size_t>(a)]), prime);
      vec[i] = det_mod(std::move(minor), prime);
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::uint64_t f = vec[pivot[j]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < vec.size(); ++i) vec[i] = (vec[i] + (prime - f) * basis[j][i]) % prime;
    }
    const auto nz = std::find_if(vec.begin(), vec.end(), [](std::uint64_t x) { return x != 0; });
    if (nz == vec.end()) continue;
    const std::size_t pc = static_cast<std::size_t>(nz - vec.begin());
    const std::uint64_t inv = mod_inv(vec[pc], prime);
    for (std::uint64_t& x : vec) x = x * inv % prime;
    for (std::vector<std::uint64_t>& row : basis) {
      const std::uint64_t f = row[pc];
      if (f == 0) continue;
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = (row[i] + (prime - f) * vec[i]) % prime;
    }
    basis.push_back(std::move(vec));
    pivot.push_back(pc);
    out.sets.push_back(m);
  }
  return out;
}

SetFamily convolve_extend(const SetFamily& s, Vertex v) {
  SetFamily out{s.ground_size, s.p + 1, {}};
  const VertexSet bit = VertexSet{1} << (v - 1);
  for (const FamilyMember& m : s.sets) {
    if (m.set & bit) continue;
    FamilyMember x{m.set | bit, m.walk};
    x.walk.push_back(v);
    out.sets.push_back(std::move(x));
  }
  return out;
}

bool represents(const SetFamily& rep, const SetFamily& full, int q) {
  const int n = full.ground_size;
  // Every Y with |Y| <= q, by increasing bitmask.
  std::vector<VertexSet> ys{0};
  for (int size = 1; size <= std::min(q, n); ++size)
    for (VertexSet y = (VertexSet{1} << size) - 1; y < (VertexSet{1} << n);) {
      ys.push_back(y);
      const VertexSet c = y & (~y + 1);
      const VertexSet r = y + c;
      y = (((r ^ y) >> 2) / c) | r;
    }
  for (VertexSet y : ys) {
    const bool avoid_full = std::any_of(full.sets.begin(), full.sets.end(), [y](const FamilyMember& m) { return !(m.set & y); });
    if (!avoid_full) continue;
    const bool avoid_rep = std::any_of(rep.sets.begin(), rep.sets.end(), [y](const FamilyMember& m) { return !(m.set & y); });
    if (!avoid_rep) return false;
  }
  return true;
}

std::optional<Witness> solve_ebp_repsets(const RedBlueGraph& g, int k, const RepTrace& trace) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer, got " + std::to_string(k));
  const int n = g.num_vertices();
  if (n > 64) throw std::invalid_argument("solve_ebp_repsets supports at most 64 vertices");
  const int half = k / 2;
  if (g.count_color(EdgeColor::Red) < half || g.count_color(EdgeColor::Blue) < half) return std::nullopt;
  const int k_cap = k + 1;
  const RepConfig cfg = make_rep_config(n, k_cap);

  // Families of one level, keyed by (start u, end v, red count).
  using Key = std::tuple<Vertex, Vertex, int>;
  std::map<Key, SetFamily> level;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const int r = ed.color == EdgeColor::Red ? 1 : 0;
    for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      SetFamily f{n, 2, {}};
      f.sets.push_back(FamilyMember{(VertexSet{1} << (a - 1)) | (VertexSet{1} << (b - 1)), {a, b}});
      if (trace) trace(a, b, r, 1 - r, f);
      level.emplace(Key{a, b, r}, std::move(f));
    }
  }

  for (int s = 2; s <= k; ++s) {
    std::map<Key, SetFamily> next;
    for (const auto& [key, fam] : level) {
      const auto [u, w, r] = key;
      for (const Incidence& inc : g.incident(w)) {
        const int nr = r + (g.color(inc.edge) == EdgeColor::Red ? 1 : 0);
        const int nb = s - nr;
        if (nr > half || nb > half) continue;
        SetFamily ext = convolve_extend(fam, inc.neighbor);
        if (ext.sets.empty()) continue;
        auto [it, fresh] = next.try_emplace(Key{u, inc.neighbor, nr}, SetFamily{n, s + 1, {}});
        for (FamilyMember& m : ext.sets) it->second.sets.push_back(std::move(m));
      }
    }
    level.clear();
    for (auto& [key, fam] : next) {
      const auto [u, v, r] = key;
      SetFamily red = reduce_family(fam, k_cap, cfg);
      if (trace) trace(u, v, r, s - r, red);
      level.emplace(key, std::move(red));
    }
  }

  for (const auto& [key, fam] : level) {
    if (std::get<2>(key) != half || fam.sets.empty()) continue;
    const std::vector<Vertex>& walk = fam.sets.front().walk;
    Witness w{WitnessKind::Path, {}};
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) w.edges.push_back(*g.find_edge(walk[i], walk[i + 1]));
    std::sort(w.edges.begin(), w.edges.end());
    return w;
  }
  return std::nullopt;
}

}  // namespace bcslab
