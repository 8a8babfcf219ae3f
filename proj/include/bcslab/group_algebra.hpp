#pragma once

#include <cstdint>
#include <vector>

#include "bcslab/gf2.hpp"

namespace bcslab {

enum class AlgebraBasis : std::uint8_t { Group, Nilpotent };
enum class AlgebraBackend : std::uint8_t { XorConvolution, SubsetConvolution };

/// Element of GF(2^ell)[Z_2^k_dim]. In the group basis coeffs[w] belongs to
/// the group element w (a bit-vector); in the nilpotent basis coeffs[S]
/// belongs to the monomial prod_{j in S} u_j with u_j = 1 + e_j, u_j^2 = 0.
struct GroupAlgebraElement {
  int k_dim = 0;
  int ell = 64;
  AlgebraBasis basis = AlgebraBasis::Group;
  std::vector<std::uint64_t> coeffs;

  static GroupAlgebraElement zero(int k_dim, int ell, AlgebraBasis basis);
  static GroupAlgebraElement one(int k_dim, int ell, AlgebraBasis basis);
  /// lambda * (identity + v), written in the requested basis.
  static GroupAlgebraElement shifted(int k_dim, int ell, AlgebraBasis basis, std::uint32_t v, std::uint64_t lambda);

  bool is_zero() const;
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
};

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scale(const GroupAlgebraElement& a, std::uint64_t s);

/// Group basis needs XorConvolution (O(4^k)); nilpotent basis needs
/// SubsetConvolution (ranked zeta/Moebius, O(2^k k^2)).
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b, AlgebraBackend backend);

/// Superset-zeta transform: coefficient at S becomes the sum over V >= S.
/// Maps group basis to nilpotent basis and back (it is an involution).
GroupAlgebraElement change_basis(const GroupAlgebraElement& a);

}  // namespace bcslab
