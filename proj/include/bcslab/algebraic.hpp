#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bcslab/circuit.hpp"
#include "bcslab/group_algebra.hpp"

namespace bcslab {

/// Random data of one trial. Every variable i becomes lambda[i] * (1 + v[i]);
/// every Add gate g computes wire[2g] * a + wire[2g+1] * b. The wire scalars
/// keep a multilinear monomial reached through an even number of derivations
/// from vanishing in characteristic 2.
struct Substitution {
  std::vector<std::uint32_t> v;
  std::vector<std::uint64_t> lambda;
  std::vector<std::uint64_t> wire;
};

Substitution draw_substitution(const Circuit& c, int k_dim, int ell, std::mt19937_64& rng);

/// Gate-by-gate evaluation in the nilpotent basis with subset convolution.
GroupAlgebraElement evaluate_nilpotent(const Circuit& c, const Substitution& s, int k_dim, int ell);

/// Same circuit, group basis with XOR convolution; exponential, for tests.
GroupAlgebraElement evaluate_group(const Circuit& c, const Substitution& s, int k_dim, int ell);

/// Coefficient of u_1...u_k of the nilpotent evaluation, for a circuit that
/// is homogeneous of degree k_dim: sum over T of the scalar evaluation at
/// x_i = lambda_i * [|v_i & T| odd]. Linear parts alone reach full degree.
std::uint64_t evaluate_top_coefficient(const Circuit& c, const Substitution& s, int k_dim, int ell);

enum class DetectMethod : std::uint8_t { Auto, Full, TopCoefficient };

/// True iff some trial evaluates to a nonzero element. Never true when the
/// polynomial has no multilinear monomial of degree <= k_dim.
bool detect_multilinear(const Circuit& c, int k_dim, int ell, int trials, std::uint64_t seed,
                        DetectMethod method = DetectMethod::Auto);

int default_trials(int k);

struct AlgebraicOptions {
  int trials = 0;  // 0 picks default_trials(k)
  int ell = 64;
  std::uint64_t seed = 1;
  bool want_witness = false;
};

struct AlgebraicResult {
  bool yes = false;
  std::optional<Witness> witness;  // only with want_witness, and only when extraction succeeded
};

/// Builds the circuit of `kind` and tests it. Witnesses come from
/// self-reduction: drop an edge whenever the rest still tests positive.
AlgebraicResult randomized_solve(const RedBlueGraph& g, int k, WitnessKind kind, const AlgebraicOptions& opts);

}  // namespace bcslab
