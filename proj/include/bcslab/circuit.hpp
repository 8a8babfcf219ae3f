#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcslab/graph.hpp"

namespace bcslab {

enum class GateOp : std::uint8_t { Input, Const0, Const1, Add, Mul };

struct Gate {
  GateOp op;
  int a = -1;  // variable id for Input, operand gate otherwise
  int b = -1;
};

/// Arithmetic DAG over variables 0..num_vars-1. Gates are appended in
/// topological order; Add and Mul fold the constants 0 and 1 away, so a
/// structurally zero polynomial ends up as a single C0 output.
class Circuit {
 public:
  explicit Circuit(int num_vars = 0);

  int input(int var);  // one gate per variable, reused
  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int a, int b);
  int mul(int a, int b);
  int sum(const std::vector<int>& terms);

  void set_output(int g) { output_ = g; }
  int output() const { return output_; }
  int num_vars() const { return num_vars_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int g) const { return gates_[static_cast<std::size_t>(g)]; }

  /// Largest syntactic degree of any gate feeding the output.
  int degree_bound() const { return max_degree_[static_cast<std::size_t>(output_)]; }
  /// Degree d when every monomial of the output has degree exactly d.
  std::optional<int> homogeneous_degree() const;
  bool is_zero() const { return output_ == 0; }

  /// One gate per line: g<id> = IN x<var> | ADD g<a> g<b> | MUL g<a> g<b> | C0 | C1,
  /// then `out g<id>`.
  std::string dump() const;

 private:
  static constexpr int kMixed = -1;

  int push(Gate g, int max_deg, int hom_deg);

  int num_vars_;
  std::vector<Gate> gates_;
  std::vector<int> max_degree_;
  std::vector<int> hom_degree_;  // kMixed when not homogeneous
  std::vector<int> input_gate_;
  int output_ = 0;
};

/// Sum over edges of P_k(e, k/2, k/2) in the variables x_e (variable e).
Circuit build_circuit_ebcs(const RedBlueGraph& g, int k);
/// Tree recurrence in the variables y_v (variable v-1); degree k+1.
Circuit build_circuit_ebt(const RedBlueGraph& g, int k);
/// Path recurrence in the variables y_v (variable v-1); degree k+1.
Circuit build_circuit_ebp(const RedBlueGraph& g, int k);
Circuit build_circuit(const RedBlueGraph& g, int k, WitnessKind kind);

/// Multilinear monomials of the output (as variable bitmasks, ascending),
/// by sparse expansion that drops every product sharing a variable. Since
/// all coefficients are non-negative integers nothing else cancels.
/// Needs num_vars <= 64; meant for small circuits.
std::vector<std::uint64_t> multilinear_support(const Circuit& c);

}  // namespace bcslab
