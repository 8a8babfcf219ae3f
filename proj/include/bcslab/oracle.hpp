#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "bcslab/graph.hpp"

namespace bcslab {

enum class SolveMode : std::uint8_t { Exact, AtLeast };

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  std::uint64_t budget = 10'000'000;  // search nodes before ResourceLimitError
};

/// Brute-force ground truth. Exact returns a witness of size k; AtLeast the
/// smallest size >= k that admits one.
std::optional<Witness> oracle_solve(const RedBlueGraph& g, int k, WitnessKind kind, SolveMode mode,
                                    const OracleOptions& opts = {});

/// Number of edge sets of size exactly k that are valid witnesses of `kind`.
std::uint64_t oracle_count(const RedBlueGraph& g, int k, WitnessKind kind, const OracleOptions& opts = {});

/// Calls `visit` with every valid witness edge set (ascending indices) of size
/// exactly k. Returning false from `visit` stops the enumeration.
void oracle_enumerate(const RedBlueGraph& g, int k, WitnessKind kind,
                      const std::function<bool(const std::vector<EdgeIndex>&)>& visit,
                      const OracleOptions& opts = {});

}  // namespace bcslab
