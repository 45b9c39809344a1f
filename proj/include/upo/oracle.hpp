#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "upo/axioms.hpp"
#include "upo/graph.hpp"
#include "upo/order.hpp"

namespace upo {

enum class Definition { U, Q };

struct EnumerationResult {
  std::vector<EdgeOrder> orders;  // lexicographic by id sequence
  bool exhausted = true;          // false iff the limit stopped the search
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

// Brute force is deliberately kept honest at desk scale. Larger runs must
// say `force = true` and accept the consequences.
inline constexpr std::size_t kEnumerateEdgeCap = 12;
inline constexpr std::size_t kAgreeEdgeCap = 7;

/// Every order satisfying the chosen definition (optionally admissibility
/// too), found by backtracking over linear extensions of edge reachability.
/// TooLarge when |E| exceeds kEnumerateEdgeCap and force is not set.
EnumerationResult enumerate_upos(const ProgressiveGraph& g,
                                 bool require_admissible,
                                 Definition definition = Definition::Q,
                                 std::size_t limit = kNoLimit,
                                 bool force = false);

/// Runs check_u and check_q over every permutation of the edges and reports
/// whether the verdicts agree everywhere. TooLarge when |E| exceeds
/// kAgreeEdgeCap and force is not set.
bool definitions_agree(const ProgressiveGraph& g, bool force = false);

}  // namespace upo
