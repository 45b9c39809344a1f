#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "upo/graph.hpp"
#include "upo/order.hpp"

namespace upo {

enum class Axiom { U1, U2, U3, Q1, Q2, ADM };

const char* to_string(Axiom axiom);

struct Diagnostic {
  Axiom axiom;
  std::vector<std::string> witness;  // implicated edge/vertex tokens
  std::string message;
};

/// Outcome of one checker run. passed is true exactly when diagnostics is
/// empty; the list is capped at kMaxDiagnostics and truncated marks the cap.
struct CheckReport {
  static constexpr std::size_t kMaxDiagnostics = 1000;

  bool passed = true;
  bool truncated = false;
  std::vector<Diagnostic> diagnostics;

  void add(Axiom axiom, std::vector<std::string> witness, std::string message);
};

/// Throws DomainMismatch unless the order ranges over exactly the edges of g.
void require_order_covers(const ProgressiveGraph& g, const EdgeOrder& order);

/// Hull-separation form of the axioms: linear extension of edge
/// reachability (U1), per-vertex separation of incoming and outgoing hulls
/// (U2), and nesting of same-polarity hulls (U3).
CheckReport check_u(const ProgressiveGraph& g, const EdgeOrder& order);

/// Adjacency form of the axioms: the same linear-extension condition (Q1)
/// plus the nesting condition on edges ranked between two adjacent edges
/// (Q2). Implemented from scratch; agreement with check_u is a theorem the
/// test suite exercises, not something the code shares.
CheckReport check_q(const ProgressiveGraph& g, const EdgeOrder& order);

/// Boundary compatibility only: no input edge inside an inner vertex's
/// outgoing hull and no output edge inside an inner vertex's incoming hull.
/// Does not re-check the order axioms.
CheckReport check_admissible(const ProgressiveGraph& g, const EdgeOrder& order);

/// check_q and check_admissible both pass.
bool is_admissible_upo(const ProgressiveGraph& g, const EdgeOrder& order);

}  // namespace upo
