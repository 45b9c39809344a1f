#include "upo/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace upo {

namespace {

std::vector<EdgeId> sorted_edge_ids(const ProgressiveGraph& g) {
  std::vector<EdgeId> ids;
  ids.reserve(g.edges().size());
  for (const auto& [id, _] : g.edges()) ids.push_back(id);
  return ids;  // map iteration is already id-sorted
}

}  // namespace

EnumerationResult enumerate_upos(const ProgressiveGraph& g,
                                 bool require_admissible, Definition definition,
                                 std::size_t limit, bool force) {
  std::vector<EdgeId> ids = sorted_edge_ids(g);
  std::size_t n = ids.size();
  if (n > kEnumerateEdgeCap && !force) {
    throw Error(ErrorKind::TooLarge,
                "graph has " + std::to_string(n) + " edges, enumeration cap is " +
                    std::to_string(kEnumerateEdgeCap) + " (pass force to override)");
  }

  EnumerationResult result;
  if (limit == 0) {
    result.exhausted = false;
    return result;
  }

  // Strict edge-to-edge reachability as bitmasks: candidate edges are those
  // whose unplaced predecessors are all gone, which walks exactly the linear
  // extensions of reachability, so Q1/U1 holds along every branch by
  // construction. The full checker still runs on each completed order.
  std::vector<std::uint64_t> preds(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.edge_reachable(ids[j], ids[i])) {
        preds[i] |= std::uint64_t{1} << j;
      }
    }
  }

  std::vector<std::size_t> picked;
  picked.reserve(n);
  bool truncated = false;

  auto emit = [&]() {
    std::vector<EdgeId> seq;
    seq.reserve(n);
    for (std::size_t i : picked) seq.push_back(ids[i]);
    EdgeOrder order = EdgeOrder::from_sequence(std::move(seq));
    CheckReport axioms = definition == Definition::U ? check_u(g, order)
                                                     : check_q(g, order);
    if (!axioms.passed) return;
    if (require_admissible && !check_admissible(g, order).passed) return;
    result.orders.push_back(std::move(order));
    if (result.orders.size() >= limit) truncated = true;
  };

  auto walk = [&](auto&& self, std::uint64_t remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t i = 0; i < n && !truncated; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if (!(remaining & bit)) continue;
      if (preds[i] & remaining) continue;  // a predecessor is still unplaced
      picked.push_back(i);
      self(self, remaining & ~bit);
      picked.pop_back();
    }
  };

  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  walk(walk, all);
  result.exhausted = !truncated;
  return result;
}

bool definitions_agree(const ProgressiveGraph& g, bool force) {
  std::vector<EdgeId> ids = sorted_edge_ids(g);
  if (ids.size() > kAgreeEdgeCap && !force) {
    throw Error(ErrorKind::TooLarge,
                "graph has " + std::to_string(ids.size()) +
                    " edges, agreement cap is " + std::to_string(kAgreeEdgeCap) +
                    " (pass force to override)");
  }

  std::vector<EdgeId> perm = ids;
  do {
    EdgeOrder order = EdgeOrder::from_sequence(perm);
    if (check_u(g, order).passed != check_q(g, order).passed) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace upo
