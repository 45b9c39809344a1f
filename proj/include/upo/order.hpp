#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "upo/errors.hpp"
#include "upo/graph.hpp"

namespace upo {

/// Closed interval [lo, hi] of ranks, or the distinguished empty interval.
/// Empty is its own state, not a sentinel range: it contains nothing,
/// intersects nothing, and is contained in everything.
class Interval {
 public:
  static Interval empty() { return Interval(); }
  static Interval closed(int lo, int hi);

  bool is_empty() const { return empty_; }
  int lo() const;  // non-empty only
  int hi() const;  // non-empty only
  int length() const { return empty_ ? 0 : hi_ - lo_ + 1; }

  bool contains(int rank) const;
  bool contains(const Interval& other) const;  // other subset of this
  bool intersects(const Interval& other) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval() = default;
  bool empty_ = true;
  int lo_ = 0;
  int hi_ = 0;
};

std::string to_string(const Interval& iv);

/// Total order on a finite set of edges, exposed as the rank bijection
/// id <-> 1..size() and as the ranked sequence of ids.
class EdgeOrder {
 public:
  EdgeOrder() = default;  // order on the empty set

  /// Ranks follow the sequence position (1-based). DuplicateId on repeats.
  static EdgeOrder from_sequence(std::vector<EdgeId> sequence);

  std::size_t size() const { return sequence_.size(); }
  bool contains(const EdgeId& e) const;
  int rank(const EdgeId& e) const;            // UnknownEdge if absent
  const EdgeId& at_rank(int rank) const;      // UnknownEdge if out of range
  const std::vector<EdgeId>& sequence() const { return sequence_; }

  friend bool operator==(const EdgeOrder& a, const EdgeOrder& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<EdgeId> sequence_;
  std::map<EdgeId, int> rank_;
};

struct OrderBlock {
  std::string label;
  bool is_marker = false;
  std::vector<EdgeId> edges;  // ascending rank
  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// Consecutive blocks of an order: every rank in an earlier block lies
/// strictly below every rank in a later block.
class IntervalPartition {
 public:
  explicit IntervalPartition(std::vector<OrderBlock> blocks);

  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  std::size_t marker_count() const;
  const OrderBlock& basic(std::size_t k) const;  // k-th non-marker block
  const EdgeId& marker(std::size_t k) const;     // k-th marker edge

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;

 private:
  std::vector<OrderBlock> blocks_;
};

enum class ClosureSide { Left, Right };

/// Smallest interval containing the ranks of `subset`; empty for the empty set.
Interval hull(const EdgeOrder& order, const std::set<EdgeId>& subset);
Interval hull(const EdgeOrder& order, const std::vector<EdgeId>& subset);

/// Splits `order` at the markers m_1 < ... < m_n into
/// B0, {m_1}, B1, ..., {m_n}, Bn. MarkersNotSorted if the markers are not
/// strictly increasing, UnknownEdge if one is not in the order.
IntervalPartition partition_by_markers(const EdgeOrder& order,
                                       const std::vector<EdgeId>& markers);

/// Merges each marker into the adjacent basic block: Right gives
/// J_k = B_{k-1} + {m_k} (last block stays bare), Left gives
/// I_k = {m_k} + B_k (first block stays bare).
IntervalPartition closures(const IntervalPartition& partition, ClosureSide side);

/// Order induced on a subset, ranks compressed to 1..|subset|.
EdgeOrder restrict_to(const EdgeOrder& order, const std::set<EdgeId>& subset);

/// Concatenates orders over disjoint edge sets; OverlappingDomains otherwise.
EdgeOrder concat(const std::vector<EdgeOrder>& blocks);

}  // namespace upo
