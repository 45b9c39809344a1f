#include "upo/order.hpp"

#include <algorithm>
#include <cassert>

namespace upo {

// ---- Interval ----

Interval Interval::closed(int lo, int hi) {
  assert(lo <= hi);
  Interval iv;
  iv.empty_ = false;
  iv.lo_ = lo;
  iv.hi_ = hi;
  return iv;
}

int Interval::lo() const {
  assert(!empty_);
  return lo_;
}

int Interval::hi() const {
  assert(!empty_);
  return hi_;
}

bool Interval::contains(int rank) const {
  return !empty_ && lo_ <= rank && rank <= hi_;
}

bool Interval::contains(const Interval& other) const {
  if (other.empty_) return true;
  return !empty_ && lo_ <= other.lo_ && other.hi_ <= hi_;
}

bool Interval::intersects(const Interval& other) const {
  if (empty_ || other.empty_) return false;
  return lo_ <= other.hi_ && other.lo_ <= hi_;
}

std::string to_string(const Interval& iv) {
  if (iv.is_empty()) return "(empty)";
  return "[" + std::to_string(iv.lo()) + "," + std::to_string(iv.hi()) + "]";
}

// ---- EdgeOrder ----

EdgeOrder EdgeOrder::from_sequence(std::vector<EdgeId> sequence) {
  EdgeOrder order;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const EdgeId& e = sequence[i];
    if (e.empty()) {
      throw Error(ErrorKind::MalformedToken, "empty edge id in order");
    }
    if (!order.rank_.emplace(e, static_cast<int>(i) + 1).second) {
      throw Error(ErrorKind::DuplicateId,
                  "edge '" + e + "' appears twice in the order", {e});
    }
  }
  order.sequence_ = std::move(sequence);
  return order;
}

bool EdgeOrder::contains(const EdgeId& e) const { return rank_.count(e) != 0; }

int EdgeOrder::rank(const EdgeId& e) const {
  auto it = rank_.find(e);
  if (it == rank_.end()) {
    throw Error(ErrorKind::UnknownEdge, "edge '" + e + "' is not in the order", {e});
  }
  return it->second;
}

const EdgeId& EdgeOrder::at_rank(int rank) const {
  if (rank < 1 || static_cast<std::size_t>(rank) > sequence_.size()) {
    throw Error(ErrorKind::UnknownEdge,
                "no edge at rank " + std::to_string(rank));
  }
  return sequence_[static_cast<std::size_t>(rank) - 1];
}

// ---- IntervalPartition ----

IntervalPartition::IntervalPartition(std::vector<OrderBlock> blocks)
    : blocks_(std::move(blocks)) {}

std::size_t IntervalPartition::marker_count() const {
  std::size_t n = 0;
  for (const OrderBlock& b : blocks_) n += b.is_marker ? 1 : 0;
  return n;
}

const OrderBlock& IntervalPartition::basic(std::size_t k) const {
  std::size_t seen = 0;
  for (const OrderBlock& b : blocks_) {
    if (!b.is_marker && seen++ == k) return b;
  }
  throw std::out_of_range("basic block index out of range");
}

const EdgeId& IntervalPartition::marker(std::size_t k) const {
  std::size_t seen = 0;
  for (const OrderBlock& b : blocks_) {
    if (b.is_marker && seen++ == k) return b.edges.front();
  }
  throw std::out_of_range("marker index out of range");
}

// ---- operations ----

Interval hull(const EdgeOrder& order, const std::set<EdgeId>& subset) {
  bool any = false;
  int lo = 0;
  int hi = 0;
  for (const EdgeId& e : subset) {
    int r = order.rank(e);
    if (!any) {
      lo = hi = r;
      any = true;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  return any ? Interval::closed(lo, hi) : Interval::empty();
}

Interval hull(const EdgeOrder& order, const std::vector<EdgeId>& subset) {
  return hull(order, std::set<EdgeId>(subset.begin(), subset.end()));
}

IntervalPartition partition_by_markers(const EdgeOrder& order,
                                       const std::vector<EdgeId>& markers) {
  int prev_rank = 0;
  for (std::size_t k = 0; k < markers.size(); ++k) {
    int r = order.rank(markers[k]);  // UnknownEdge propagates
    if (r <= prev_rank && k > 0) {
      throw Error(ErrorKind::MarkersNotSorted,
                  "markers '" + markers[k - 1] + "' and '" + markers[k] +
                      "' are not strictly increasing",
                  {markers[k - 1], markers[k]});
    }
    prev_rank = r;
  }

  std::vector<OrderBlock> blocks;
  const std::vector<EdgeId>& seq = order.sequence();
  std::size_t pos = 0;
  for (std::size_t k = 0; k < markers.size(); ++k) {
    std::size_t stop = static_cast<std::size_t>(order.rank(markers[k])) - 1;
    OrderBlock basic{"B" + std::to_string(k), false, {}};
    for (; pos < stop; ++pos) basic.edges.push_back(seq[pos]);
    blocks.push_back(std::move(basic));
    blocks.push_back(OrderBlock{"M" + std::to_string(k + 1), true, {markers[k]}});
    ++pos;  // skip the marker itself
  }
  OrderBlock last{"B" + std::to_string(markers.size()), false, {}};
  for (; pos < seq.size(); ++pos) last.edges.push_back(seq[pos]);
  blocks.push_back(std::move(last));

  return IntervalPartition(std::move(blocks));
}

IntervalPartition closures(const IntervalPartition& partition, ClosureSide side) {
  const std::vector<OrderBlock>& blocks = partition.blocks();
  // Shape produced by partition_by_markers: B0 M1 B1 ... Mn Bn.
  if (blocks.size() % 2 != 1) {
    throw std::logic_error("closures: partition does not alternate blocks and markers");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].is_marker != (i % 2 == 1)) {
      throw std::logic_error("closures: partition does not alternate blocks and markers");
    }
  }

  std::size_t n = blocks.size() / 2;  // marker count
  std::vector<OrderBlock> out;
  if (side == ClosureSide::Right) {
    // J_k = B_{k-1} + {m_k}; the final block is bare.
    for (std::size_t k = 0; k < n; ++k) {
      OrderBlock j{"J" + std::to_string(k + 1), false, blocks[2 * k].edges};
      j.edges.push_back(blocks[2 * k + 1].edges.front());
      out.push_back(std::move(j));
    }
    out.push_back(OrderBlock{"J" + std::to_string(n + 1), false, blocks[2 * n].edges});
  } else {
    // I_0 is bare; I_k = {m_k} + B_k.
    out.push_back(OrderBlock{"I0", false, blocks[0].edges});
    for (std::size_t k = 1; k <= n; ++k) {
      OrderBlock i{"I" + std::to_string(k), false, {blocks[2 * k - 1].edges.front()}};
      for (const EdgeId& e : blocks[2 * k].edges) i.edges.push_back(e);
      out.push_back(std::move(i));
    }
  }
  return IntervalPartition(std::move(out));
}

EdgeOrder restrict_to(const EdgeOrder& order, const std::set<EdgeId>& subset) {
  for (const EdgeId& e : subset) {
    if (!order.contains(e)) {
      throw Error(ErrorKind::UnknownEdge,
                  "edge '" + e + "' is not in the order", {e});
    }
  }
  std::vector<EdgeId> seq;
  seq.reserve(subset.size());
  for (const EdgeId& e : order.sequence()) {
    if (subset.count(e)) seq.push_back(e);
  }
  return EdgeOrder::from_sequence(std::move(seq));
}

EdgeOrder concat(const std::vector<EdgeOrder>& blocks) {
  std::vector<EdgeId> seq;
  std::set<EdgeId> seen;
  for (const EdgeOrder& block : blocks) {
    for (const EdgeId& e : block.sequence()) {
      if (!seen.insert(e).second) {
        throw Error(ErrorKind::OverlappingDomains,
                    "edge '" + e + "' appears in two concatenated orders", {e});
      }
      seq.push_back(e);
    }
  }
  return EdgeOrder::from_sequence(std::move(seq));
}

}  // namespace upo
