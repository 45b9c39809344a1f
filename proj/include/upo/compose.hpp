#pragma once

#include <map>
#include <set>
#include <vector>

#include "upo/axioms.hpp"
#include "upo/graph.hpp"
#include "upo/order.hpp"

namespace upo {

/// A graph together with an order on its edges. The library's composition
/// and layer operations produce and consume these pairs.
struct UpoGraph {
  ProgressiveGraph graph;
  EdgeOrder order;
};

/// Where a composed edge came from: untouched from one factor, or fused
/// from the k-th output of the first factor and the k-th input of the
/// second. A fused edge keeps the first factor's id; the second factor's id
/// is retired and recorded here.
struct Provenance {
  enum class Kind { FromFirst, FromSecond, Fused };

  Kind kind = Kind::FromFirst;
  EdgeId first_id;     // FromFirst and Fused
  EdgeId second_id;    // FromSecond and Fused
  int pair_index = 0;  // Fused: 1-based fusion position

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ComposedGraph {
  ProgressiveGraph graph;
  EdgeOrder order;
  std::map<EdgeId, Provenance> provenance;

  /// Surviving ids that trace to the first factor (fused edges included).
  std::set<EdgeId> first_image() const;
  /// Surviving ids that trace to the second factor (fused edges included).
  std::set<EdgeId> second_image() const;
};

struct ComposeOptions {
  /// Check that both factors are admissible UPO-graphs before composing.
  /// Callers that construct factors by provably sound means may switch the
  /// check off.
  bool validate_inputs = true;
  /// Refuse to fuse an output that is itself an input edge of the first
  /// factor with an input that is itself an output edge of the second
  /// (a wire meeting a wire). Off by default: the fusion is well defined
  /// and simply threads the wire through.
  bool strict_wires = false;
};

/// Raised when a compose factor fails is_admissible_upo; carries the
/// failing checker report.
class NotAdmissibleError : public Error {
 public:
  NotAdmissibleError(const std::string& message, CheckReport report,
                     std::vector<std::string> witness = {});
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// Glues the k-th output edge of `first` (by rank) to the k-th input edge
/// of `second`: the fused edge runs from the output's source to the input's
/// target, the matched boundary leaves disappear, and the composed order is
/// the canonical shuffle of the two factor orders. ArityMismatch when the
/// output and input counts differ, DuplicateId when the factors share a
/// surviving id.
ComposedGraph compose(const UpoGraph& first, const UpoGraph& second,
                      const ComposeOptions& opts = {});

/// Left fold of compose over the stages. A singleton comes back unchanged
/// (provenance FromFirst); the empty list yields the empty composed graph.
/// Errors from an inner compose are tagged with the stage index.
ComposedGraph compose_many(const std::vector<UpoGraph>& stages,
                           const ComposeOptions& opts = {});

}  // namespace upo
