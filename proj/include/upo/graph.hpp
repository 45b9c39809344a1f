#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "upo/errors.hpp"

namespace upo {

// Vertex and edge names are opaque tokens. Within one graph the two
// namespaces are disjoint; build_graph enforces that.
using VertexId = std::string;
using EdgeId = std::string;

struct EdgeEnds {
  VertexId source;
  VertexId target;
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Incident edges of one vertex. Each list is ordered by edge id;
/// all_edges is the union of the other two.
struct IncidenceView {
  std::vector<EdgeId> in_edges;
  std::vector<EdgeId> out_edges;
  std::vector<EdgeId> all_edges;
};

/// Acyclic directed multigraph with a distinguished boundary: a set of
/// vertices of total degree one. Immutable once built, so instances can be
/// shared freely; every query is const and pure.
class ProgressiveGraph {
 public:
  ProgressiveGraph() = default;  // the empty graph

  const std::vector<VertexId>& vertices() const { return vertices_; }  // sorted
  const std::map<EdgeId, EdgeEnds>& edges() const { return edges_; }
  const std::set<VertexId>& boundary() const { return boundary_; }

  bool has_vertex(const VertexId& v) const;
  bool has_edge(const EdgeId& e) const;
  const EdgeEnds& edge(const EdgeId& e) const;  // UnknownEdge if absent

  const IncidenceView& incidence(const VertexId& v) const;  // UnknownVertex
  bool is_inner(const VertexId& v) const;      // not on the boundary
  bool is_isolated(const VertexId& v) const;   // no incident edges
  /// At least one incoming and at least one outgoing edge.
  bool is_processive(const VertexId& v) const;

  /// True iff some directed path starts with e1 and ends with e2. The one
  /// edge path counts, so edge_reachable(e, e) is always true.
  bool edge_reachable(const EdgeId& e1, const EdgeId& e2) const;

  /// (input edges, output edges): edges whose source resp. target lies on
  /// the boundary. A wire (boundary to boundary) appears in both sets.
  std::pair<std::set<EdgeId>, std::set<EdgeId>> domain_codomain() const;

  friend bool operator==(const ProgressiveGraph& a, const ProgressiveGraph& b);

  friend ProgressiveGraph build_graph(std::vector<VertexId> vertices,
                                      std::vector<std::pair<EdgeId, EdgeEnds>> edges,
                                      std::set<VertexId> boundary);

 private:
  std::vector<VertexId> vertices_;
  std::map<EdgeId, EdgeEnds> edges_;
  std::set<VertexId> boundary_;
  std::map<VertexId, IncidenceView> incidence_;
  std::map<VertexId, std::size_t> vertex_pos_;
  std::vector<std::vector<bool>> vertex_reach_;  // reflexive reachability
};

/// Validates and freezes a graph. Throws MalformedToken, DuplicateId,
/// DanglingEndpoint, BoundaryNotLeaf or CycleDetected; a self-loop is
/// reported as the one-vertex cycle it is.
ProgressiveGraph build_graph(std::vector<VertexId> vertices,
                             std::vector<std::pair<EdgeId, EdgeEnds>> edges,
                             std::set<VertexId> boundary);

/// Replaces every isolated vertex u by two fresh inner leaves joined by a
/// fresh edge (u.s -> u.t). Idempotent; graphs without isolated vertices
/// come back unchanged.
ProgressiveGraph virtualize_isolated(const ProgressiveGraph& g);

}  // namespace upo
