#include "upo/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace upo {

namespace {

// Ids travel through the text formats unquoted, so keep them to printable
// non-space characters and reserve '#' for comments.
bool token_ok(const std::string& t) {
  if (t.empty()) return false;
  for (unsigned char c : t) {
    if (c <= ' ' || c == 0x7f || c == '#') return false;
  }
  return true;
}

}  // namespace

bool ProgressiveGraph::has_vertex(const VertexId& v) const {
  return vertex_pos_.count(v) != 0;
}

bool ProgressiveGraph::has_edge(const EdgeId& e) const {
  return edges_.count(e) != 0;
}

const EdgeEnds& ProgressiveGraph::edge(const EdgeId& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    throw Error(ErrorKind::UnknownEdge, "unknown edge '" + e + "'", {e});
  }
  return it->second;
}

const IncidenceView& ProgressiveGraph::incidence(const VertexId& v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) {
    throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + v + "'", {v});
  }
  return it->second;
}

bool ProgressiveGraph::is_inner(const VertexId& v) const {
  if (!has_vertex(v)) {
    throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + v + "'", {v});
  }
  return boundary_.count(v) == 0;
}

bool ProgressiveGraph::is_isolated(const VertexId& v) const {
  const IncidenceView& iv = incidence(v);
  return iv.in_edges.empty() && iv.out_edges.empty();
}

bool ProgressiveGraph::is_processive(const VertexId& v) const {
  const IncidenceView& iv = incidence(v);
  return !iv.in_edges.empty() && !iv.out_edges.empty();
}

bool ProgressiveGraph::edge_reachable(const EdgeId& e1, const EdgeId& e2) const {
  const EdgeEnds& a = edge(e1);
  const EdgeEnds& b = edge(e2);
  if (e1 == e2) return true;  // the one-edge path
  return vertex_reach_[vertex_pos_.at(a.target)][vertex_pos_.at(b.source)];
}

std::pair<std::set<EdgeId>, std::set<EdgeId>> ProgressiveGraph::domain_codomain() const {
  std::set<EdgeId> inputs;
  std::set<EdgeId> outputs;
  for (const auto& [id, ends] : edges_) {
    if (boundary_.count(ends.source)) inputs.insert(id);
    if (boundary_.count(ends.target)) outputs.insert(id);
  }
  return {std::move(inputs), std::move(outputs)};
}

bool operator==(const ProgressiveGraph& a, const ProgressiveGraph& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
         a.boundary_ == b.boundary_;
}

ProgressiveGraph build_graph(std::vector<VertexId> vertices,
                             std::vector<std::pair<EdgeId, EdgeEnds>> edges,
                             std::set<VertexId> boundary) {
  ProgressiveGraph g;

  for (const VertexId& v : vertices) {
    if (!token_ok(v)) {
      throw Error(ErrorKind::MalformedToken,
                  "vertex id '" + v + "' is not a plain token", {v});
    }
    if (g.vertex_pos_.count(v)) {
      throw Error(ErrorKind::DuplicateId, "duplicate vertex id '" + v + "'", {v});
    }
    g.vertex_pos_.emplace(v, 0);  // position assigned after sorting
    g.incidence_.emplace(v, IncidenceView{});
  }

  for (const auto& [id, ends] : edges) {
    if (!token_ok(id)) {
      throw Error(ErrorKind::MalformedToken,
                  "edge id '" + id + "' is not a plain token", {id});
    }
    if (g.vertex_pos_.count(id)) {
      throw Error(ErrorKind::DuplicateId,
                  "edge id '" + id + "' collides with a vertex id", {id});
    }
    if (g.edges_.count(id)) {
      throw Error(ErrorKind::DuplicateId, "duplicate edge id '" + id + "'", {id});
    }
    if (!g.vertex_pos_.count(ends.source)) {
      throw Error(ErrorKind::DanglingEndpoint,
                  "edge '" + id + "' starts at unknown vertex '" + ends.source + "'",
                  {id, ends.source});
    }
    if (!g.vertex_pos_.count(ends.target)) {
      throw Error(ErrorKind::DanglingEndpoint,
                  "edge '" + id + "' ends at unknown vertex '" + ends.target + "'",
                  {id, ends.target});
    }
    if (ends.source == ends.target) {
      throw Error(ErrorKind::CycleDetected,
                  "edge '" + id + "' is a self-loop on vertex '" + ends.source + "'",
                  {ends.source});
    }
    g.edges_.emplace(id, ends);
  }

  for (const VertexId& v : boundary) {
    if (!g.vertex_pos_.count(v)) {
      throw Error(ErrorKind::BoundaryNotLeaf,
                  "boundary vertex '" + v + "' is not a vertex of the graph", {v});
    }
  }

  // Incidence. Iterating the edge map keeps every list sorted by edge id.
  for (const auto& [id, ends] : g.edges_) {
    g.incidence_[ends.target].in_edges.push_back(id);
    g.incidence_[ends.source].out_edges.push_back(id);
  }
  for (auto& [v, iv] : g.incidence_) {
    std::set_union(iv.in_edges.begin(), iv.in_edges.end(),
                   iv.out_edges.begin(), iv.out_edges.end(),
                   std::back_inserter(iv.all_edges));
  }

  for (const VertexId& v : boundary) {
    const IncidenceView& iv = g.incidence_.at(v);
    std::size_t degree = iv.in_edges.size() + iv.out_edges.size();
    if (degree != 1) {
      throw Error(ErrorKind::BoundaryNotLeaf,
                  "boundary vertex '" + v + "' has degree " + std::to_string(degree) +
                      ", expected 1",
                  {v});
    }
  }

  g.vertices_.reserve(g.vertex_pos_.size());
  for (const auto& [v, _] : g.vertex_pos_) g.vertices_.push_back(v);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    g.vertex_pos_[g.vertices_[i]] = i;
  }
  g.boundary_ = std::move(boundary);

  // Kahn's algorithm; whatever survives sits on or downstream of a cycle.
  std::map<VertexId, std::size_t> indegree;
  for (const VertexId& v : g.vertices_) indegree[v] = 0;
  for (const auto& [id, ends] : g.edges_) ++indegree[ends.target];
  std::deque<VertexId> ready;
  for (const auto& [v, d] : indegree) {
    if (d == 0) ready.push_back(v);
  }
  std::vector<VertexId> topo;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    topo.push_back(v);
    for (const EdgeId& e : g.incidence_.at(v).out_edges) {
      if (--indegree[g.edges_.at(e).target] == 0) {
        ready.push_back(g.edges_.at(e).target);
      }
    }
  }
  if (topo.size() != g.vertices_.size()) {
    // Every leftover vertex keeps an incoming edge among the leftovers, so
    // walking predecessors must revisit one; that revisit closes a cycle.
    std::set<VertexId> leftover;
    for (const auto& [v, d] : indegree) {
      if (d > 0) leftover.insert(v);
    }
    std::vector<VertexId> path;
    std::map<VertexId, std::size_t> seen;
    VertexId cur = *leftover.begin();
    while (!seen.count(cur)) {
      seen[cur] = path.size();
      path.push_back(cur);
      for (const EdgeId& e : g.incidence_.at(cur).in_edges) {
        const VertexId& pred = g.edges_.at(e).source;
        if (leftover.count(pred)) {
          cur = pred;
          break;
        }
      }
    }
    std::vector<VertexId> cycle(path.begin() + seen[cur], path.end());
    std::reverse(cycle.begin(), cycle.end());  // forward edge direction
    std::string msg = "cycle through";
    for (const VertexId& v : cycle) msg += " '" + v + "'";
    throw Error(ErrorKind::CycleDetected, msg, cycle);
  }

  // Reflexive reachability, filled bottom-up in reverse topological order.
  std::size_t n = g.vertices_.size();
  g.vertex_reach_.assign(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    std::size_t vi = g.vertex_pos_.at(*it);
    g.vertex_reach_[vi][vi] = true;
    for (const EdgeId& e : g.incidence_.at(*it).out_edges) {
      std::size_t wi = g.vertex_pos_.at(g.edges_.at(e).target);
      for (std::size_t j = 0; j < n; ++j) {
        if (g.vertex_reach_[wi][j]) g.vertex_reach_[vi][j] = true;
      }
    }
  }

  return g;
}

ProgressiveGraph virtualize_isolated(const ProgressiveGraph& g) {
  std::set<std::string> used;
  for (const VertexId& v : g.vertices()) used.insert(v);
  for (const auto& [id, _] : g.edges()) used.insert(id);

  auto fresh = [&used](std::string name) {
    while (used.count(name)) name += "_";
    used.insert(name);
    return name;
  };

  std::vector<VertexId> vertices;
  std::vector<std::pair<EdgeId, EdgeEnds>> edges;
  for (const auto& [id, ends] : g.edges()) edges.emplace_back(id, ends);

  for (const VertexId& v : g.vertices()) {
    if (!g.is_isolated(v)) {
      vertices.push_back(v);
      continue;
    }
    VertexId s = fresh(v + ".s");
    VertexId t = fresh(v + ".t");
    EdgeId e = fresh(v + ".e");
    vertices.push_back(s);
    vertices.push_back(t);
    edges.emplace_back(e, EdgeEnds{s, t});
  }

  return build_graph(std::move(vertices), std::move(edges), g.boundary());
}

}  // namespace upo
