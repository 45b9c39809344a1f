#include "upo/compose.hpp"

#include <algorithm>
#include <cassert>

namespace upo {

NotAdmissibleError::NotAdmissibleError(const std::string& message,
                                       CheckReport report,
                                       std::vector<std::string> witness)
    : Error(ErrorKind::NotAdmissibleUpo, message, std::move(witness)),
      report_(std::move(report)) {}

std::set<EdgeId> ComposedGraph::first_image() const {
  std::set<EdgeId> ids;
  for (const auto& [id, p] : provenance) {
    if (p.kind != Provenance::Kind::FromSecond) ids.insert(id);
  }
  return ids;
}

std::set<EdgeId> ComposedGraph::second_image() const {
  std::set<EdgeId> ids;
  for (const auto& [id, p] : provenance) {
    if (p.kind != Provenance::Kind::FromFirst) ids.insert(id);
  }
  return ids;
}

namespace {

std::vector<EdgeId> by_rank(const std::set<EdgeId>& ids, const EdgeOrder& order) {
  std::vector<EdgeId> v(ids.begin(), ids.end());
  std::sort(v.begin(), v.end(),
            [&order](const EdgeId& a, const EdgeId& b) {
              return order.rank(a) < order.rank(b);
            });
  return v;
}

void require_admissible_factor(const UpoGraph& factor, const char* which) {
  CheckReport axioms = check_q(factor.graph, factor.order);
  CheckReport adm = check_admissible(factor.graph, factor.order);
  if (axioms.passed && adm.passed) return;
  CheckReport merged = std::move(axioms);
  merged.passed = false;
  for (Diagnostic& d : adm.diagnostics) merged.diagnostics.push_back(std::move(d));
  merged.truncated = merged.truncated || adm.truncated;
  throw NotAdmissibleError(std::string(which) + " factor is not an admissible UPO-graph",
                           std::move(merged));
}

}  // namespace

ComposedGraph compose(const UpoGraph& first, const UpoGraph& second,
                      const ComposeOptions& opts) {
  require_order_covers(first.graph, first.order);
  require_order_covers(second.graph, second.order);
  if (opts.validate_inputs) {
    require_admissible_factor(first, "first");
    require_admissible_factor(second, "second");
  }

  auto [first_in, first_out] = first.graph.domain_codomain();
  auto [second_in, second_out] = second.graph.domain_codomain();
  std::vector<EdgeId> outs = by_rank(first_out, first.order);
  std::vector<EdgeId> ins = by_rank(second_in, second.order);
  if (outs.size() != ins.size()) {
    throw Error(ErrorKind::ArityMismatch,
                "first factor has " + std::to_string(outs.size()) +
                    " outputs but second factor has " + std::to_string(ins.size()) +
                    " inputs");
  }
  std::size_t n = outs.size();

  if (opts.strict_wires) {
    for (std::size_t k = 0; k < n; ++k) {
      if (first_in.count(outs[k]) && second_out.count(ins[k])) {
        throw Error(ErrorKind::WireFusionCollision,
                    "wire '" + outs[k] + "' fuses with wire '" + ins[k] + "'",
                    {outs[k], ins[k]});
      }
    }
  }

  // The matched boundary leaves vanish; everything else survives untouched.
  std::set<VertexId> removed_first;
  std::set<VertexId> removed_second;
  for (std::size_t k = 0; k < n; ++k) {
    removed_first.insert(first.graph.edge(outs[k]).target);
    removed_second.insert(second.graph.edge(ins[k]).source);
  }

  std::vector<VertexId> vertices;
  std::set<VertexId> vertex_set;
  for (const VertexId& v : first.graph.vertices()) {
    if (!removed_first.count(v)) {
      vertices.push_back(v);
      vertex_set.insert(v);
    }
  }
  for (const VertexId& v : second.graph.vertices()) {
    if (removed_second.count(v)) continue;
    if (!vertex_set.insert(v).second) {
      throw Error(ErrorKind::DuplicateId,
                  "vertex '" + v + "' appears in both factors", {v});
    }
    vertices.push_back(v);
  }

  std::set<VertexId> boundary;
  for (const VertexId& v : first.graph.boundary()) {
    if (!removed_first.count(v)) boundary.insert(v);
  }
  for (const VertexId& v : second.graph.boundary()) {
    if (!removed_second.count(v)) boundary.insert(v);
  }

  std::map<EdgeId, std::size_t> fused_pos;
  for (std::size_t k = 0; k < n; ++k) fused_pos.emplace(outs[k], k);
  std::set<EdgeId> retired(ins.begin(), ins.end());

  std::vector<std::pair<EdgeId, EdgeEnds>> edges;
  std::set<EdgeId> edge_set;
  ComposedGraph result;
  for (const auto& [id, ends] : first.graph.edges()) {
    auto fk = fused_pos.find(id);
    if (fk != fused_pos.end()) {
      const EdgeId& in_id = ins[fk->second];
      edges.emplace_back(id, EdgeEnds{ends.source, second.graph.edge(in_id).target});
      result.provenance.emplace(
          id, Provenance{Provenance::Kind::Fused, id, in_id,
                         static_cast<int>(fk->second) + 1});
    } else {
      edges.emplace_back(id, ends);
      result.provenance.emplace(id, Provenance{Provenance::Kind::FromFirst, id, {}, 0});
    }
    edge_set.insert(id);
  }
  for (const auto& [id, ends] : second.graph.edges()) {
    if (retired.count(id)) continue;
    if (!edge_set.insert(id).second) {
      throw Error(ErrorKind::DuplicateId,
                  "edge '" + id + "' appears in both factors", {id});
    }
    edges.emplace_back(id, ends);
    result.provenance.emplace(id, Provenance{Provenance::Kind::FromSecond, {}, id, 0});
  }

  // Shuffle of the factor orders: P0 Q1 {e_1} P1 ... Qn {e_n} Pn Q{n+1},
  // where Q splits the first order at its outputs and P splits the second
  // at its inputs. With n = 0 everything of the second factor precedes
  // everything of the first.
  IntervalPartition q_part = partition_by_markers(first.order, outs);
  IntervalPartition p_part = partition_by_markers(second.order, ins);
  std::vector<EdgeId> sequence;
  sequence.reserve(first.order.size() + second.order.size() - n);
  auto append = [&sequence](const std::vector<EdgeId>& block) {
    sequence.insert(sequence.end(), block.begin(), block.end());
  };
  append(p_part.basic(0).edges);
  for (std::size_t k = 0; k < n; ++k) {
    append(q_part.basic(k).edges);
    sequence.push_back(outs[k]);  // the fused edge keeps this id
    append(p_part.basic(k + 1).edges);
  }
  append(q_part.basic(n).edges);

  result.graph = build_graph(std::move(vertices), std::move(edges), std::move(boundary));
  result.order = EdgeOrder::from_sequence(std::move(sequence));

  assert(result.graph.edges().size() ==
         first.graph.edges().size() + second.graph.edges().size() - n);
  assert(result.order.size() == result.graph.edges().size());

  return result;
}

ComposedGraph compose_many(const std::vector<UpoGraph>& stages,
                           const ComposeOptions& opts) {
  ComposedGraph acc;
  if (stages.empty()) return acc;

  acc.graph = stages.front().graph;
  acc.order = stages.front().order;
  for (const auto& [id, _] : acc.graph.edges()) {
    acc.provenance.emplace(id, Provenance{Provenance::Kind::FromFirst, id, {}, 0});
  }

  for (std::size_t i = 1; i < stages.size(); ++i) {
    try {
      acc = compose(UpoGraph{acc.graph, acc.order}, stages[i], opts);
    } catch (Error& e) {
      if (e.stage < 0) e.stage = static_cast<int>(i);
      throw;
    }
  }
  return acc;
}

}  // namespace upo
