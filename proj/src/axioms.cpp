#include "upo/axioms.hpp"

#include <map>

namespace upo {

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::U1: return "U1";
    case Axiom::U2: return "U2";
    case Axiom::U3: return "U3";
    case Axiom::Q1: return "Q1";
    case Axiom::Q2: return "Q2";
    case Axiom::ADM: return "ADM";
  }
  return "?";
}

void CheckReport::add(Axiom axiom, std::vector<std::string> witness,
                      std::string message) {
  passed = false;
  if (diagnostics.size() >= kMaxDiagnostics) {
    truncated = true;
    return;
  }
  diagnostics.push_back(Diagnostic{axiom, std::move(witness), std::move(message)});
}

void require_order_covers(const ProgressiveGraph& g, const EdgeOrder& order) {
  for (const auto& [id, _] : g.edges()) {
    if (!order.contains(id)) {
      throw Error(ErrorKind::DomainMismatch,
                  "edge '" + id + "' of the graph is missing from the order", {id});
    }
  }
  if (order.size() != g.edges().size()) {
    for (const EdgeId& e : order.sequence()) {
      if (!g.has_edge(e)) {
        throw Error(ErrorKind::DomainMismatch,
                    "ordered edge '" + e + "' is not an edge of the graph", {e});
      }
    }
  }
}

namespace {

struct VertexHulls {
  Interval in;
  Interval out;
  Interval all;
};

std::map<VertexId, VertexHulls> vertex_hulls(const ProgressiveGraph& g,
                                             const EdgeOrder& order) {
  std::map<VertexId, VertexHulls> hulls;
  for (const VertexId& v : g.vertices()) {
    const IncidenceView& iv = g.incidence(v);
    hulls.emplace(v, VertexHulls{hull(order, iv.in_edges),
                                 hull(order, iv.out_edges),
                                 hull(order, iv.all_edges)});
  }
  return hulls;
}

// The linear-extension condition shared verbatim by both definitions.
void scan_linear_extension(const ProgressiveGraph& g, const EdgeOrder& order,
                           Axiom axiom, CheckReport& report) {
  for (const auto& [e1, ends1] : g.edges()) {
    for (const auto& [e2, ends2] : g.edges()) {
      if (e1 == e2) continue;
      if (g.edge_reachable(e1, e2) && order.rank(e1) > order.rank(e2)) {
        report.add(axiom, {e1, e2},
                   "edge '" + e1 + "' reaches '" + e2 + "' but is ranked after it (" +
                       std::to_string(order.rank(e1)) + " > " +
                       std::to_string(order.rank(e2)) + ")");
      }
    }
  }
}

}  // namespace

CheckReport check_u(const ProgressiveGraph& g, const EdgeOrder& order) {
  require_order_covers(g, order);
  CheckReport report;
  auto hulls = vertex_hulls(g, order);

  // (U1) the order extends edge reachability.
  scan_linear_extension(g, order, Axiom::U1, report);

  // (U2) at every vertex with both polarities, the incoming and outgoing
  // hulls are disjoint and together tile the hull of all incident edges.
  for (const VertexId& v : g.vertices()) {
    const VertexHulls& h = hulls.at(v);
    if (h.in.is_empty() || h.out.is_empty()) continue;  // sources and sinks
    if (h.in.intersects(h.out)) {
      report.add(Axiom::U2, {v},
                 "vertex '" + v + "': incoming hull " + to_string(h.in) +
                     " and outgoing hull " + to_string(h.out) + " intersect");
    } else if (h.all.length() != h.in.length() + h.out.length()) {
      report.add(Axiom::U2, {v},
                 "vertex '" + v + "': hulls " + to_string(h.in) + " and " +
                     to_string(h.out) + " leave a gap inside " + to_string(h.all));
    }
  }

  // (U3) same-polarity hulls nest: edges of one vertex may meet another
  // vertex's hull only by lying entirely inside it.
  for (const VertexId& v1 : g.vertices()) {
    const IncidenceView& iv1 = g.incidence(v1);
    for (const VertexId& v2 : g.vertices()) {
      if (v1 == v2) continue;
      const VertexHulls& h2 = hulls.at(v2);
      bool meets_in = false;
      for (const EdgeId& e : iv1.in_edges) {
        if (h2.in.contains(order.rank(e))) meets_in = true;
      }
      if (meets_in && !h2.in.contains(hulls.at(v1).in)) {
        report.add(Axiom::U3, {v1, v2},
                   "incoming edges of '" + v1 + "' meet the incoming hull " +
                       to_string(h2.in) + " of '" + v2 +
                       "' without being contained in it");
      }
      bool meets_out = false;
      for (const EdgeId& e : iv1.out_edges) {
        if (h2.out.contains(order.rank(e))) meets_out = true;
      }
      if (meets_out && !h2.out.contains(hulls.at(v1).out)) {
        report.add(Axiom::U3, {v1, v2},
                   "outgoing edges of '" + v1 + "' meet the outgoing hull " +
                       to_string(h2.out) + " of '" + v2 +
                       "' without being contained in it");
      }
    }
  }

  return report;
}

CheckReport check_q(const ProgressiveGraph& g, const EdgeOrder& order) {
  require_order_covers(g, order);
  CheckReport report;

  // (Q1) identical in content to the condition in check_u.
  scan_linear_extension(g, order, Axiom::Q1, report);

  // (Q2) every edge ranked between two adjacent edges is nested: the three
  // ways e1 and e2 can share a vertex v each impose a containment on the
  // edges in between. Tested element-wise, straight from the definition.
  std::map<VertexId, Interval> in_hull;
  std::map<VertexId, Interval> out_hull;
  for (const VertexId& v : g.vertices()) {
    const IncidenceView& iv = g.incidence(v);
    in_hull.emplace(v, hull(order, iv.in_edges));
    out_hull.emplace(v, hull(order, iv.out_edges));
  }

  auto incoming_inside = [&](const VertexId& v, const Interval& target) {
    for (const EdgeId& e : g.incidence(v).in_edges) {
      if (!target.contains(order.rank(e))) return false;
    }
    return true;
  };
  auto outgoing_inside = [&](const VertexId& v, const Interval& target) {
    for (const EdgeId& e : g.incidence(v).out_edges) {
      if (!target.contains(order.rank(e))) return false;
    }
    return true;
  };

  for (const VertexId& v : g.vertices()) {
    const IncidenceView& iv = g.incidence(v);
    const Interval& hin = in_hull.at(v);
    const Interval& hout = out_hull.at(v);

    auto scan_between = [&](const EdgeId& e1, const EdgeId& e2, auto&& ok,
                            const char* what) {
      int r1 = order.rank(e1);
      int r2 = order.rank(e2);
      for (int r = r1 + 1; r < r2; ++r) {
        const EdgeId& e = order.at_rank(r);
        if (!ok(e)) {
          report.add(Axiom::Q2, {e1, e, e2, v},
                     "edge '" + e + "' sits between '" + e1 + "' and '" + e2 +
                         "' at vertex '" + v + "' but " + what);
        }
      }
    };

    // Shared target: t(e1) = t(e2) = v.
    for (const EdgeId& e1 : iv.in_edges) {
      for (const EdgeId& e2 : iv.in_edges) {
        if (order.rank(e1) >= order.rank(e2)) continue;
        scan_between(e1, e2,
                     [&](const EdgeId& e) {
                       return incoming_inside(g.edge(e).target, hin);
                     },
                     "its target's incoming edges escape the incoming hull");
      }
    }
    // Shared source: s(e1) = s(e2) = v.
    for (const EdgeId& e1 : iv.out_edges) {
      for (const EdgeId& e2 : iv.out_edges) {
        if (order.rank(e1) >= order.rank(e2)) continue;
        scan_between(e1, e2,
                     [&](const EdgeId& e) {
                       return outgoing_inside(g.edge(e).source, hout);
                     },
                     "its source's outgoing edges escape the outgoing hull");
      }
    }
    // Head to tail: t(e1) = s(e2) = v; either containment will do.
    for (const EdgeId& e1 : iv.in_edges) {
      for (const EdgeId& e2 : iv.out_edges) {
        if (order.rank(e1) >= order.rank(e2)) continue;
        scan_between(e1, e2,
                     [&](const EdgeId& e) {
                       return incoming_inside(g.edge(e).target, hin) ||
                              outgoing_inside(g.edge(e).source, hout);
                     },
                     "it is nested in neither the incoming nor the outgoing hull");
      }
    }
  }

  return report;
}

CheckReport check_admissible(const ProgressiveGraph& g, const EdgeOrder& order) {
  require_order_covers(g, order);
  CheckReport report;
  auto [inputs, outputs] = g.domain_codomain();

  for (const VertexId& v : g.vertices()) {
    if (!g.is_inner(v)) continue;
    const IncidenceView& iv = g.incidence(v);
    Interval hin = hull(order, iv.in_edges);
    Interval hout = hull(order, iv.out_edges);
    for (const EdgeId& e : inputs) {
      if (hout.contains(order.rank(e))) {
        report.add(Axiom::ADM, {v, e},
                   "input edge '" + e + "' lies inside the outgoing hull " +
                       to_string(hout) + " of inner vertex '" + v + "'");
      }
    }
    for (const EdgeId& e : outputs) {
      if (hin.contains(order.rank(e))) {
        report.add(Axiom::ADM, {v, e},
                   "output edge '" + e + "' lies inside the incoming hull " +
                       to_string(hin) + " of inner vertex '" + v + "'");
      }
    }
  }

  return report;
}

bool is_admissible_upo(const ProgressiveGraph& g, const EdgeOrder& order) {
  return check_q(g, order).passed && check_admissible(g, order).passed;
}

}  // namespace upo
