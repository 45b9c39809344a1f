#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "upo/graph.hpp"
#include "upo/layers.hpp"
#include "upo/order.hpp"

namespace upo {

/// A parsed UPG file: the graph, the optional edge order, and the source
/// line on which each vertex/edge was introduced (for error reporting).
struct UpgDocument {
  ProgressiveGraph graph;
  std::optional<EdgeOrder> order;
  std::map<std::string, int> source_lines;
};

/// Same graph and same order; source positions are not content.
bool same_content(const UpgDocument& a, const UpgDocument& b);

/// UPG text format:
///   upg 1
///   vertex NAME [boundary]
///   edge NAME SRC TGT
///   order NAME...          (optional; several lines concatenate)
/// '#' starts a comment. SyntaxError carries the offending line; graph
/// validation failures come back as ValidationError with the line of the
/// first implicated entity; OrderDomainMismatch when the order does not
/// range over exactly the edges.
UpgDocument parse_upg(std::istream& in);
UpgDocument parse_upg(const std::string& text);

/// Canonical form: header, vertices sorted by name, edges sorted by name,
/// then the order (when present) as a single line. parse(serialize(d))
/// reproduces d's content, and serialize(parse(t)) is idempotent.
std::string serialize_upg(const UpgDocument& doc);

/// Graphviz rendering for inspection: boundary vertices get a distinct
/// shape, vertices are grouped into ranks by longest path, edges are
/// labeled "name:rank" when an order is present and "name" otherwise.
std::string export_dot(const UpgDocument& doc);

/// Layer text format:
///   layers 1
///   layer
///     wire
///     node P Q [LABEL]
/// '#' starts a comment; indentation is conventional, not significant.
LayerStack parse_layers(std::istream& in);
LayerStack parse_layers(const std::string& text);

}  // namespace upo
