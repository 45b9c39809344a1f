#include "upo/upg.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <sstream>

namespace upo {

bool same_content(const UpgDocument& a, const UpgDocument& b) {
  return a.graph == b.graph && a.order == b.order;
}

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void syntax_error(int line, const std::string& message) {
  Error e(ErrorKind::SyntaxError, message + " (line " + std::to_string(line) + ")");
  e.line = line;
  throw e;
}

int parse_nonnegative(const std::string& tok, int line, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    syntax_error(line, std::string("expected a non-negative ") + what + ", got '" + tok + "'");
  }
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    syntax_error(line, std::string(what) + " '" + tok + "' is out of range");
  }
}

}  // namespace

UpgDocument parse_upg(std::istream& in) {
  std::vector<VertexId> vertices;
  std::vector<std::pair<EdgeId, EdgeEnds>> edges;
  std::set<VertexId> boundary;
  std::vector<EdgeId> order_ids;
  std::set<EdgeId> order_seen;
  std::map<std::string, int> lines;
  int last_order_line = 0;

  std::string raw;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(raw);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "upg" || toks[1] != "1") {
        syntax_error(lineno, "expected 'upg 1' header");
      }
      have_header = true;
      continue;
    }
    if (toks[0] == "vertex") {
      if (toks.size() == 3 && toks[2] == "boundary") {
        boundary.insert(toks[1]);
      } else if (toks.size() != 2) {
        syntax_error(lineno, "expected 'vertex NAME [boundary]'");
      }
      vertices.push_back(toks[1]);
      lines.emplace(toks[1], lineno);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4) syntax_error(lineno, "expected 'edge NAME SRC TGT'");
      edges.emplace_back(toks[1], EdgeEnds{toks[2], toks[3]});
      lines.emplace(toks[1], lineno);
    } else if (toks[0] == "order") {
      if (toks.size() < 2) syntax_error(lineno, "expected 'order NAME...'");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!order_seen.insert(toks[i]).second) {
          syntax_error(lineno, "edge '" + toks[i] + "' appears twice in the order");
        }
        order_ids.push_back(toks[i]);
      }
      last_order_line = lineno;
    } else {
      syntax_error(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_header) syntax_error(lineno == 0 ? 1 : lineno, "expected 'upg 1' header");

  UpgDocument doc;
  try {
    doc.graph = build_graph(std::move(vertices), std::move(edges), std::move(boundary));
  } catch (const Error& orig) {
    int where = 0;
    for (const std::string& w : orig.witness()) {
      auto it = lines.find(w);
      if (it != lines.end()) {
        where = it->second;
        break;
      }
    }
    std::string message = orig.what();
    if (where > 0) message += " (line " + std::to_string(where) + ")";
    Error wrapped(ErrorKind::ValidationError, message, orig.witness());
    wrapped.line = where;
    throw wrapped;
  }

  if (!order_ids.empty()) {
    for (const EdgeId& e : order_ids) {
      if (!doc.graph.has_edge(e)) {
        Error err(ErrorKind::OrderDomainMismatch,
                  "ordered edge '" + e + "' is not an edge of the graph (line " +
                      std::to_string(last_order_line) + ")",
                  {e});
        err.line = last_order_line;
        throw err;
      }
    }
    if (order_ids.size() != doc.graph.edges().size()) {
      std::vector<std::string> missing;
      for (const auto& [id, _] : doc.graph.edges()) {
        if (!order_seen.count(id)) missing.push_back(id);
      }
      std::string list;
      for (const std::string& id : missing) list += " '" + id + "'";
      Error err(ErrorKind::OrderDomainMismatch,
                "order is missing" + list + " (line " +
                    std::to_string(last_order_line) + ")",
                missing);
      err.line = last_order_line;
      throw err;
    }
    doc.order = EdgeOrder::from_sequence(std::move(order_ids));
  }

  doc.source_lines = std::move(lines);
  return doc;
}

UpgDocument parse_upg(const std::string& text) {
  std::istringstream is(text);
  return parse_upg(is);
}

std::string serialize_upg(const UpgDocument& doc) {
  std::ostringstream os;
  os << "upg 1\n";
  for (const VertexId& v : doc.graph.vertices()) {
    os << "vertex " << v;
    if (doc.graph.boundary().count(v)) os << " boundary";
    os << "\n";
  }
  for (const auto& [id, ends] : doc.graph.edges()) {
    os << "edge " << id << ' ' << ends.source << ' ' << ends.target << "\n";
  }
  if (doc.order) {
    os << "order";
    for (const EdgeId& e : doc.order->sequence()) os << ' ' << e;
    os << "\n";
  }
  return os.str();
}

std::string export_dot(const UpgDocument& doc) {
  const ProgressiveGraph& g = doc.graph;

  // Longest-path depths give the rank groups; within a group, vertices are
  // listed by their earliest incident rank so the drawing tends to respect
  // the order. Layout is a hint for inspection, nothing more.
  std::map<VertexId, int> depth;
  {
    std::map<VertexId, int> indegree;
    for (const VertexId& v : g.vertices()) indegree[v] = 0;
    for (const auto& [id, ends] : g.edges()) ++indegree[ends.target];
    std::deque<VertexId> ready;
    for (const auto& [v, d] : indegree) {
      if (d == 0) ready.push_back(v);
    }
    while (!ready.empty()) {
      VertexId v = ready.front();
      ready.pop_front();
      for (const EdgeId& e : g.incidence(v).out_edges) {
        const VertexId& w = g.edge(e).target;
        depth[w] = std::max(depth[w], depth[v] + 1);
        if (--indegree[w] == 0) ready.push_back(w);
      }
    }
  }

  auto sort_key = [&](const VertexId& v) {
    int key = std::numeric_limits<int>::max();
    if (doc.order) {
      for (const EdgeId& e : g.incidence(v).all_edges) {
        key = std::min(key, doc.order->rank(e));
      }
    }
    return std::pair<int, VertexId>(key, v);
  };

  std::ostringstream os;
  os << "digraph upg {\n";
  os << "  rankdir=TB;\n";
  for (const VertexId& v : g.vertices()) {
    os << "  \"" << v << "\" [shape="
       << (g.boundary().count(v) ? "point" : "circle") << "];\n";
  }
  std::map<int, std::vector<VertexId>> groups;
  for (const VertexId& v : g.vertices()) groups[depth[v]].push_back(v);
  for (auto& [d, members] : groups) {
    std::sort(members.begin(), members.end(),
              [&](const VertexId& a, const VertexId& b) {
                return sort_key(a) < sort_key(b);
              });
    os << "  { rank=same;";
    for (const VertexId& v : members) os << " \"" << v << "\";";
    os << " }\n";
  }
  for (const auto& [id, ends] : g.edges()) {
    os << "  \"" << ends.source << "\" -> \"" << ends.target << "\" [label=\"" << id;
    if (doc.order) os << ":" << doc.order->rank(id);
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

LayerStack parse_layers(std::istream& in) {
  LayerStack stack;
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  bool in_layer = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(raw);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "layers" || toks[1] != "1") {
        syntax_error(lineno, "expected 'layers 1' header");
      }
      have_header = true;
      continue;
    }
    if (toks[0] == "layer") {
      if (toks.size() != 1) syntax_error(lineno, "'layer' takes no arguments");
      stack.layers.emplace_back();
      in_layer = true;
    } else if (toks[0] == "wire") {
      if (!in_layer) syntax_error(lineno, "'wire' outside a layer");
      if (toks.size() != 1) syntax_error(lineno, "'wire' takes no arguments");
      stack.layers.back().cells.push_back(Cell::wire());
    } else if (toks[0] == "node") {
      if (!in_layer) syntax_error(lineno, "'node' outside a layer");
      if (toks.size() != 3 && toks.size() != 4) {
        syntax_error(lineno, "expected 'node P Q [LABEL]'");
      }
      int p = parse_nonnegative(toks[1], lineno, "arity");
      int q = parse_nonnegative(toks[2], lineno, "arity");
      if (p + q < 1) syntax_error(lineno, "node needs p+q >= 1");
      stack.layers.back().cells.push_back(
          Cell::node(p, q, toks.size() == 4 ? toks[3] : std::string()));
    } else {
      syntax_error(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_header) syntax_error(lineno == 0 ? 1 : lineno, "expected 'layers 1' header");
  return stack;
}

LayerStack parse_layers(const std::string& text) {
  std::istringstream is(text);
  return parse_layers(is);
}

}  // namespace upo
