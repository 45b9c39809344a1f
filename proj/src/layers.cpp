#include "upo/layers.hpp"

#include <string>

namespace upo {

std::pair<int, int> widths(const LayerSpec& layer) {
  int top = 0;
  int bottom = 0;
  for (const Cell& c : layer.cells) {
    if (c.kind == Cell::Kind::Wire) {
      ++top;
      ++bottom;
    } else {
      top += c.in_arity;
      bottom += c.out_arity;
    }
  }
  return {top, bottom};
}

UpoGraph layer_to_upo(const LayerSpec& layer, int layer_index) {
  std::vector<VertexId> vertices;
  std::vector<std::pair<EdgeId, EdgeEnds>> edges;
  std::set<VertexId> boundary;
  std::vector<EdgeId> sequence;

  for (std::size_t c = 0; c < layer.cells.size(); ++c) {
    const Cell& cell = layer.cells[c];
    std::string pfx = "l" + std::to_string(layer_index) + "c" + std::to_string(c);
    if (cell.kind == Cell::Kind::Wire) {
      VertexId top = pfx + "wa";
      VertexId bottom = pfx + "wb";
      EdgeId e = pfx + "w";
      vertices.push_back(top);
      vertices.push_back(bottom);
      boundary.insert(top);
      boundary.insert(bottom);
      edges.emplace_back(e, EdgeEnds{top, bottom});
      sequence.push_back(e);
      continue;
    }
    if (cell.in_arity < 0 || cell.out_arity < 0 ||
        cell.in_arity + cell.out_arity < 1) {
      throw Error(ErrorKind::InvalidCell,
                  "cell " + std::to_string(c) + " has arity (" +
                      std::to_string(cell.in_arity) + "," +
                      std::to_string(cell.out_arity) + "), need p+q >= 1");
    }
    VertexId node = pfx;
    vertices.push_back(node);
    for (int p = 1; p <= cell.in_arity; ++p) {
      EdgeId e = pfx + "i" + std::to_string(p);
      VertexId leaf = e + "v";
      vertices.push_back(leaf);
      boundary.insert(leaf);
      edges.emplace_back(e, EdgeEnds{leaf, node});
      sequence.push_back(e);
    }
    for (int q = 1; q <= cell.out_arity; ++q) {
      EdgeId e = pfx + "o" + std::to_string(q);
      VertexId leaf = e + "v";
      vertices.push_back(leaf);
      boundary.insert(leaf);
      edges.emplace_back(e, EdgeEnds{node, leaf});
      sequence.push_back(e);
    }
  }

  return UpoGraph{build_graph(std::move(vertices), std::move(edges), std::move(boundary)),
                  EdgeOrder::from_sequence(std::move(sequence))};
}

ComposedGraph pipeline(const LayerStack& stack, int base_layer_index,
                       const ComposeOptions& opts) {
  for (std::size_t k = 0; k + 1 < stack.layers.size(); ++k) {
    int below = widths(stack.layers[k]).second;
    int above = widths(stack.layers[k + 1]).first;
    if (below != above) {
      Error e(ErrorKind::WidthMismatch,
              "layer " + std::to_string(k + 1) + " has top width " +
                  std::to_string(above) + " but layer " + std::to_string(k) +
                  " ends with width " + std::to_string(below));
      e.stage = static_cast<int>(k + 1);
      throw e;
    }
  }

  std::vector<UpoGraph> stages;
  stages.reserve(stack.layers.size());
  for (std::size_t k = 0; k < stack.layers.size(); ++k) {
    stages.push_back(layer_to_upo(stack.layers[k], base_layer_index + static_cast<int>(k)));
  }
  return compose_many(stages, opts);
}

}  // namespace upo
