#pragma once

#include <string>
#include <utility>
#include <vector>

#include "upo/compose.hpp"

namespace upo {

/// One cell of an elementary layer: a wire passing straight through, or a
/// node consuming p inputs and producing q outputs (p + q >= 1).
struct Cell {
  enum class Kind { Wire, Node };

  Kind kind = Kind::Wire;
  int in_arity = 1;
  int out_arity = 1;
  std::string label;  // optional display name, no semantic weight

  static Cell wire() { return Cell{}; }
  static Cell node(int p, int q, std::string label = std::string()) {
    return Cell{Kind::Node, p, q, std::move(label)};
  }

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct LayerSpec {
  std::vector<Cell> cells;
  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

struct LayerStack {
  std::vector<LayerSpec> layers;
  friend bool operator==(const LayerStack&, const LayerStack&) = default;
};

/// (top width, bottom width): dangling edge ends above and below the layer.
std::pair<int, int> widths(const LayerSpec& layer);

/// Realizes one layer as a UPO-graph. Ids are deterministic in the layer
/// index and cell position (l<i>c<j>...), the boundary is the full set of
/// leaves, and the order scans cells left to right, each node emitting its
/// inputs then its outputs. InvalidCell on a malformed cell.
UpoGraph layer_to_upo(const LayerSpec& layer, int layer_index = 0);

/// Composes a stack of layers top to bottom. Layer k is named with index
/// base_layer_index + k, so a stack split across two pipeline calls can
/// reproduce the ids of the unsplit run. WidthMismatch (stage = offending
/// layer) when adjacent widths disagree.
ComposedGraph pipeline(const LayerStack& stack, int base_layer_index = 0,
                       const ComposeOptions& opts = {});

}  // namespace upo
