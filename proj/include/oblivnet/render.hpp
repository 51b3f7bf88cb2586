#pragma once

#include <string>
#include <vector>

#include "oblivnet/network.hpp"

namespace oblivnet {

struct RenderOptions {
  int wire_spacing = 20;
  int column_spacing = 16;
  int margin = 20;
};

/// Column of every gate: a gate is drawn one column after the last gate whose
/// vertical span [lo, hi] overlaps its own, so connectors never cross.
std::vector<std::size_t> drawing_columns(const Network& net);

/// SVG 1.1 drawing: one horizontal <line class="wire"> per wire (wire 0 on
/// top) and one vertical <line class="connector ..."> per gate. Swaps are
/// dashed; reverse comparators mark the maximum end with a hollow dot.
/// Output depends only on the network and options.
std::string render_svg(const Network& net, const RenderOptions& options = {});

}  // namespace oblivnet
