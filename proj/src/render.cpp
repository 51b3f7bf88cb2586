#include "oblivnet/render.hpp"

#include <algorithm>
#include <sstream>

namespace oblivnet {

std::vector<std::size_t> drawing_columns(const Network& net) {
  // next_free[w]: first column where wire w's row is unoccupied.
  std::vector<std::size_t> next_free(net.width(), 0);
  std::vector<std::size_t> columns;
  columns.reserve(net.size());
  for (const Gate& g : net.gates()) {
    std::size_t col = 0;
    for (Wire w = g.lo; w <= g.hi; ++w) col = std::max(col, next_free[w]);
    for (Wire w = g.lo; w <= g.hi; ++w) next_free[w] = col + 1;
    columns.push_back(col);
  }
  return columns;
}

std::string render_svg(const Network& net, const RenderOptions& o) {
  const auto columns = drawing_columns(net);
  const std::size_t ncols = columns.empty() ? 0 : *std::max_element(columns.begin(), columns.end()) + 1;
  const long width = 2L * o.margin + static_cast<long>(ncols + 1) * o.column_spacing;
  const long height = 2L * o.margin + static_cast<long>(net.width() - 1) * o.wire_spacing;
  const auto y = [&](Wire w) { return o.margin + static_cast<long>(w) * o.wire_spacing; };
  const auto x = [&](std::size_t c) { return o.margin + static_cast<long>(c + 1) * o.column_spacing; };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
    << "<style>.wire{stroke:#000;stroke-width:1}.connector{stroke:#000;stroke-width:1.5}"
       ".swap{stroke-dasharray:3,2;stroke:#555}.dot{fill:#000}.hollow{fill:#fff;stroke:#000}"
       "</style>\n";
  for (Wire w = 0; w < net.width(); ++w)
    s << "<line class=\"wire\" x1=\"" << o.margin << "\" y1=\"" << y(w) << "\" x2=\""
      << width - o.margin << "\" y2=\"" << y(w) << "\"/>\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    const Gate& g = net[i];
    const long cx = x(columns[i]);
    const char* kind = g.kind == GateKind::forward ? "forward"
                       : g.kind == GateKind::reverse ? "reverse"
                                                     : "swap";
    s << "<line class=\"connector " << kind << "\" x1=\"" << cx << "\" y1=\"" << y(g.lo)
      << "\" x2=\"" << cx << "\" y2=\"" << y(g.hi) << "\"/>\n";
    if (g.kind == GateKind::swap) continue;
    // Filled dot marks where the minimum goes.
    const Wire min_wire = g.kind == GateKind::forward ? g.lo : g.hi;
    const Wire max_wire = g.kind == GateKind::forward ? g.hi : g.lo;
    s << "<circle class=\"dot\" cx=\"" << cx << "\" cy=\"" << y(min_wire) << "\" r=\"3\"/>\n";
    s << "<circle class=\"" << (g.kind == GateKind::forward ? "dot" : "hollow") << "\" cx=\""
      << cx << "\" cy=\"" << y(max_wire) << "\" r=\"3\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace oblivnet
