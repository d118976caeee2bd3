#pragma once

#include <span>
#include <string>

#include "udgpath/pipeline.hpp"

namespace udgpath {

struct RenderOptions {
  double scale = 40.0;  // pixels per unit
  bool draw_edges = true;
};

/// Static SVG of the clique-grid: occupied cells with "(i,j)" labels, edges
/// colored gray (inside a cell), blue (good) or red (bad), marked centers in
/// black, unmarked ones in red and the witness as a green polyline. Output
/// depends only on the inputs.
std::string render_svg(const DiskSet& disks, const Prepared& prepared, std::span<const Vertex> witness,
                       Variant variant, RenderOptions options = {});

}  // namespace udgpath
