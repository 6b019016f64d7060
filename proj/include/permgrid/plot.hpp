#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permgrid/geometry.hpp"
#include "permgrid/permutation.hpp"
#include "permgrid/pins.hpp"

namespace permgrid {

struct PlotSpec {
  Permutation perm;
  std::vector<Rectangle> rectangles;
  /// Drawn as labelled arrows; pins p1 and p2 get labels only.
  std::optional<PinSequence> pins;
  /// Positions drawn as hollow markers instead of dots.
  std::vector<int> hollow;
  /// Dashed lines at gap g + 1/2: horizontal between values, vertical between positions.
  std::vector<int> h_lines;
  std::vector<int> v_lines;
  int size = 400;
};

/// SVG 1.1 document. Output depends only on the PlotSpec: fixed element order
/// and two-decimal coordinates. Throws Error(PLOT) when an overlay refers to
/// a point, gap or extent outside the permutation.
std::string plot_svg(const PlotSpec& spec);

}  // namespace permgrid
