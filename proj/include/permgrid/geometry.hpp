#pragma once

#include <span>
#include <string_view>

#include "permgrid/permutation.hpp"

namespace permgrid {

/// Axes-parallel rectangle whose boundaries sit at half-integers.
///
/// Stored as the inclusive integer extents it covers; the actual bounds are
/// x_min - 1/2 .. x_max + 1/2 (and likewise for y), so no point of a plot
/// can ever lie on a boundary.
struct Rectangle {
  int x_min = 0;
  int x_max = 0;
  int y_min = 0;
  int y_max = 0;

  double x_lo() const { return x_min - 0.5; }
  double x_hi() const { return x_max + 0.5; }
  double y_lo() const { return y_min - 0.5; }
  double y_hi() const { return y_max + 0.5; }

  bool spans_x(int x) const { return x_min <= x && x <= x_max; }
  bool spans_y(int y) const { return y_min <= y && y <= y_max; }
  bool contains(Point p) const { return spans_x(p.x) && spans_y(p.y); }

  /// Smallest rectangle containing this one and `p`.
  Rectangle extended(Point p) const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

enum class RegionTag { NE, NW, SE, SW, SliceV, SliceH, Inside };

std::string_view to_string(RegionTag tag);

/// Rectangular hull of a nonempty point set; throws Error(EMPTY_SET) otherwise.
Rectangle rect_hull(std::span<const Point> points);
Rectangle rect_hull(const Permutation& perm, std::span<const int> positions);
inline Rectangle rect_hull(Point p) { return {p.x, p.x, p.y, p.y}; }

RegionTag region_of(Point p, const Rectangle& r);

/// True when `p` slices `r` (vertically or horizontally).
inline bool slices(Point p, const Rectangle& r) {
  return r.spans_x(p.x) != r.spans_y(p.y);
}

/// Positions of `perm` inside `r`, in increasing order.
std::vector<int> positions_inside(const Permutation& perm, const Rectangle& r);

/// The permutation order-isomorphic to the points of `perm` inside `r`.
/// Throws Error(EMPTY_SET) when `r` holds no point.
Permutation restrict(const Permutation& perm, const Rectangle& r);

}  // namespace permgrid
