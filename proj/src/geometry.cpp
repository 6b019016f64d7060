#include "permgrid/geometry.hpp"

#include <algorithm>

#include "permgrid/error.hpp"

namespace permgrid {

Rectangle Rectangle::extended(Point p) const {
  return {std::min(x_min, p.x), std::max(x_max, p.x), std::min(y_min, p.y),
          std::max(y_max, p.y)};
}

std::string_view to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::NE: return "NE";
    case RegionTag::NW: return "NW";
    case RegionTag::SE: return "SE";
    case RegionTag::SW: return "SW";
    case RegionTag::SliceV: return "SLICE_V";
    case RegionTag::SliceH: return "SLICE_H";
    case RegionTag::Inside: return "INSIDE";
  }
  return "?";
}

Rectangle rect_hull(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "rectangular hull of an empty set");
  Rectangle r = rect_hull(points.front());
  for (const Point& p : points.subspan(1)) r = r.extended(p);
  return r;
}

Rectangle rect_hull(const Permutation& perm, std::span<const int> positions) {
  if (positions.empty()) throw Error(ErrorCode::EmptySet, "rectangular hull of an empty set");
  Rectangle r = rect_hull(perm.point(positions.front()));
  for (int pos : positions.subspan(1)) r = r.extended(perm.point(pos));
  return r;
}

RegionTag region_of(Point p, const Rectangle& r) {
  const bool in_x = r.spans_x(p.x);
  const bool in_y = r.spans_y(p.y);
  if (in_x && in_y) return RegionTag::Inside;
  if (in_x) return RegionTag::SliceV;
  if (in_y) return RegionTag::SliceH;
  if (p.x > r.x_max) return p.y > r.y_max ? RegionTag::NE : RegionTag::SE;
  return p.y > r.y_max ? RegionTag::NW : RegionTag::SW;
}

std::vector<int> positions_inside(const Permutation& perm, const Rectangle& r) {
  std::vector<int> out;
  const int hi = std::min(r.x_max, perm.size());
  for (int x = std::max(r.x_min, 1); x <= hi; ++x) {
    if (r.spans_y(perm(x))) out.push_back(x);
  }
  return out;
}

Permutation restrict(const Permutation& perm, const Rectangle& r) {
  const auto inside = positions_inside(perm, r);
  if (inside.empty()) throw Error(ErrorCode::EmptySet, "rectangle contains no point");
  return perm.pattern_at(inside);
}

}  // namespace permgrid
