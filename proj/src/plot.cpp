#include "permgrid/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "permgrid/error.hpp"

namespace permgrid {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Canvas {
  int n;
  double size, margin, step;

  double px(double x) const { return margin + (x - 0.5) * step; }
  double py(double y) const { return size - margin - (y - 0.5) * step; }
};

void check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::Plot, what);
}

}  // namespace

std::string plot_svg(const PlotSpec& spec) {
  const int n = spec.perm.size();
  check(n >= 1, "nothing to plot");
  check(spec.size >= 50, "plot size too small");
  for (int p : spec.hollow) check(1 <= p && p <= n, "hollow marker outside the permutation");
  for (int g : spec.h_lines) check(1 <= g && g < n, "horizontal line outside the plot");
  for (int g : spec.v_lines) check(1 <= g && g < n, "vertical line outside the plot");
  for (const auto& r : spec.rectangles) {
    check(1 <= r.x_min && r.x_min <= r.x_max && r.x_max <= n && 1 <= r.y_min &&
              r.y_min <= r.y_max && r.y_max <= n,
          "rectangle outside the plot");
  }
  if (spec.pins) {
    check(spec.pins->positions.size() == spec.pins->directions.size(), "pin directions missing");
    for (int p : spec.pins->positions) check(1 <= p && p <= n, "pin outside the permutation");
  }

  const double size = spec.size;
  const double margin = size * 0.08;
  const Canvas c{n, size, margin, (size - 2 * margin) / n};
  const double dot = std::max(2.0, c.step * 0.15);

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.size
    << "\" height=\"" << spec.size << "\" viewBox=\"0 0 " << spec.size << ' ' << spec.size
    << "\">\n";
  o << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" "
       "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#333\"/></marker></defs>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << spec.size << "\" height=\"" << spec.size
    << "\" fill=\"white\"/>\n";

  o << "<g id=\"grid\" stroke=\"#ddd\" stroke-width=\"1\">\n";
  for (int k = 0; k <= n; ++k) {
    const double t = k + 0.5;
    o << "<line x1=\"" << num(c.px(t)) << "\" y1=\"" << num(c.py(0.5)) << "\" x2=\""
      << num(c.px(t)) << "\" y2=\"" << num(c.py(n + 0.5)) << "\"/>\n";
    o << "<line x1=\"" << num(c.px(0.5)) << "\" y1=\"" << num(c.py(t)) << "\" x2=\""
      << num(c.px(n + 0.5)) << "\" y2=\"" << num(c.py(t)) << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"rectangles\" fill=\"#888\" fill-opacity=\"0.15\" stroke=\"#555\">\n";
  for (const auto& r : spec.rectangles) {
    o << "<rect x=\"" << num(c.px(r.x_lo())) << "\" y=\"" << num(c.py(r.y_hi())) << "\" width=\""
      << num((r.x_hi() - r.x_lo()) * c.step) << "\" height=\""
      << num((r.y_hi() - r.y_lo()) * c.step) << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g id=\"cuts\" stroke=\"#c00\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\">\n";
  for (int g : spec.v_lines) {
    o << "<line x1=\"" << num(c.px(g + 0.5)) << "\" y1=\"" << num(c.py(0.5)) << "\" x2=\""
      << num(c.px(g + 0.5)) << "\" y2=\"" << num(c.py(n + 0.5)) << "\"/>\n";
  }
  for (int g : spec.h_lines) {
    o << "<line x1=\"" << num(c.px(0.5)) << "\" y1=\"" << num(c.py(g + 0.5)) << "\" x2=\""
      << num(c.px(n + 0.5)) << "\" y2=\"" << num(c.py(g + 0.5)) << "\"/>\n";
  }
  o << "</g>\n";

  if (spec.pins) {
    o << "<g id=\"pins\" stroke=\"#333\" font-family=\"sans-serif\" font-size=\""
      << num(std::max(8.0, c.step * 0.3)) << "\">\n";
    const auto& seq = *spec.pins;
    for (int k = 0; k < seq.size(); ++k) {
      const Point p = spec.perm.point(seq.positions[k]);
      const auto [dx, dy] = unit_vector(seq.directions[k]);
      const double x = c.px(p.x), y = c.py(p.y);
      if (dx != 0 || dy != 0) {
        // Arrow arriving at the pin from the direction it travelled.
        const double len = c.step * 0.6;
        o << "<line x1=\"" << num(x - dx * len) << "\" y1=\"" << num(y + dy * len) << "\" x2=\""
          << num(x - dx * dot * 1.5) << "\" y2=\"" << num(y + dy * dot * 1.5)
          << "\" marker-end=\"url(#arrow)\"/>\n";
      }
      o << "<text x=\"" << num(x + dot * 1.5) << "\" y=\"" << num(y - dot * 1.5)
        << "\" stroke=\"none\" fill=\"#333\">p" << k + 1;
      if (dx != 0 || dy != 0) o << ' ' << to_char(seq.directions[k]);
      o << "</text>\n";
    }
    o << "</g>\n";
  }

  const std::set<int> hollow(spec.hollow.begin(), spec.hollow.end());
  o << "<g id=\"points\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (int x = 1; x <= n; ++x) {
    o << "<circle cx=\"" << num(c.px(x)) << "\" cy=\"" << num(c.py(spec.perm(x))) << "\" r=\""
      << num(dot) << "\" fill=\"" << (hollow.count(x) ? "white" : "black") << "\"/>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace permgrid
