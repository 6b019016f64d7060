#include "permgrid/symmetry.hpp"

namespace permgrid {

namespace {

struct NamedSymmetry {
  std::string_view name;
  Symmetry symmetry;
};

constexpr std::array<NamedSymmetry, 8> kNamed{{
    {"identity", Symmetry::identity()},
    {"reverse", Symmetry::reverse()},
    {"complement", Symmetry::complement()},
    {"rotate180", Symmetry::rotate180()},
    {"inverse", Symmetry::inverse()},
    {"antidiagonal", Symmetry::antidiagonal()},
    {"rotate90", Symmetry::rotate90()},
    {"rotate270", Symmetry::rotate270()},
}};

}  // namespace

const std::array<Symmetry, 8>& Symmetry::all() {
  static const std::array<Symmetry, 8> elements = [] {
    std::array<Symmetry, 8> out;
    for (std::size_t i = 0; i < kNamed.size(); ++i) out[i] = kNamed[i].symmetry;
    return out;
  }();
  return elements;
}

std::optional<Symmetry> Symmetry::from_name(std::string_view name) {
  for (const auto& entry : kNamed) {
    if (entry.name == name) return entry.symmetry;
  }
  return std::nullopt;
}

std::string_view Symmetry::name() const {
  for (const auto& entry : kNamed) {
    if (entry.symmetry == *this) return entry.name;
  }
  return "?";
}

Point Symmetry::apply(Point p, int n) const {
  // Doubled centred coordinates keep everything integral.
  const int cx = 2 * p.x - (n + 1);
  const int cy = 2 * p.y - (n + 1);
  const auto [rx, ry] = apply_vector(cx, cy);
  return {(rx + n + 1) / 2, (ry + n + 1) / 2};
}

Permutation Symmetry::apply(const Permutation& perm) const {
  const int n = perm.size();
  std::vector<int> values(n);
  for (int x = 1; x <= n; ++x) {
    const Point q = apply(perm.point(x), n);
    values[q.x - 1] = q.y;
  }
  return Permutation(std::move(values));
}

}  // namespace permgrid
