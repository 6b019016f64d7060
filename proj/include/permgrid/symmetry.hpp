#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "permgrid/permutation.hpp"

namespace permgrid {

/// Element of the dihedral group of the square acting on permutation plots.
///
/// Represented as a signed permutation matrix acting on coordinates centred
/// at the middle of the n-by-n grid.
class Symmetry {
 public:
  constexpr Symmetry() = default;

  static constexpr Symmetry identity() { return {1, 0, 0, 1}; }
  static constexpr Symmetry reverse() { return {-1, 0, 0, 1}; }
  static constexpr Symmetry complement() { return {1, 0, 0, -1}; }
  static constexpr Symmetry rotate180() { return {-1, 0, 0, -1}; }
  /// Reflection in the main diagonal (the inverse permutation).
  static constexpr Symmetry inverse() { return {0, 1, 1, 0}; }
  /// Reflection in the anti-diagonal.
  static constexpr Symmetry antidiagonal() { return {0, -1, -1, 0}; }
  /// Quarter turn counterclockwise.
  static constexpr Symmetry rotate90() { return {0, -1, 1, 0}; }
  static constexpr Symmetry rotate270() { return {0, 1, -1, 0}; }

  /// All eight elements, identity first.
  static const std::array<Symmetry, 8>& all();

  /// Parses a name such as "reverse" or "rotate90" (see name()).
  static std::optional<Symmetry> from_name(std::string_view name);
  std::string_view name() const;

  /// Acts on a direction vector (dx, dy) with entries in {-1, 0, 1}.
  constexpr std::array<int, 2> apply_vector(int dx, int dy) const {
    return {a_ * dx + b_ * dy, c_ * dx + d_ * dy};
  }

  Point apply(Point p, int n) const;
  Permutation apply(const Permutation& perm) const;

  /// True when the map exchanges the two axes.
  constexpr bool swaps_axes() const { return a_ == 0; }
  constexpr bool preserves_orientation() const { return a_ * d_ - b_ * c_ == 1; }

  /// (*this)(other(p)).
  constexpr Symmetry compose(const Symmetry& other) const {
    return {a_ * other.a_ + b_ * other.c_, a_ * other.b_ + b_ * other.d_,
            c_ * other.a_ + d_ * other.c_, c_ * other.b_ + d_ * other.d_};
  }
  constexpr Symmetry inverted() const { return {a_, c_, b_, d_}; }

  friend constexpr bool operator==(const Symmetry&, const Symmetry&) = default;

 private:
  constexpr Symmetry(int a, int b, int c, int d) : a_(a), b_(b), c_(c), d_(d) {}

  int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

inline Permutation reverse(const Permutation& p) { return Symmetry::reverse().apply(p); }
inline Permutation complement(const Permutation& p) { return Symmetry::complement().apply(p); }
inline Permutation inverse(const Permutation& p) { return Symmetry::inverse().apply(p); }

}  // namespace permgrid
