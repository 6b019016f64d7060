#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permgrid {

/// A point of a permutation plot. Both coordinates are 1-based.
struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A permutation of {1..n} in one-line notation.
///
/// Positions and values are 1-based throughout the library; the point at
/// position i is (i, pi(i)). A point is identified by its position.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(PARSE) unless `values` is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  /// Order-isomorphic relabelling of pairwise distinct integers.
  static Permutation flatten(std::span<const int> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at a 1-based position.
  int operator()(int position) const { return values_[position - 1]; }
  Point point(int position) const { return {position, values_[position - 1]}; }

  std::span<const int> values() const noexcept { return values_; }

  /// Position holding each value (1-based), i.e. the inverse permutation's values.
  std::vector<int> positions_of_values() const;

  /// Pattern formed by the given positions (in increasing position order).
  Permutation pattern_at(std::span<const int> positions) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  std::vector<int> values_;
};

/// Parses whitespace- or comma-separated one-line notation ("2 4 1 3").
/// A string of single digits without separators ("2413") is accepted too.
Permutation parse_permutation(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Permutation& perm);

/// Every permutation of length n, in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace permgrid

template <>
struct std::hash<permgrid::Permutation> {
  std::size_t operator()(const permgrid::Permutation& perm) const noexcept;
};
