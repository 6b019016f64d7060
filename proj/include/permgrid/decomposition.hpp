#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

/// A set of points contiguous in both positions and values.
struct Interval {
  int first = 0;  ///< first position
  int last = 0;   ///< last position
  int low = 0;    ///< smallest value
  int high = 0;   ///< largest value

  int size() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Every interval of `perm`, found by scanning all position windows.
/// Sorted by (first, last).
std::vector<Interval> intervals(const Permutation& perm);

/// True iff the only intervals are the singletons and the whole, and
/// perm != 1. Under this convention 12 and 21 are simple.
bool is_simple(const Permutation& perm);

/// sigma[parts...]: each entry of the skeleton is replaced by an interval
/// order-isomorphic to the matching part. Throws Error(ARITY) on a length
/// mismatch and Error(EMPTY_SET) on an empty part.
Permutation inflate(const Permutation& skeleton, std::span<const Permutation> parts);

enum class SkeletonKind { Simple, Increasing, Decreasing };

std::string_view to_string(SkeletonKind kind);

/// Substitution decomposition. Monotone skeletons are canonicalised to the
/// finest layering (every part sum-, resp. skew-, indecomposable).
struct Decomposition {
  SkeletonKind kind = SkeletonKind::Simple;
  /// The simple skeleton, or the identity/decreasing permutation of length c.
  Permutation skeleton;
  std::vector<Permutation> parts;
  /// The blocks of the original permutation that the parts came from.
  std::vector<Interval> blocks;
};

/// Throws Error(TOO_SHORT) for permutations of length < 2.
Decomposition substitution_decompose(const Permutation& perm);

/// Lengths of the finest sum (resp. skew) layering, left to right.
std::vector<int> sum_component_sizes(const Permutation& perm);
std::vector<int> skew_component_sizes(const Permutation& perm);

inline bool is_sum_decomposable(const Permutation& p) { return sum_component_sizes(p).size() > 1; }
inline bool is_skew_decomposable(const Permutation& p) { return skew_component_sizes(p).size() > 1; }

}  // namespace permgrid
