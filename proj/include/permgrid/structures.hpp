#pragma once

#include <string_view>
#include <vector>

#include "permgrid/permutation.hpp"
#include "permgrid/symmetry.hpp"

namespace permgrid {

enum class StructureKind {
  Sum21,
  Skew12,
  ParallelSawtooth,
  WedgeSawtooth,
  SlicedWedge1,
  SlicedWedge2,
  SlicedWedge3,
  IncreasingOscillation,
};

std::string_view to_string(StructureKind kind);

/// 21 43 65 ... (2k)(2k-1) or (2k-1)(2k) ... 34 12. Throws Error(PARAM) for k < 1.
Permutation gen_monotone_sum(StructureKind kind, int k);
inline Permutation sum_of_21(int k) { return gen_monotone_sum(StructureKind::Sum21, k); }
inline Permutation skew_of_12(int k) { return gen_monotone_sum(StructureKind::Skew12, k); }

/// Sum of m copies of 21, each sliced from below by one entry of an
/// increasing sequence. Length 3m.
Permutation gen_parallel_sawtooth(int m, Symmetry orient = Symmetry::identity());

/// As the parallel sawtooth, but the slicing entries decrease.
Permutation gen_wedge_sawtooth(int m, Symmetry orient = Symmetry::identity());

/// Wedge sawtooth with the leading 312 interval broken: type 1 drops the
/// first slicer below all others, type 2 moves the first tooth's lower
/// entry to the far right, type 3 replaces the first slicer by a new
/// maximum. Throws Error(PARAM) for m < 2 or a bad type.
Permutation gen_sliced_wedge(int m, int slice_type, Symmetry orient = Symmetry::identity());

/// Pin sequence from a 21 using only up and right pins (variant 1) or its
/// inverse (variant 2). Throws Error(PARAM) for n < 3 or a bad variant.
Permutation gen_increasing_oscillation(int n, int variant = 1);

/// Maximal parameter of a structure together with one occurrence.
struct Detection {
  int max = 0;
  std::vector<int> witness;  ///< 1-based positions, empty when max == 0
};

/// Longest sum of 21s, by a longest-chain dynamic programme over
/// inversions ordered so that each is strictly NE of its predecessor.
Detection longest_sum21(const Permutation& perm);
/// Longest skew sum of 12s, via the reverse.
Detection longest_skew12(const Permutation& perm);

/// Largest m with gen(m, orient) contained. kind is ParallelSawtooth or WedgeSawtooth.
Detection max_sawtooth(const Permutation& perm, StructureKind kind,
                       Symmetry orient = Symmetry::identity());

/// Largest m >= 2 with the sliced wedge of the given type contained, else 0.
Detection max_sliced_wedge(const Permutation& perm, int slice_type,
                           Symmetry orient = Symmetry::identity());

/// Largest n >= 3 with either increasing oscillation of length n contained, else 0.
Detection max_increasing_oscillation(const Permutation& perm);

/// The four symmetries that carry a sum of 21s to a sum of 21s. Together
/// with the two sawtooth families they give the eight sawtooth types.
const std::vector<Symmetry>& sum_preserving_symmetries();

/// Sum over the eight sawtooth types of the length (3m) of the largest one contained.
int rho(const Permutation& perm);

}  // namespace permgrid
