#pragma once

#include <optional>
#include <vector>

#include "permgrid/permutation.hpp"
#include "permgrid/pins.hpp"

namespace permgrid {

/// Points added beside spiral pin p_i (1-based `pin`). Type 1 holds a single
/// point q; type 2 holds q, r (the copy of 21) and the slicing point s.
struct ExtensionRecord {
  int pin = 0;
  int type = 1;
  std::vector<int> points;
  /// Which half of the type 2 clause (i) held: s below-left of p_{i-1}'s
  /// slice, or the one beside p_{i+1}. Both false for type 1.
  bool branch_one = false;
  bool branch_two = false;

  friend bool operator==(const ExtensionRecord&, const ExtensionRecord&) = default;
};

/// Every type 1 point and type 2 triple around every pin of `spiral`,
/// ordered by pin index. Each case is mapped by the symmetry that makes
/// p_{i-1} an up pin and p_i a right pin before the clauses are checked.
/// Throws Error(PARAM) if `spiral` is not a spiral.
std::vector<ExtensionRecord> find_extensions(const Permutation& host, const PinSequence& spiral);

/// Number of distinct pins carrying at least one extension.
int count_extended_pins(const std::vector<ExtensionRecord>& records);

struct ExtensionSpec {
  int pin = 0;
  int type = 1;
  /// Type 1: 0, 1, 2 for the three hollow points. Type 2: 0 puts the
  /// slicing point below, 1 puts it beside p_{i-1}.
  int placement = 0;
};

struct ExtendedSpiral {
  Permutation perm;
  PinSequence spiral;
  std::vector<ExtensionRecord> extensions;
};

/// Realizes the spiral 12, U, ... of `length` pins and adds the requested
/// extensions. Throws Error(PARAM) for length < 4 and Error(PLACEMENT) for
/// pins outside 4..length-1, repeated pins, unknown placements, or any
/// combination whose result is no longer a proper spiral carrying exactly
/// the requested extensions.
ExtendedSpiral gen_spiral_with_extensions(Chirality chirality, int length,
                                          const std::vector<ExtensionSpec>& specs);

/// As gen_spiral_with_extensions, but an illegal combination of otherwise
/// well-formed specs yields nullopt instead of throwing.
std::optional<ExtendedSpiral> try_gen_spiral_with_extensions(
    Chirality chirality, int length, const std::vector<ExtensionSpec>& specs);

}  // namespace permgrid
