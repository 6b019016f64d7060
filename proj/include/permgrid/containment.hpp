#pragma once

#include <optional>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

/// Backtracking pattern matcher for a fixed pattern.
///
/// Pattern entries are placed left to right; each candidate value is
/// confined to the window between the already-placed entries that are its
/// nearest neighbours in value, and positions are capped so that enough
/// text remains for the rest of the pattern.
class PatternMatcher {
 public:
  explicit PatternMatcher(Permutation pattern);

  const Permutation& pattern() const { return pattern_; }

  /// Positions (1-based, increasing) of one occurrence, if any.
  std::optional<std::vector<int>> find(const Permutation& text) const;

  /// As find(), but pattern entry `pattern_position` must land on text
  /// position `text_position`.
  std::optional<std::vector<int>> find_through(const Permutation& text, int pattern_position,
                                               int text_position) const;

  bool occurs_in(const Permutation& text) const { return find(text).has_value(); }

 private:
  bool extend(const Permutation& text, int k, std::vector<int>& chosen, int forced_k,
              int forced_pos) const;

  Permutation pattern_;
  std::vector<int> below_;  ///< index of the placed entry just below in value, or -1
  std::vector<int> above_;  ///< index of the placed entry just above in value, or -1
};

/// True iff some subsequence of `text` is order-isomorphic to `pattern`.
bool contains(const Permutation& text, const Permutation& pattern);

/// One occurrence of `pattern` in `text` as 1-based positions.
std::optional<std::vector<int>> find_occurrence(const Permutation& text,
                                                const Permutation& pattern);

}  // namespace permgrid
