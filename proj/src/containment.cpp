#include "permgrid/containment.hpp"

#include <algorithm>

namespace permgrid {

PatternMatcher::PatternMatcher(Permutation pattern)
    : pattern_(std::move(pattern)), below_(pattern_.size(), -1), above_(pattern_.size(), -1) {
  const int m = pattern_.size();
  for (int k = 0; k < m; ++k) {
    const int v = pattern_(k + 1);
    for (int j = 0; j < k; ++j) {
      const int w = pattern_(j + 1);
      if (w < v && (below_[k] < 0 || w > pattern_(below_[k] + 1))) below_[k] = j;
      if (w > v && (above_[k] < 0 || w < pattern_(above_[k] + 1))) above_[k] = j;
    }
  }
}

bool PatternMatcher::extend(const Permutation& text, int k, std::vector<int>& chosen,
                            int forced_k, int forced_pos) const {
  const int m = pattern_.size();
  if (k == m) return true;
  const int n = text.size();
  const int lo_value = below_[k] < 0 ? 0 : text(chosen[below_[k]]);
  const int hi_value = above_[k] < 0 ? n + 1 : text(chosen[above_[k]]);
  int first = k == 0 ? 1 : chosen[k - 1] + 1;
  int last = n - (m - 1 - k);
  if (forced_k >= 0) {
    if (k == forced_k) {
      first = std::max(first, forced_pos);
      last = std::min(last, forced_pos);
    } else if (k < forced_k) {
      last = std::min(last, forced_pos - (forced_k - k));
    }
  }
  for (int pos = first; pos <= last; ++pos) {
    const int v = text(pos);
    if (v <= lo_value || v >= hi_value) continue;
    chosen[k] = pos;
    if (extend(text, k + 1, chosen, forced_k, forced_pos)) return true;
  }
  return false;
}

std::optional<std::vector<int>> PatternMatcher::find(const Permutation& text) const {
  if (pattern_.size() > text.size()) return std::nullopt;
  std::vector<int> chosen(pattern_.size());
  if (extend(text, 0, chosen, -1, 0)) return chosen;
  return std::nullopt;
}

std::optional<std::vector<int>> PatternMatcher::find_through(const Permutation& text,
                                                             int pattern_position,
                                                             int text_position) const {
  if (pattern_.size() > text.size()) return std::nullopt;
  std::vector<int> chosen(pattern_.size());
  if (extend(text, 0, chosen, pattern_position - 1, text_position)) return chosen;
  return std::nullopt;
}

bool contains(const Permutation& text, const Permutation& pattern) {
  return PatternMatcher(pattern).occurs_in(text);
}

std::optional<std::vector<int>> find_occurrence(const Permutation& text,
                                                const Permutation& pattern) {
  return PatternMatcher(pattern).find(text);
}

}  // namespace permgrid
