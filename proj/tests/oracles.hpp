#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the Permutation container.

#include <algorithm>
#include <random>
#include <vector>

#include "permgrid/permutation.hpp"
#include "permgrid/pins.hpp"

namespace oracle {

using permgrid::Permutation;

inline std::vector<int> flatten(const std::vector<int>& v) {
  std::vector<int> sorted = v, out(v.size());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v[i]) -
                              sorted.begin()) + 1;
  }
  return out;
}

inline std::vector<int> values(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

/// Tries every k-subset of positions.
inline bool contains(const Permutation& text, const Permutation& pattern) {
  const int n = text.size(), k = pattern.size();
  if (k == 0) return true;
  if (k > n) return false;
  const std::vector<int> target = values(pattern);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) sub.push_back(text(i + 1));
    }
    if (flatten(sub) == target) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

struct Window {
  int first, last;
  friend bool operator==(const Window&, const Window&) = default;
};

/// Every position window whose values are contiguous.
inline std::vector<Window> intervals(const Permutation& p) {
  std::vector<Window> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i; j <= p.size(); ++j) {
      int lo = p(i), hi = p(i);
      for (int k = i; k <= j; ++k) {
        lo = std::min(lo, p(k));
        hi = std::max(hi, p(k));
      }
      if (hi - lo == j - i) out.push_back({i, j});
    }
  }
  return out;
}

inline bool is_simple(const Permutation& p) {
  return p.size() >= 2 && static_cast<int>(intervals(p).size()) == p.size() + 1;
}

inline Permutation sum21(int k) {
  std::vector<int> v;
  for (int i = 0; i < k; ++i) {
    v.push_back(2 * i + 2);
    v.push_back(2 * i + 1);
  }
  return Permutation(v);
}

inline Permutation skew12(int k) {
  std::vector<int> v;
  for (int i = k - 1; i >= 0; --i) {
    v.push_back(2 * i + 1);
    v.push_back(2 * i + 2);
  }
  return Permutation(v);
}

inline Permutation reversed(const Permutation& p) {
  std::vector<int> v = values(p);
  std::reverse(v.begin(), v.end());
  return Permutation(v);
}

inline Permutation transposed(const Permutation& p) {
  std::vector<int> v(p.size());
  for (int i = 1; i <= p.size(); ++i) v[p(i) - 1] = i;
  return Permutation(v);
}

/// Largest k with a sum of k 21s contained.
inline int longest_sum21(const Permutation& p) {
  int k = 0;
  while (2 * (k + 1) <= p.size() && contains(p, sum21(k + 1))) ++k;
  return k;
}

/// Every sequence of distinct positions extending (p1, p2), filtered by the
/// validator, sorted by positions.
inline std::vector<std::vector<int>> pin_sequences(const Permutation& host, int p1, int p2,
                                                   int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq{p1, p2};
  std::vector<bool> used(host.size() + 1, false);
  used[p1] = used[p2] = true;
  auto rec = [&](auto&& self) -> void {
    if (std::holds_alternative<permgrid::PinSequence>(
            permgrid::validate_pin_sequence(host, seq))) {
      out.push_back(seq);
    }
    if (static_cast<int>(seq.size()) == max_len) return;
    for (int q = 1; q <= host.size(); ++q) {
      if (used[q]) continue;
      used[q] = true;
      seq.push_back(q);
      self(self);
      seq.pop_back();
      used[q] = false;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace oracle
