#include "permgrid/decomposition.hpp"

#include <algorithm>

#include "permgrid/error.hpp"

namespace permgrid {

std::vector<Interval> intervals(const Permutation& perm) {
  const int n = perm.size();
  std::vector<Interval> out;
  for (int i = 1; i <= n; ++i) {
    int lo = perm(i);
    int hi = perm(i);
    for (int j = i; j <= n; ++j) {
      lo = std::min(lo, perm(j));
      hi = std::max(hi, perm(j));
      if (hi - lo == j - i) out.push_back({i, j, lo, hi});
    }
  }
  return out;
}

bool is_simple(const Permutation& perm) {
  const int n = perm.size();
  if (n < 2) return false;
  // Early exit on the first proper non-singleton interval.
  for (int i = 1; i <= n; ++i) {
    int lo = perm(i);
    int hi = perm(i);
    for (int j = i + 1; j <= n; ++j) {
      lo = std::min(lo, perm(j));
      hi = std::max(hi, perm(j));
      if (hi - lo == j - i && !(i == 1 && j == n)) return false;
    }
  }
  return true;
}

Permutation inflate(const Permutation& skeleton, std::span<const Permutation> parts) {
  const int k = skeleton.size();
  if (static_cast<int>(parts.size()) != k) {
    throw Error(ErrorCode::Arity, "inflation needs " + std::to_string(k) + " parts, got " +
                                      std::to_string(parts.size()));
  }
  // Value offset of each block: total size of the parts with smaller skeleton values.
  std::vector<int> size_by_value(k + 1, 0);
  for (int i = 1; i <= k; ++i) {
    if (parts[i - 1].empty()) throw Error(ErrorCode::EmptySet, "empty part in inflation");
    size_by_value[skeleton(i)] = parts[i - 1].size();
  }
  std::vector<int> offset(k + 1, 0);
  for (int v = 2; v <= k; ++v) offset[v] = offset[v - 1] + size_by_value[v - 1];

  std::vector<int> values;
  for (int i = 1; i <= k; ++i) {
    for (int v : parts[i - 1].values()) values.push_back(offset[skeleton(i)] + v);
  }
  return Permutation(std::move(values));
}

std::string_view to_string(SkeletonKind kind) {
  switch (kind) {
    case SkeletonKind::Simple: return "SIMPLE";
    case SkeletonKind::Increasing: return "INCREASING";
    case SkeletonKind::Decreasing: return "DECREASING";
  }
  return "?";
}

std::vector<int> sum_component_sizes(const Permutation& perm) {
  std::vector<int> sizes;
  int start = 0;
  int hi = 0;
  for (int i = 1; i <= perm.size(); ++i) {
    hi = std::max(hi, perm(i));
    if (hi == i) {
      sizes.push_back(i - start);
      start = i;
    }
  }
  return sizes;
}

std::vector<int> skew_component_sizes(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> sizes;
  int start = 0;
  int lo = n + 1;
  for (int i = 1; i <= n; ++i) {
    lo = std::min(lo, perm(i));
    if (lo == n - i + 1) {
      sizes.push_back(i - start);
      start = i;
    }
  }
  return sizes;
}

namespace {

Interval block_of(const Permutation& perm, int first, int last) {
  int lo = perm(first);
  int hi = lo;
  for (int i = first; i <= last; ++i) {
    lo = std::min(lo, perm(i));
    hi = std::max(hi, perm(i));
  }
  return {first, last, lo, hi};
}

Decomposition from_blocks(const Permutation& perm, SkeletonKind kind,
                          std::vector<Interval> blocks) {
  Decomposition d;
  d.kind = kind;
  std::vector<int> representatives;
  for (const Interval& b : blocks) {
    representatives.push_back(b.low);
    std::vector<int> positions;
    for (int i = b.first; i <= b.last; ++i) positions.push_back(i);
    d.parts.push_back(perm.pattern_at(positions));
  }
  d.skeleton = Permutation::flatten(representatives);
  d.blocks = std::move(blocks);
  return d;
}

Decomposition monotone_layering(const Permutation& perm, const std::vector<int>& sizes,
                                SkeletonKind kind) {
  std::vector<Interval> blocks;
  int first = 1;
  for (int s : sizes) {
    blocks.push_back(block_of(perm, first, first + s - 1));
    first += s;
  }
  return from_blocks(perm, kind, std::move(blocks));
}

}  // namespace

Decomposition substitution_decompose(const Permutation& perm) {
  const int n = perm.size();
  if (n < 2) throw Error(ErrorCode::TooShort, "decomposition needs length >= 2");

  if (auto sizes = sum_component_sizes(perm); sizes.size() > 1) {
    return monotone_layering(perm, sizes, SkeletonKind::Increasing);
  }
  if (auto sizes = skew_component_sizes(perm); sizes.size() > 1) {
    return monotone_layering(perm, sizes, SkeletonKind::Decreasing);
  }

  // Sum- and skew-indecomposable: the maximal proper intervals partition
  // the positions and the skeleton is simple of length >= 4.
  std::vector<Interval> blocks;
  const auto all = intervals(perm);
  int next = 1;
  while (next <= n) {
    Interval best{next, next, perm(next), perm(next)};
    for (const Interval& iv : all) {
      if (iv.first == next && iv.size() < n && iv.size() > best.size()) best = iv;
    }
    blocks.push_back(best);
    next = best.last + 1;
  }
  return from_blocks(perm, SkeletonKind::Simple, std::move(blocks));
}

}  // namespace permgrid
