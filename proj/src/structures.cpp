#include "permgrid/structures.hpp"

#include <algorithm>
#include <functional>

#include "permgrid/containment.hpp"
#include "permgrid/error.hpp"
#include "permgrid/pins.hpp"

namespace permgrid {

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Sum21: return "sum21";
    case StructureKind::Skew12: return "skew12";
    case StructureKind::ParallelSawtooth: return "parallel-sawtooth";
    case StructureKind::WedgeSawtooth: return "wedge-sawtooth";
    case StructureKind::SlicedWedge1: return "sliced-wedge-1";
    case StructureKind::SlicedWedge2: return "sliced-wedge-2";
    case StructureKind::SlicedWedge3: return "sliced-wedge-3";
    case StructureKind::IncreasingOscillation: return "oscillation";
  }
  return "?";
}

Permutation gen_monotone_sum(StructureKind kind, int k) {
  if (k < 1) throw Error(ErrorCode::Param, "k must be positive");
  std::vector<int> values;
  if (kind == StructureKind::Sum21) {
    for (int t = 1; t <= k; ++t) {
      values.push_back(2 * t);
      values.push_back(2 * t - 1);
    }
  } else if (kind == StructureKind::Skew12) {
    for (int t = k; t >= 1; --t) {
      values.push_back(2 * t - 1);
      values.push_back(2 * t);
    }
  } else {
    throw Error(ErrorCode::Param, "not a monotone sum kind");
  }
  return Permutation(std::move(values));
}

namespace {

void require_positive(int m) {
  if (m < 1) throw Error(ErrorCode::Param, "sawtooth length parameter must be positive");
}

/// Tooth t occupies positions 3t-2..3t: the '2', the slicer, the '1'.
/// The 21s take values m+1..3m; `slicer(t)` gives the slicer values.
template <typename Slicer>
std::vector<int> sawtooth_values(int m, Slicer slicer) {
  std::vector<int> values;
  for (int t = 1; t <= m; ++t) {
    values.push_back(m + 2 * t);
    values.push_back(slicer(t));
    values.push_back(m + 2 * t - 1);
  }
  return values;
}

}  // namespace

Permutation gen_parallel_sawtooth(int m, Symmetry orient) {
  require_positive(m);
  return orient.apply(Permutation(sawtooth_values(m, [](int t) { return t; })));
}

Permutation gen_wedge_sawtooth(int m, Symmetry orient) {
  require_positive(m);
  return orient.apply(Permutation(sawtooth_values(m, [m](int t) { return m + 1 - t; })));
}

Permutation gen_sliced_wedge(int m, int slice_type, Symmetry orient) {
  if (m < 2) throw Error(ErrorCode::Param, "sliced wedge needs m >= 2");
  std::vector<int> wedge = sawtooth_values(m, [m](int t) { return m + 1 - t; });
  std::vector<int> values;
  switch (slice_type) {
    case 1:
      // First slicer drops below the rest of the (decreasing) slicers.
      values = sawtooth_values(m, [m](int t) { return t == 1 ? 1 : m + 2 - t; });
      break;
    case 2:
      // The '2' of the leading 312 moves to the far right.
      values = wedge;
      values.erase(values.begin() + 2);
      values.push_back(wedge[2]);
      break;
    case 3: {
      // The '1' of the leading 312 becomes the maximum.
      const int dropped = wedge[1];
      values = wedge;
      for (int& v : values) {
        if (v > dropped) --v;
      }
      values[1] = 3 * m;
      break;
    }
    default:
      throw Error(ErrorCode::Param, "slice type must be 1, 2 or 3");
  }
  return orient.apply(Permutation(std::move(values)));
}

Permutation gen_increasing_oscillation(int n, int variant) {
  if (n < 3) throw Error(ErrorCode::Param, "oscillation needs n >= 3");
  if (variant != 1 && variant != 2) throw Error(ErrorCode::Param, "variant must be 1 or 2");
  PinWord word;
  for (int i = 0; i < n - 2; ++i) {
    word.directions.push_back(i % 2 == 0 ? Direction::Up : Direction::Right);
  }
  Permutation osc = realize_pin_word(word).perm;
  return variant == 1 ? osc : Symmetry::inverse().apply(osc);
}

Detection longest_sum21(const Permutation& perm) {
  const int n = perm.size();
  struct Inversion {
    int left, right;  // positions, left < right, perm(left) > perm(right)
  };
  std::vector<Inversion> inv;
  // Sorted by right endpoint so that every possible predecessor comes first.
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      if (perm(i) > perm(j)) inv.push_back({i, j});
    }
  }
  std::vector<int> best(inv.size(), 1), prev(inv.size(), -1);
  int top = -1;
  for (std::size_t b = 0; b < inv.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      // a strictly SW of b: a lies left of b's left point and below b's lower point.
      if (inv[a].right < inv[b].left && perm(inv[a].left) < perm(inv[b].right) &&
          best[a] + 1 > best[b]) {
        best[b] = best[a] + 1;
        prev[b] = static_cast<int>(a);
      }
    }
    if (top < 0 || best[b] > best[top]) top = static_cast<int>(b);
  }
  Detection out;
  if (top < 0) return out;
  out.max = best[top];
  for (int c = top; c >= 0; c = prev[c]) {
    out.witness.push_back(inv[c].right);
    out.witness.push_back(inv[c].left);
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

Detection longest_skew12(const Permutation& perm) {
  Detection d = longest_sum21(reverse(perm));
  const int n = perm.size();
  for (int& pos : d.witness) pos = n + 1 - pos;
  std::reverse(d.witness.begin(), d.witness.end());
  return d;
}

namespace {

/// Largest parameter m >= first with gen(m) contained, scanning upwards.
Detection scan_upwards(const Permutation& perm, int first, int length_per_step,
                       const std::function<Permutation(int)>& gen) {
  Detection out;
  for (int m = first; m * length_per_step <= perm.size(); ++m) {
    auto occ = find_occurrence(perm, gen(m));
    if (!occ) break;
    out.max = m;
    out.witness = std::move(*occ);
  }
  return out;
}

}  // namespace

Detection max_sawtooth(const Permutation& perm, StructureKind kind, Symmetry orient) {
  if (kind == StructureKind::ParallelSawtooth) {
    return scan_upwards(perm, 1, 3, [&](int m) { return gen_parallel_sawtooth(m, orient); });
  }
  if (kind == StructureKind::WedgeSawtooth) {
    return scan_upwards(perm, 1, 3, [&](int m) { return gen_wedge_sawtooth(m, orient); });
  }
  throw Error(ErrorCode::Param, "max_sawtooth needs a sawtooth kind");
}

Detection max_sliced_wedge(const Permutation& perm, int slice_type, Symmetry orient) {
  return scan_upwards(perm, 2, 3,
                      [&](int m) { return gen_sliced_wedge(m, slice_type, orient); });
}

Detection max_increasing_oscillation(const Permutation& perm) {
  Detection out;
  for (int n = 3; n <= perm.size(); ++n) {
    auto occ = find_occurrence(perm, gen_increasing_oscillation(n, 1));
    if (!occ) occ = find_occurrence(perm, gen_increasing_oscillation(n, 2));
    if (!occ) break;
    out.max = n;
    out.witness = std::move(*occ);
  }
  return out;
}

const std::vector<Symmetry>& sum_preserving_symmetries() {
  static const std::vector<Symmetry> subgroup = [] {
    std::vector<Symmetry> out;
    const Permutation probe = sum_of_21(2);
    for (const Symmetry& g : Symmetry::all()) {
      if (g.apply(probe) == probe) out.push_back(g);
    }
    return out;
  }();
  return subgroup;
}

int rho(const Permutation& perm) {
  int total = 0;
  for (StructureKind kind : {StructureKind::ParallelSawtooth, StructureKind::WedgeSawtooth}) {
    for (const Symmetry& g : sum_preserving_symmetries()) {
      total += 3 * max_sawtooth(perm, kind, g).max;
    }
  }
  return total;
}

}  // namespace permgrid
