#include "permgrid/gridding.hpp"

#include <algorithm>

#include "permgrid/error.hpp"

namespace permgrid {

std::string_view to_string(CellLabel label) {
  switch (label) {
    case CellLabel::Increasing: return "INCREASING";
    case CellLabel::Decreasing: return "DECREASING";
    case CellLabel::Empty: return "EMPTY";
  }
  return "?";
}

namespace {

// Cell index of every coordinate 1..n given gap cuts.
std::vector<int> bands(int n, const std::vector<int>& cuts) {
  std::vector<int> band(n + 1, 0);
  std::size_t k = 0;
  for (int c = 1; c <= n; ++c) {
    while (k < cuts.size() && cuts[k] < c) ++k;
    band[c] = static_cast<int>(k);
  }
  return band;
}

// Labels of all cells, or nullopt when some cell is not monotone.
std::optional<std::vector<CellLabel>> label_cells(const Permutation& perm,
                                                  const std::vector<int>& col,
                                                  const std::vector<int>& row, int rows,
                                                  int cells) {
  struct State {
    int count = 0, last = 0;
    bool inc = true, dec = true;
  };
  std::vector<State> st(cells);
  for (int x = 1; x <= perm.size(); ++x) {
    const int y = perm(x);
    State& s = st[col[x] * rows + row[y]];
    if (s.count > 0) {
      if (y > s.last) s.dec = false; else s.inc = false;
      if (!s.inc && !s.dec) return std::nullopt;
    }
    s.last = y;
    ++s.count;
  }
  std::vector<CellLabel> out(cells);
  for (int c = 0; c < cells; ++c) {
    out[c] = st[c].count == 0 ? CellLabel::Empty
             : st[c].inc      ? CellLabel::Increasing
                              : CellLabel::Decreasing;
  }
  return out;
}

// Calls f on every k-subset of {1..n-1} in lexicographic order; stops when f returns true.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
  const int gaps = n - 1;
  if (k > gaps) return false;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && s[i] == gaps - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

std::optional<Gridding> find_monotone_gridding(const Permutation& perm, int h, int v) {
  if (h < 0 || v < 0) throw Error(ErrorCode::Param, "cut counts must be nonnegative");
  const int n = perm.size();
  std::optional<Gridding> found;
  for (int total = 0; total <= h + v && !found; ++total) {
    for (int nv = std::max(0, total - h); nv <= std::min(v, total) && !found; ++nv) {
      const int nh = total - nv;
      for_each_subset(n, nv, [&](const std::vector<int>& vc) {
        const auto col = bands(n, vc);
        return for_each_subset(n, nh, [&](const std::vector<int>& hc) {
          const auto row = bands(n, hc);
          auto cells = label_cells(perm, col, row, nh + 1, (nv + 1) * (nh + 1));
          if (!cells) return false;
          found = Gridding{hc, vc, std::move(*cells)};
          return true;
        });
      });
    }
  }
  return found;
}

bool verify_gridding(const Permutation& perm, const Gridding& g) {
  const int n = perm.size();
  const auto sorted_gaps = [n](const std::vector<int>& c) {
    return std::is_sorted(c.begin(), c.end()) &&
           std::adjacent_find(c.begin(), c.end()) == c.end() &&
           std::all_of(c.begin(), c.end(), [n](int x) { return 1 <= x && x < n; });
  };
  if (!sorted_gaps(g.h_cuts) || !sorted_gaps(g.v_cuts)) return false;
  if (static_cast<int>(g.cells.size()) != g.columns() * g.rows()) return false;

  // Independent of label_cells: collect each cell's points and test them directly.
  std::vector<std::vector<int>> ys(g.cells.size());
  const auto col = bands(n, g.v_cuts), row = bands(n, g.h_cuts);
  for (int x = 1; x <= n; ++x) ys[col[x] * g.rows() + row[perm(x)]].push_back(perm(x));
  for (std::size_t c = 0; c < ys.size(); ++c) {
    const auto& y = ys[c];
    switch (g.cells[c]) {
      case CellLabel::Empty:
        if (!y.empty()) return false;
        break;
      case CellLabel::Increasing:
        if (!std::is_sorted(y.begin(), y.end())) return false;
        break;
      case CellLabel::Decreasing:
        if (!std::is_sorted(y.rbegin(), y.rend())) return false;
        break;
    }
  }
  return true;
}

}  // namespace permgrid
