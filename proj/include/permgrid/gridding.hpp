#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

enum class CellLabel { Increasing, Decreasing, Empty };

std::string_view to_string(CellLabel label);

/// Cut lines are stored as gap indices: g means the line at g + 1/2.
/// h_cuts are horizontal lines (between values), v_cuts vertical lines
/// (between positions). Cells are indexed column-major from the bottom-left.
struct Gridding {
  std::vector<int> h_cuts;
  std::vector<int> v_cuts;
  std::vector<CellLabel> cells;

  int columns() const { return static_cast<int>(v_cuts.size()) + 1; }
  int rows() const { return static_cast<int>(h_cuts.size()) + 1; }
  CellLabel cell(int column, int row) const { return cells[column * rows() + row]; }
};

/// Searches every placement of at most h horizontal and v vertical cuts,
/// fewest cuts first. Singleton cells are labelled Increasing.
std::optional<Gridding> find_monotone_gridding(const Permutation& perm, int h, int v);

/// Recomputes the cells of `g` and checks every label.
bool verify_gridding(const Permutation& perm, const Gridding& g);

}  // namespace permgrid
