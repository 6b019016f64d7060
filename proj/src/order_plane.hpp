#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid::detail {

/// Points known only by their relative order along each axis. New points
/// are slotted next to existing ones; flattening yields the permutation.
class OrderPlane {
 public:
  enum class Axis { X, Y };

  int add() { return count_++; }
  int count() const { return count_; }

  void push_low(Axis axis, int id) { order(axis).insert(order(axis).begin(), id); }
  void push_high(Axis axis, int id) { order(axis).push_back(id); }

  /// Inserts `id` immediately above (or below) `anchor` along `axis`.
  void insert_next_to(Axis axis, int id, int anchor, bool above) {
    auto& o = order(axis);
    auto it = std::find(o.begin(), o.end(), anchor);
    if (above) ++it;
    o.insert(it, id);
  }

  void insert_at(Axis axis, int id, int rank) {
    order(axis).insert(order(axis).begin() + rank, id);
  }

  int rank(Axis axis, int id) const {
    const auto& o = axis == Axis::X ? x_ : y_;
    return static_cast<int>(std::find(o.begin(), o.end(), id) - o.begin());
  }

  /// The permutation and the 1-based position of every id.
  std::pair<Permutation, std::vector<int>> flatten() const {
    std::vector<int> y_rank(count_), position(count_);
    for (int r = 0; r < count_; ++r) y_rank[y_[r]] = r + 1;
    std::vector<int> values(count_);
    for (int r = 0; r < count_; ++r) {
      values[r] = y_rank[x_[r]];
      position[x_[r]] = r + 1;
    }
    return {Permutation(std::move(values)), std::move(position)};
  }

 private:
  std::vector<int>& order(Axis axis) { return axis == Axis::X ? x_ : y_; }

  int count_ = 0;
  std::vector<int> x_, y_;
};

}  // namespace permgrid::detail
