#include "permgrid/extensions.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "pin_realization.hpp"
#include "permgrid/error.hpp"
#include "permgrid/geometry.hpp"

namespace permgrid {

namespace {

// The symmetry taking (prev, cur) to (up, right).
Symmetry canonical_frame(Direction prev, Direction cur) {
  for (const Symmetry& g : Symmetry::all()) {
    if (transform(prev, g) == Direction::Up && transform(cur, g) == Direction::Right) return g;
  }
  throw Error(ErrorCode::Param, "pins are not perpendicular");
}

bool forms_21(Point a, Point b) { return (a.x - b.x) * (a.y - b.y) < 0; }

bool strictly_between(int z, int a, int b) { return std::min(a, b) < z && z < std::max(a, b); }

bool separates(Point z, Point a, Point b) {
  return strictly_between(z.x, a.x, b.x) || strictly_between(z.y, a.y, b.y);
}

struct Canvas {
  std::vector<Point> pt;  // canonical coordinates, 1-based
  std::vector<char> is_pin;

  std::vector<int> slicers(const Rectangle& r) const {
    std::vector<int> out;
    for (int k = 1; k < static_cast<int>(pt.size()); ++k) {
      if (slices(pt[k], r)) out.push_back(k);
    }
    return out;
  }
  std::vector<int> pin_slicers(const Rectangle& r) const {
    std::vector<int> out;
    for (int k : slicers(r)) {
      if (is_pin[k]) out.push_back(k);
    }
    return out;
  }
};

Rectangle hull(const Canvas& c, std::initializer_list<int> ids) {
  Rectangle r = rect_hull(c.pt[*ids.begin()]);
  for (int k : ids) r = r.extended(c.pt[k]);
  return r;
}

bool subset_of(const std::vector<int>& s, std::initializer_list<int> allowed) {
  return std::all_of(s.begin(), s.end(), [&](int k) {
    return std::find(allowed.begin(), allowed.end(), k) != allowed.end();
  });
}


// The neighbourhood of pin p_i seen in the frame where p_{i-1} is an up pin
// and p_i a right pin.
class PinView {
 public:
  PinView(const Permutation& host, const PinSequence& spiral, const std::vector<char>& is_pin,
          int i)
      : i_(i) {
    const int n = host.size(), m = spiral.size();
    const Symmetry g = canonical_frame(spiral.directions[i - 2], spiral.directions[i - 1]);
    c_.pt.resize(n + 1);
    for (int k = 1; k <= n; ++k) c_.pt[k] = g.apply(host.point(k), n);
    c_.is_pin = is_pin;
    const auto pin = [&](int j) { return spiral.positions[j - 1]; };
    pi_ = pin(i);
    prev_ = pin(i - 1);
    next_ = i + 1 <= m ? pin(i + 1) : 0;
    after_next_ = i + 2 <= m ? pin(i + 2) : 0;
    base_ = rect_hull(c_.pt[pin(1)]);
    for (int j = 2; j <= i - 2; ++j) base_ = base_.extended(c_.pt[pin(j)]);
  }

  int size() const { return static_cast<int>(c_.pt.size()) - 1; }
  bool has_next() const { return next_ != 0; }
  bool is_pin(int k) const { return c_.is_pin[k]; }

  bool type1(int q) const {
    if (c_.is_pin[q] || !forms_21(c_.pt[pi_], c_.pt[q])) return false;
    const auto s = c_.slicers(hull(c_, {pi_, q}));
    return !s.empty() && subset_of(s, {prev_, next_});
  }

  /// Candidate for q or r: SW of p_i and NE of rect(p_1..p_{i-2}).
  bool in_pocket(int k) const {
    const Point z = c_.pt[k], P = c_.pt[pi_];
    return !c_.is_pin[k] && z.x < P.x && z.y < P.y && z.x > base_.x_max && z.y > base_.y_max;
  }

  /// The type 2 record with q, r (q left of r), if clauses (i)-(iii) hold.
  std::optional<ExtensionRecord> type2(int q, int r) const {
    if (!next_ || !in_pocket(q) || !in_pocket(r)) return std::nullopt;
    const Point P = c_.pt[pi_], Q = c_.pt[q], R = c_.pt[r], N = c_.pt[next_];
    if (!(Q.x < R.x && Q.y > R.y)) return std::nullopt;
    const auto qr_slicers = c_.slicers(hull(c_, {q, r}));
    if (qr_slicers.size() != 1 || c_.is_pin[qr_slicers[0]]) return std::nullopt;
    const int s = qr_slicers[0];
    const Point S = c_.pt[s];
    if (!separates(N, P, Q) || !separates(N, P, R)) return std::nullopt;
    const auto around = c_.pin_slicers(hull(c_, {pi_, q, r}));
    if (around.size() != 1 || around[0] != next_) return std::nullopt;

    ExtensionRecord rec{i_, 2, {q, r, s}, false, false};
    if (forms_21(c_.pt[prev_], S)) {
      const auto ps = c_.pin_slicers(hull(c_, {prev_, s}));
      rec.branch_one = ps.size() == 1 && ps[0] == pi_;
    }
    if (forms_21(S, N)) {
      const auto ps = c_.pin_slicers(hull(c_, {next_, s}));
      // With no p_{i+2}, no pin at all may slice.
      rec.branch_two = after_next_ == 0 ? ps.empty() : (ps.size() == 1 && ps[0] == after_next_);
    }
    if (!rec.branch_one && !rec.branch_two) return std::nullopt;
    return rec;
  }

 private:
  Canvas c_;
  int i_, pi_, prev_, next_, after_next_;
  Rectangle base_;
};

std::vector<char> pin_mask(int n, const PinSequence& spiral) {
  std::vector<char> mask(n + 1, 0);
  for (int p : spiral.positions) mask[p] = 1;
  return mask;
}

}  // namespace

std::vector<ExtensionRecord> find_extensions(const Permutation& host, const PinSequence& spiral) {
  if (!classify_spiral(spiral).spiral) throw Error(ErrorCode::Param, "pin sequence is not a spiral");
  const int n = host.size();
  const auto mask = pin_mask(n, spiral);

  std::vector<ExtensionRecord> out;
  // p_{i-1} must carry a direction, so the first candidate is p_4.
  for (int i = 4; i <= spiral.size(); ++i) {
    const PinView view(host, spiral, mask, i);
    for (int q = 1; q <= n; ++q) {
      if (view.type1(q)) out.push_back({i, 1, {q}, false, false});
    }
    if (!view.has_next()) continue;
    std::vector<int> pocket;
    for (int k = 1; k <= n; ++k) {
      if (view.in_pocket(k)) pocket.push_back(k);
    }
    for (int q : pocket) {
      for (int r : pocket) {
        if (auto rec = view.type2(q, r)) out.push_back(std::move(*rec));
      }
    }
  }
  return out;
}

int count_extended_pins(const std::vector<ExtensionRecord>& records) {
  std::set<int> pins;
  for (const auto& r : records) pins.insert(r.pin);
  return static_cast<int>(pins.size());
}

namespace {

using Axis = detail::OrderPlane::Axis;

// Translates canonical-frame insertions into the actual frame.
class Frame {
 public:
  Frame(detail::OrderPlane& plane, const Symmetry& to_canonical)
      : plane_(plane), to_actual_(to_canonical.inverted()) {}

  void insert(Axis axis, int id, int anchor, bool above) {
    const auto [actual, sign] = map(axis);
    plane_.insert_next_to(actual, id, anchor, sign > 0 ? above : !above);
  }

  int canonical_rank(Axis axis, int id) const {
    const auto [actual, sign] = map(axis);
    return sign * plane_.rank(actual, id);
  }

 private:
  std::pair<Axis, int> map(Axis axis) const {
    const auto [vx, vy] = axis == Axis::X ? to_actual_.apply_vector(1, 0)
                                          : to_actual_.apply_vector(0, 1);
    return {vx != 0 ? Axis::X : Axis::Y, vx + vy};
  }

  detail::OrderPlane& plane_;
  Symmetry to_actual_;
};

}  // namespace

std::optional<ExtendedSpiral> try_gen_spiral_with_extensions(
    Chirality chirality, int length, const std::vector<ExtensionSpec>& specs) {
  if (length < 4) throw Error(ErrorCode::Param, "spiral needs at least 4 pins");
  PinWord word{true, {}};
  Direction d = Direction::Up;
  for (int k = 2; k < length; ++k) {
    word.directions.push_back(d);
    d = spiral_successor(d, chirality);
  }

  std::vector<ExtensionSpec> sorted = specs;
  std::sort(sorted.begin(), sorted.end(),
            [](const ExtensionSpec& a, const ExtensionSpec& b) { return a.pin < b.pin; });
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto& s = sorted[k];
    if (s.pin < 4 || s.pin > length - 1) throw Error(ErrorCode::Placement, "pin index out of range");
    if (k > 0 && sorted[k - 1].pin == s.pin) throw Error(ErrorCode::Placement, "pin extended twice");
    const int choices = s.type == 1 ? 3 : s.type == 2 ? 2 : 0;
    if (s.placement < 0 || s.placement >= choices) {
      throw Error(ErrorCode::Placement, "unknown extension type or placement");
    }
  }

  detail::OrderPlane plane;
  detail::realize_word_into(plane, word);
  const auto direction = [&](int j) { return word.directions[j - 3]; };
  std::vector<std::vector<int>> added(sorted.size());

  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto& spec = sorted[k];
    const int i = spec.pin;
    Frame f(plane, canonical_frame(direction(i - 1), direction(i)));
    const int P = i - 2, Q = i - 1, N = i;  // ids of p_{i-1}, p_i, p_{i+1}
    if (spec.type == 1) {
      const int q = plane.add();
      f.insert(Axis::X, q, N, spec.placement == 1);
      if (spec.placement == 0) {
        f.insert(Axis::Y, q, Q, true);
      } else {
        f.insert(Axis::Y, q, P, true);
      }
      added[k] = {q};
      continue;
    }
    const int q = plane.add(), r = plane.add(), s = plane.add();
    if (spec.placement == 0) {
      f.insert(Axis::X, q, N, false);
      f.insert(Axis::X, s, q, true);
      f.insert(Axis::X, r, s, true);
      f.insert(Axis::Y, r, Q, false);
      f.insert(Axis::Y, q, r, true);
      int lowest = 0;
      for (int j = 1; j <= i - 3; ++j) {
        if (f.canonical_rank(Axis::Y, j) < f.canonical_rank(Axis::Y, lowest)) lowest = j;
      }
      f.insert(Axis::Y, s, lowest, false);
    } else {
      f.insert(Axis::X, q, N, false);
      f.insert(Axis::X, r, q, true);
      f.insert(Axis::Y, r, Q, false);
      f.insert(Axis::Y, s, r, true);
      f.insert(Axis::Y, q, s, true);
      f.insert(Axis::X, s, P, true);
    }
    added[k] = {q, r, s};
  }

  auto [perm, position] = plane.flatten();
  ExtendedSpiral out{std::move(perm), {}, {}};
  out.spiral.positions.assign(position.begin(), position.begin() + length);
  out.spiral.directions.assign(2, Direction::None);
  out.spiral.directions.insert(out.spiral.directions.end(), word.directions.begin(),
                               word.directions.end());

  // The requested extensions first: their clauses are cheap to test.
  const auto mask = pin_mask(out.perm.size(), out.spiral);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const PinView view(out.perm, out.spiral, mask, sorted[k].pin);
    std::vector<int> pts;
    for (int id : added[k]) pts.push_back(position[id]);
    std::optional<ExtensionRecord> rec;
    if (sorted[k].type == 1) {
      if (view.type1(pts[0])) rec = ExtensionRecord{sorted[k].pin, 1, pts, false, false};
    } else {
      rec = view.type2(pts[0], pts[1]);
      if (rec && rec->points != pts) rec.reset();
    }
    if (!rec) return std::nullopt;
    out.extensions.push_back(std::move(*rec));
  }

  const auto checked = validate_pin_sequence(out.perm, out.spiral.positions);
  if (!std::holds_alternative<PinSequence>(checked) ||
      std::get<PinSequence>(checked) != out.spiral) {
    return std::nullopt;
  }
  return out;
}

ExtendedSpiral gen_spiral_with_extensions(Chirality chirality, int length,
                                          const std::vector<ExtensionSpec>& specs) {
  auto out = try_gen_spiral_with_extensions(chirality, length, specs);
  if (!out) throw Error(ErrorCode::Placement, "placement is not a valid extension of a proper spiral");
  return std::move(*out);
}

}  // namespace permgrid
