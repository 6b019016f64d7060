#include "permgrid/pins.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "pin_realization.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"

namespace permgrid {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::None: return "NONE";
    case Direction::Left: return "LEFT";
    case Direction::Right: return "RIGHT";
    case Direction::Up: return "UP";
    case Direction::Down: return "DOWN";
  }
  return "?";
}

char to_char(Direction d) {
  switch (d) {
    case Direction::Left: return 'L';
    case Direction::Right: return 'R';
    case Direction::Up: return 'U';
    case Direction::Down: return 'D';
    case Direction::None: break;
  }
  return '-';
}

std::optional<Direction> direction_from_char(char c) {
  switch (c) {
    case 'L': case 'l': return Direction::Left;
    case 'R': case 'r': return Direction::Right;
    case 'U': case 'u': return Direction::Up;
    case 'D': case 'd': return Direction::Down;
    default: return std::nullopt;
  }
}

std::array<int, 2> unit_vector(Direction d) {
  switch (d) {
    case Direction::Left: return {-1, 0};
    case Direction::Right: return {1, 0};
    case Direction::Up: return {0, 1};
    case Direction::Down: return {0, -1};
    case Direction::None: break;
  }
  return {0, 0};
}

Direction direction_from_vector(int dx, int dy) {
  if (dx > 0) return Direction::Right;
  if (dx < 0) return Direction::Left;
  if (dy > 0) return Direction::Up;
  if (dy < 0) return Direction::Down;
  return Direction::None;
}

Direction transform(Direction d, const Symmetry& g) {
  const auto [dx, dy] = unit_vector(d);
  const auto [tx, ty] = g.apply_vector(dx, dy);
  return direction_from_vector(tx, ty);
}

Direction opposite(Direction d) {
  const auto [dx, dy] = unit_vector(d);
  return direction_from_vector(-dx, -dy);
}

bool is_horizontal(Direction d) { return d == Direction::Left || d == Direction::Right; }

std::string_view to_string(PinClause clause) {
  switch (clause) {
    case PinClause::Slicing: return "SLICING";
    case PinClause::Maximality: return "MAXIMALITY";
    case PinClause::Separation: return "SEPARATION";
  }
  return "?";
}

std::string_view to_string(Chirality c) {
  return c == Chirality::Clockwise ? "clockwise" : "counterclockwise";
}

namespace {

/// Geometry needed to extend p_1..p_i by one pin.
struct PinState {
  Rectangle before;  ///< rect(p_1..p_{i-1})
  Rectangle hull;    ///< rect(p_1..p_i)
  Point last;        ///< p_i
  Direction last_direction = Direction::None;

  PinState advanced(Point next, Direction d) const {
    return {hull, hull.extended(next), next, d};
  }
  auto key(int last_position) const {
    return std::make_tuple(before.x_min, before.x_max, before.y_min, before.y_max, hull.x_min,
                           hull.x_max, hull.y_min, hull.y_max, last_position);
  }
};

PinState initial_state(const Permutation& host, int p1, int p2) {
  const Point a = host.point(p1);
  const Point b = host.point(p2);
  return {rect_hull(a), rect_hull(a).extended(b), b, Direction::None};
}

/// Direction in which `p` slices `r`, or None.
Direction slice_direction(Point p, const Rectangle& r) {
  switch (region_of(p, r)) {
    case RegionTag::SliceV: return p.y > r.y_max ? Direction::Up : Direction::Down;
    case RegionTag::SliceH: return p.x > r.x_max ? Direction::Right : Direction::Left;
    default: return Direction::None;
  }
}

/// How far `p` lies in direction d (larger is further).
int reach(Point p, Direction d) {
  switch (d) {
    case Direction::Right: return p.x;
    case Direction::Left: return -p.x;
    case Direction::Up: return p.y;
    case Direction::Down: return -p.y;
    case Direction::None: break;
  }
  return 0;
}

/// Does `c` lie between rect(p_1..p_{i-1}) and p_i, as separation demands?
bool separates(const PinState& s, Point c) {
  switch (s.last_direction) {
    case Direction::Right: return s.before.x_max < c.x && c.x < s.last.x;
    case Direction::Left: return s.last.x < c.x && c.x < s.before.x_min;
    case Direction::Up: return s.before.y_max < c.y && c.y < s.last.y;
    case Direction::Down: return s.last.y < c.y && c.y < s.before.y_min;
    case Direction::None: return true;
  }
  return false;
}

struct Candidate {
  int position;
  Direction direction;
};

/// Valid next pins, sorted by position. At most one per direction: the
/// maximal slicer.
std::vector<Candidate> next_pins(const Permutation& host, const PinState& s) {
  std::array<int, 5> best{};  // indexed by Direction
  for (int pos = 1; pos <= host.size(); ++pos) {
    const Point p = host.point(pos);
    const Direction d = slice_direction(p, s.hull);
    if (d == Direction::None) continue;
    int& slot = best[static_cast<int>(d)];
    if (slot == 0 || reach(p, d) > reach(host.point(slot), d)) slot = pos;
  }
  std::vector<Candidate> out;
  for (Direction d : {Direction::Left, Direction::Right, Direction::Up, Direction::Down}) {
    const int pos = best[static_cast<int>(d)];
    if (pos != 0 && separates(s, host.point(pos))) out.push_back({pos, d});
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.position < b.position; });
  return out;
}

void check_start(const Permutation& host, int p1, int p2) {
  const int n = host.size();
  if (p1 < 1 || p1 > n || p2 < 1 || p2 > n) throw Error(ErrorCode::Param, "pin out of range");
  if (p1 == p2) throw Error(ErrorCode::Param, "p1 and p2 must differ");
}

}  // namespace

std::variant<PinSequence, PinViolation> validate_pin_sequence(const Permutation& host,
                                                              std::span<const int> positions) {
  if (positions.size() < 2) throw Error(ErrorCode::Param, "a pin sequence needs two points");
  std::set<int> seen;
  for (int pos : positions) {
    if (pos < 1 || pos > host.size()) throw Error(ErrorCode::Param, "pin out of range");
    if (!seen.insert(pos).second) throw Error(ErrorCode::Param, "repeated pin");
  }

  PinSequence seq;
  seq.positions.assign(positions.begin(), positions.end());
  seq.directions.assign(positions.size(), Direction::None);
  PinState state = initial_state(host, positions[0], positions[1]);
  for (std::size_t k = 2; k < positions.size(); ++k) {
    const int index = static_cast<int>(k) + 1;
    const Point c = host.point(positions[k]);
    const Direction d = slice_direction(c, state.hull);
    if (d == Direction::None) return PinViolation{PinClause::Slicing, index};
    for (int pos = 1; pos <= host.size(); ++pos) {
      const Point q = host.point(pos);
      if (slice_direction(q, state.hull) == d && reach(q, d) > reach(c, d)) {
        return PinViolation{PinClause::Maximality, index};
      }
    }
    if (!separates(state, c)) return PinViolation{PinClause::Separation, index};
    seq.directions[k] = d;
    state = state.advanced(c, d);
  }
  return seq;
}

std::vector<PinSequence> enumerate_pin_sequences(const Permutation& host, int p1, int p2,
                                                 int max_len) {
  check_start(host, p1, p2);
  std::vector<PinSequence> out;
  if (max_len < 2) return out;
  PinSequence current{{p1, p2}, {Direction::None, Direction::None}};
  out.push_back(current);

  auto dfs = [&](auto&& self, const PinState& state) -> void {
    if (current.size() >= max_len) return;
    for (const Candidate& c : next_pins(host, state)) {
      current.positions.push_back(c.position);
      current.directions.push_back(c.direction);
      out.push_back(current);
      self(self, state.advanced(host.point(c.position), c.direction));
      current.positions.pop_back();
      current.directions.pop_back();
    }
  };
  dfs(dfs, initial_state(host, p1, p2));
  return out;
}

PinSequence right_reaching(const Permutation& host, int p1, int p2) {
  check_start(host, p1, p2);
  const int rightmost = host.size();
  if (p1 == rightmost) throw Error(ErrorCode::Param, "p1 is the rightmost point");
  PinSequence start{{p1, p2}, {Direction::None, Direction::None}};
  if (p2 == rightmost) return start;

  struct Node {
    PinSequence seq;
    PinState state;
  };
  std::deque<Node> queue;
  std::set<decltype(std::declval<PinState>().key(0))> visited;
  const PinState s0 = initial_state(host, p1, p2);
  visited.insert(s0.key(p2));
  queue.push_back({start, s0});
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (const Candidate& c : next_pins(host, node.state)) {
      PinState next = node.state.advanced(host.point(c.position), c.direction);
      if (!visited.insert(next.key(c.position)).second) continue;
      PinSequence seq = node.seq;
      seq.positions.push_back(c.position);
      seq.directions.push_back(c.direction);
      if (c.position == rightmost) return seq;
      queue.push_back({std::move(seq), next});
    }
  }
  throw Error(ErrorCode::NotFound, "no right-reaching pin sequence from (" + std::to_string(p1) +
                                       ", " + std::to_string(p2) + ") in " + host.to_string());
}

int count_turns(const PinSequence& seq) {
  int turns = 0;
  for (int i = 4; i < seq.size(); ++i) {
    if (seq.directions[i] != Direction::None && seq.directions[i] == seq.directions[i - 2]) {
      ++turns;
    }
  }
  return turns;
}

Direction spiral_successor(Direction d, Chirality c) {
  // Clockwise: left, up, right, down.
  static constexpr std::array<Direction, 4> cycle{Direction::Left, Direction::Up,
                                                  Direction::Right, Direction::Down};
  const auto it = std::find(cycle.begin(), cycle.end(), d);
  if (it == cycle.end()) return Direction::None;
  const int i = static_cast<int>(it - cycle.begin());
  return cycle[(c == Chirality::Clockwise ? i + 1 : i + 3) % 4];
}

SpiralClass classify_spiral(const PinSequence& seq) {
  SpiralClass out;
  if (seq.size() < 4) return out;
  const Direction first = seq.directions[2];
  Chirality chirality;
  if (seq.directions[3] == spiral_successor(first, Chirality::Clockwise)) {
    chirality = Chirality::Clockwise;
  } else if (seq.directions[3] == spiral_successor(first, Chirality::Counterclockwise)) {
    chirality = Chirality::Counterclockwise;
  } else {
    return out;
  }
  for (int i = 3; i < seq.size(); ++i) {
    if (seq.directions[i] != spiral_successor(seq.directions[i - 1], chirality)) return out;
  }
  out.spiral = true;
  out.chirality = chirality;
  out.phase = first;
  return out;
}

PinWord parse_pin_word(std::string_view start, std::string_view letters) {
  PinWord word;
  if (start == "12") {
    word.start_increasing = true;
  } else if (start == "21") {
    word.start_increasing = false;
  } else {
    throw Error(ErrorCode::BadWord, "start must be 12 or 21");
  }
  for (char ch : letters) {
    const auto d = direction_from_char(ch);
    if (!d) throw Error(ErrorCode::BadWord, std::string("bad direction letter '") + ch + "'");
    word.directions.push_back(*d);
  }
  return word;
}

std::string to_string(const PinWord& word) {
  std::string out = word.start_increasing ? "12:" : "21:";
  for (Direction d : word.directions) out += to_char(d);
  return out;
}

namespace detail {

void realize_word_into(OrderPlane& plane, const PinWord& word) {
  using Axis = OrderPlane::Axis;
  const int a = plane.add();
  const int b = plane.add();
  plane.push_high(Axis::X, a);
  plane.push_high(Axis::X, b);
  plane.push_high(Axis::Y, word.start_increasing ? a : b);
  plane.push_high(Axis::Y, word.start_increasing ? b : a);

  Direction previous = Direction::None;
  for (Direction d : word.directions) {
    if (d == Direction::None) throw Error(ErrorCode::BadWord, "pins need a direction");
    if (previous != Direction::None && is_horizontal(previous) == is_horizontal(d)) {
      throw Error(ErrorCode::BadWord, "consecutive pins in the same or opposite direction");
    }
    const int id = plane.add();
    const Axis along = is_horizontal(d) ? Axis::X : Axis::Y;
    const Axis across = is_horizontal(d) ? Axis::Y : Axis::X;
    if (d == Direction::Right || d == Direction::Up) {
      plane.push_high(along, id);
    } else {
      plane.push_low(along, id);
    }
    if (previous == Direction::None) {
      // p3 lies strictly between p1 and p2.
      plane.insert_at(across, id, 1);
    } else {
      // Between rect(p1..p_{i-2}) and p_{i-1}: adjacent to p_{i-1}, on its inner side.
      const bool previous_high = previous == Direction::Right || previous == Direction::Up;
      plane.insert_next_to(across, id, id - 1, !previous_high);
    }
    previous = d;
  }
}

}  // namespace detail

RealizedPins realize_pin_word(const PinWord& word) {
  detail::OrderPlane plane;
  detail::realize_word_into(plane, word);
  auto [perm, position] = plane.flatten();
  RealizedPins out{std::move(perm), {}};
  out.sequence.positions = std::move(position);
  out.sequence.directions.assign(out.sequence.positions.size(), Direction::None);
  for (std::size_t k = 0; k < word.directions.size(); ++k) {
    out.sequence.directions[k + 2] = word.directions[k];
  }
  return out;
}

namespace {

bool separated_by(Point z, Point a, Point b) {
  auto strictly_between = [](int v, int lo, int hi) {
    return std::min(lo, hi) < v && v < std::max(lo, hi);
  };
  return strictly_between(z.x, a.x, b.x) || strictly_between(z.y, a.y, b.y);
}

}  // namespace

PinProperties check_pinseq_properties(const Permutation& host, const PinSequence& seq) {
  PinProperties props;
  const int m = seq.size();
  std::vector<Point> pts;
  for (int pos : seq.positions) pts.push_back(host.point(pos));

  // Using 1-based pin indices i as in the statements.
  auto pin = [&](int i) { return pts[i - 1]; };
  auto dir = [&](int i) { return seq.directions[i - 1]; };

  for (int i = 3; i + 1 <= m; ++i) {
    if (is_horizontal(dir(i)) == is_horizontal(dir(i + 1))) props.no_parallel_successor = false;
  }
  for (int i = 2; i + 1 <= m; ++i) {
    const Rectangle r = rect_hull(std::span<const Point>(pts.data(), i - 1));
    if (slices(pin(i + 1), r)) props.successor_avoids_hull = false;
  }
  for (int i = 3; i + 1 <= m; ++i) {
    bool by_previous = separated_by(pin(i - 1), pin(i), pin(i + 1));
    bool by_all_earlier = true;
    for (int j = 1; j <= i - 2; ++j) {
      if (!separated_by(pin(j), pin(i), pin(i + 1))) by_all_earlier = false;
    }
    if (!by_previous && !by_all_earlier) props.consecutive_separated = false;
  }

  auto simple_without = [&](int skip) {
    std::vector<int> positions;
    for (int i = 1; i <= m; ++i) {
      if (i != skip) positions.push_back(seq.positions[i - 1]);
    }
    std::sort(positions.begin(), positions.end());
    return is_simple(host.pattern_at(positions));
  };
  props.simple_core = simple_without(0) || simple_without(1) || simple_without(2);
  return props;
}

}  // namespace permgrid
