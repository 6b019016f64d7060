#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permgrid/geometry.hpp"
#include "permgrid/permutation.hpp"
#include "permgrid/symmetry.hpp"

namespace permgrid {

enum class Direction { None, Left, Right, Up, Down };

std::string_view to_string(Direction d);
/// 'L', 'R', 'U', 'D', or '-' for None.
char to_char(Direction d);
std::optional<Direction> direction_from_char(char c);

std::array<int, 2> unit_vector(Direction d);
Direction direction_from_vector(int dx, int dy);
Direction transform(Direction d, const Symmetry& g);
Direction opposite(Direction d);
bool is_horizontal(Direction d);

/// A pin sequence inside a host permutation. Pins are identified by host
/// position; the first two pins carry Direction::None.
struct PinSequence {
  std::vector<int> positions;
  std::vector<Direction> directions;

  int size() const { return static_cast<int>(positions.size()); }
  friend bool operator==(const PinSequence&, const PinSequence&) = default;
};

enum class PinClause { Slicing, Maximality, Separation };

std::string_view to_string(PinClause clause);

/// First violated clause of a candidate pin sequence. `index` is the
/// 1-based index of the offending pin.
struct PinViolation {
  PinClause clause;
  int index;
};

/// Checks slicing, maximality and separation for every pin and assigns
/// directions. Throws Error(PARAM) for fewer than two pins or repeated or
/// out-of-range positions.
std::variant<PinSequence, PinViolation> validate_pin_sequence(const Permutation& host,
                                                              std::span<const int> positions);

/// Every proper pin sequence of length 2..max_len starting with (p1, p2),
/// in depth-first order.
std::vector<PinSequence> enumerate_pin_sequences(const Permutation& host, int p1, int p2,
                                                 int max_len);

/// Shortest proper pin sequence from (p1, p2) ending at the rightmost point;
/// ties broken lexicographically on pin positions. Throws Error(NOT_FOUND)
/// if none exists and Error(PARAM) if p1 is the rightmost point.
PinSequence right_reaching(const Permutation& host, int p1, int p2);

/// Number of pins p_i (i >= 5) whose direction equals that of p_{i-2}.
int count_turns(const PinSequence& seq);

enum class Chirality { Clockwise, Counterclockwise };

std::string_view to_string(Chirality c);

struct SpiralClass {
  bool spiral = false;
  Chirality chirality = Chirality::Clockwise;
  /// Direction of p_3.
  Direction phase = Direction::None;
};

/// A turn-free sequence with at least two directed pins cycles through
/// left, up, right, down (clockwise) or left, down, right, up.
SpiralClass classify_spiral(const PinSequence& seq);

/// Direction that follows `d` in a spiral of the given chirality.
Direction spiral_successor(Direction d, Chirality c);

struct PinWord {
  /// Pattern of (p1, p2) with p1 the left point: 12 or 21.
  bool start_increasing = false;
  std::vector<Direction> directions;
};

/// Parses "12"/"21" and a string over {L, R, U, D}. Throws Error(BAD_WORD).
PinWord parse_pin_word(std::string_view start, std::string_view letters);
std::string to_string(const PinWord& word);

struct RealizedPins {
  Permutation perm;
  PinSequence sequence;
};

/// Places every pin just beyond the hull of its predecessors, on the side
/// of the previous pin that the separation clause requires, and flattens.
/// Throws Error(BAD_WORD) when consecutive directions are equal or opposite.
RealizedPins realize_pin_word(const PinWord& word);

struct PinProperties {
  bool no_parallel_successor = true;   ///< (a)
  bool successor_avoids_hull = true;   ///< (b)
  bool consecutive_separated = true;   ///< (c)
  bool simple_core = true;             ///< (d)

  bool all() const {
    return no_parallel_successor && successor_avoids_hull && consecutive_separated &&
           simple_core;
  }
};

/// Evaluates the four structural properties every proper pin sequence has.
PinProperties check_pinseq_properties(const Permutation& host, const PinSequence& seq);

}  // namespace permgrid
