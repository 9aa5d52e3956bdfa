#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permwreath/avoidance.hpp"
#include "permwreath/permutation.hpp"

namespace permwreath {

enum class PinDirection { left, right, up, down };

char to_char(PinDirection d);
PinDirection direction_from_char(char c);
inline bool is_horizontal(PinDirection d) {
  return d == PinDirection::left || d == PinDirection::right;
}
inline bool perpendicular(PinDirection a, PinDirection b) {
  return is_horizontal(a) != is_horizontal(b);
}

/// Smallest axis-parallel rectangle around a set of points.
struct Rect {
  int left = 0, right = 0, bottom = 0, top = 0;

  static Rect around(std::span<const Point> points);
  bool contains(Point p) const {
    return left <= p.position && p.position <= right && bottom <= p.value &&
           p.value <= top;
  }
};

/// Direction in which q slices r: strictly inside r's value range and beyond
/// it horizontally (left/right pin), or strictly inside its position range and
/// beyond it vertically (up/down pin). nullopt if q is inside r or does not
/// slice it.
std::optional<PinDirection> slice_direction(Point q, const Rect& r);

/// Whether q lies strictly between `previous` and `before` in the coordinate
/// along which `previous` left `before`.
bool separates(Point q, Point previous, const Rect& before);

/// Classification of one pin p_i, i >= 3.
struct Pin {
  Point point;
  PinDirection direction = PinDirection::right;
  /// Extremal in its direction among the host points that slice the same
  /// rectangle the same way and (from p_4 on) separate p_{i-1}.
  bool maximal = false;
  /// p_i lies between p_{i-1} and rect(p_1..p_{i-2}); always true for p_3.
  bool separating = false;

  bool proper() const { return maximal && separating; }
};

struct PinSequence {
  Permutation host;
  std::vector<Point> points;  // p_1, p_2, ...
  std::vector<Pin> pins;      // classifications of points[2..]

  bool all_proper() const;
  std::vector<PinDirection> directions() const;
};

/// Raised when a listed point violates the pin conditions.
class PinConditionError : public InvalidArgument {
 public:
  PinConditionError(int index, std::string condition);
  int index() const { return index_; }  // 1-based pin index
  const std::string& condition() const { return condition_; }

 private:
  int index_;
  std::string condition_;
};

/// Validates the pin conditions for p_3, p_4, ... and assigns directions and
/// properness. Throws InvalidArgument for a point not in the host and
/// PinConditionError for a violated pin condition.
PinSequence classify_pins(const Permutation& host, std::span<const Point> points);

/// Points of a proper pin sequence are fixed by the start pair and the
/// directions. Serialized as "12:URUR" or "21:LDRU".
struct PinWord {
  bool increasing_origin = true;  // p_1, p_2 form 12 (true) or 21 (false)
  std::string letters;            // over L, R, U, D; consecutive perpendicular

  /// Throws InvalidArgument on a malformed word.
  static PinWord parse(std::string_view text);
  std::string to_string() const;
  void validate() const;

  friend bool operator==(const PinWord&, const PinWord&) = default;
};

/// Realizes a pin word as a permutation: p_1, p_2 per the origin, then each
/// pin placed just past the previous pin (separating it from the earlier
/// rectangle) and beyond every existing point in its direction.
Permutation pin_word_to_perm(const PinWord& word);

/// Saturated sequence inside mb(pi; i, j) starting from (i, pi(i)),
/// (j, pi(j)): each step adds the extremal slicing point, trying directions in
/// the order R, U, L, D. Ends once the rectangle covers the minimal block.
std::vector<Point> saturated_pin_sequence(const Permutation& pi, int i, int j);

/// Proper pin sequence from p_1 = (i, pi(i)), p_2 = (j, pi(j)) reaching the
/// rightmost point of mb(pi; i, j). Extracted backwards from a saturated
/// sequence; falls back to right_reaching_search if the extraction does not
/// validate.
PinSequence right_reaching(const Permutation& pi, int i, int j);
/// Mirror image: reaches the leftmost point of the minimal block.
PinSequence left_reaching(const Permutation& pi, int i, int j);

/// Exhaustive depth-first search over proper pin sequences for a
/// right-reaching one. nullopt if none exists.
std::optional<PinSequence> right_reaching_search(const Permutation& pi, int i, int j);

struct PinProbeResult {
  bool exceeded = false;
  /// When not exceeded: every proper pin word with n letters realizes a
  /// permutation outside Y.
  int n = 0;
  /// When exceeded: the words with `cap` letters still realizing members of Y.
  std::vector<PinWord> survivors;
};

/// Breadth-first search over proper pin words from both origins, dropping a
/// word (and so all its extensions) once it realizes a permutation outside Y.
PinProbeResult pin_probe(const PermClass& y, int cap, int jobs = 1);

}  // namespace permwreath
