#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permwreath/errors.hpp"

namespace permwreath {

/// Hard cap on permutation length, enforced on construction and parsing.
/// Defaults to 64; raise it for exploratory runs that need longer inputs.
std::size_t max_length();
void set_max_length(std::size_t cap);

/// Closed range of 1-based positions (or values), start <= end.
struct Segment {
  int start = 0;
  int end = 0;

  int length() const { return end - start + 1; }
  bool contains(int x) const { return start <= x && x <= end; }
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// A point of a permutation plot: (position, value), both 1-based.
struct Point {
  int position = 0;
  int value = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A permutation of {1..n} in one-line notation.
///
/// Values are immutable once constructed. Positions in the public API are
/// 1-based to match the usual one-line notation; `operator[]` is the raw
/// 0-based accessor for tight loops.
class Permutation {
 public:
  /// The empty permutation. Only produced internally (e.g. deleting the single
  /// point of `1`); parsing never yields it.
  Permutation() = default;

  /// Validates that `values` is a permutation of {1..n} within the length cap.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t index) const { return values_[index]; }
  /// Value at a 1-based position.
  int at(int position) const;
  std::span<const int> values() const { return values_; }
  Point point(int position) const { return {position, at(position)}; }

  Permutation inverse() const;
  Permutation reverse() const;
  Permutation complement() const;
  Permutation reverse_complement() const;

  /// Pattern left after deleting the entry at a 1-based position.
  Permutation without_position(int position) const;

  /// Canonical text form: space-separated ranks.
  std::string to_string() const;
  /// Digits with no separator when n <= 9, otherwise the canonical form.
  std::string to_compact_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Orders by length first, then lexicographically.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation reduce(std::span<const int> sequence);

  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// The permutation order isomorphic to a sequence of distinct integers.
/// Throws InvalidArgument on duplicates or empty input.
Permutation reduce(std::span<const int> sequence);
inline Permutation reduce(const std::vector<int>& sequence) {
  return reduce(std::span<const int>(sequence));
}

/// Pattern of the entries at the given 1-based positions (in the order given).
Permutation pattern_at(const Permutation& p, std::span<const int> positions);
/// Pattern of the contiguous positions inside a segment.
Permutation pattern_of(const Permutation& p, Segment positions);

/// Parses integers separated by commas and/or whitespace. A single token made
/// of two or more digits with no separators is read digit by digit, so
/// "2513764" and "2,5,1,3,7,6,4" are the same sequence.
std::vector<int> parse_sequence(std::string_view text);
/// parse_sequence followed by validation as a permutation of {1..n}.
Permutation parse_permutation(std::string_view text);

/// Packs permutations of length <= 16 into a 64-bit key (4 bits per entry).
std::uint64_t pack(const Permutation& p);

}  // namespace permwreath

template <>
struct std::hash<permwreath::Permutation> {
  std::size_t operator()(const permwreath::Permutation& p) const noexcept;
};
