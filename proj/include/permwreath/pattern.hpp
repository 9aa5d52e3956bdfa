#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permwreath/permutation.hpp"

namespace permwreath {

/// Pattern matcher for a fixed pattern, reusable across many texts.
///
/// Backtracks over text positions left to right. Each pattern entry is
/// constrained to the open value window between the already-matched entries
/// that are its nearest neighbours in value, and to the positions that still
/// leave room for the rest of the pattern.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Permutation& pattern);

  const Permutation& pattern() const { return pattern_; }

  bool occurs_in(const Permutation& text) const;
  std::uint64_t count_in(const Permutation& text) const;
  /// Calls `visit` with the 1-based positions of every occurrence, in
  /// lexicographic order of the position tuples. Returning false stops early.
  void for_each(const Permutation& text,
                const std::function<bool(std::span<const int>)>& visit) const;
  std::optional<std::vector<int>> first_in(const Permutation& text) const;

 private:
  template <typename Visit>
  bool search(const Permutation& text, Visit&& visit) const;

  Permutation pattern_;
  // For entry t: index of the matched entry (< t) just below / above it in
  // value, or -1 when there is none.
  std::vector<int> below_;
  std::vector<int> above_;
};

/// True iff some subsequence of `text` is order isomorphic to `pattern`.
bool involves(const Permutation& pattern, const Permutation& text);

/// Number of index-increasing subsequences of `text` order isomorphic to
/// `pattern`.
std::uint64_t occurrences(const Permutation& pattern, const Permutation& text);

/// pi[blocks[0], ..., blocks[n-1]]. Throws InvalidArgument on a count mismatch
/// or an empty block.
Permutation inflate(const Permutation& pi, std::span<const Permutation> blocks);
inline Permutation inflate(const Permutation& pi,
                           const std::vector<Permutation>& blocks) {
  return inflate(pi, std::span<const Permutation>(blocks));
}

/// Whether the positions in `segment` carry a contiguous set of values.
bool is_interval(const Permutation& pi, Segment segment);

/// Every interval of pi (singletons and the whole included), sorted by
/// (start, end).
std::vector<Segment> intervals(const Permutation& pi);

/// Value range [min, max] carried by a segment of positions.
Segment value_range(const Permutation& pi, Segment positions);

}  // namespace permwreath
