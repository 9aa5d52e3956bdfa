#pragma once

#include <set>
#include <vector>

#include "permwreath/avoidance.hpp"
#include "permwreath/permutation.hpp"

namespace permwreath {

/// host = profile[block_patterns...], where each block is the segment of host
/// positions in `segments` and every block pattern lies in Y.
struct ProfileDecomposition {
  Permutation profile;
  std::vector<Segment> segments;
  std::vector<Permutation> block_patterns;
};

/// Scans left to right, taking at each step the longest interval starting at
/// the current position whose pattern lies in Y. The result is the shortest
/// Y-deflation of pi.
ProfileDecomposition left_greedy_profile(const Permutation& pi, const PermClass& y);

/// pi is in X wr Y iff its Y-profile lies in X.
bool wreath_member(const Permutation& pi, const PermClass& x, const PermClass& y);

/// Largest pi accepted by all_y_deflations.
inline constexpr int kDeflationOracleCap = 10;

/// Every Y-deflation of pi, by brute force over all 2^(n-1) splits of pi into
/// consecutive segments that are intervals with patterns in Y.
std::set<Permutation> all_y_deflations(const Permutation& pi, const PermClass& y,
                                       int cap = kDeflationOracleCap);

/// Checks the ProfileDecomposition invariants of `candidate` against pi and Y.
bool is_y_deflation(const Permutation& pi, const ProfileDecomposition& candidate,
                    const PermClass& y);

/// Build a decomposition record from a segmentation of pi (no validation).
ProfileDecomposition decomposition_from_segments(const Permutation& pi,
                                                 std::vector<Segment> segments);

}  // namespace permwreath
