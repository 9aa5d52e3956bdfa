#include "permwreath/profile.hpp"

#include <algorithm>

#include "permwreath/pattern.hpp"

namespace permwreath {

ProfileDecomposition decomposition_from_segments(const Permutation& pi,
                                                 std::vector<Segment> segments) {
  ProfileDecomposition d;
  std::vector<int> representatives;
  representatives.reserve(segments.size());
  for (const Segment& s : segments) {
    representatives.push_back(pi.at(s.start));
    d.block_patterns.push_back(pattern_of(pi, s));
  }
  d.profile = reduce(representatives);
  d.segments = std::move(segments);
  return d;
}

ProfileDecomposition left_greedy_profile(const Permutation& pi, const PermClass& y) {
  const int n = pi.size();
  if (n == 0) throw InvalidArgument("profile of the empty permutation");
  std::vector<Segment> segments;
  int start = 1;
  while (start <= n) {
    int best = start;
    for (int end = n; end > start; --end) {
      const Segment s{start, end};
      if (is_interval(pi, s) && y.contains(pattern_of(pi, s))) {
        best = end;
        break;
      }
    }
    segments.push_back({start, best});
    start = best + 1;
  }
  return decomposition_from_segments(pi, std::move(segments));
}

bool wreath_member(const Permutation& pi, const PermClass& x, const PermClass& y) {
  if (pi.empty()) return true;
  return x.contains(left_greedy_profile(pi, y).profile);
}

std::set<Permutation> all_y_deflations(const Permutation& pi, const PermClass& y,
                                       int cap) {
  const int n = pi.size();
  if (n == 0) throw InvalidArgument("deflations of the empty permutation");
  if (n > cap) {
    throw LimitExceeded("deflation oracle limited to length " +
                        std::to_string(cap));
  }
  // ok[s][e]: positions s..e (0-based) form an interval whose pattern is in Y.
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    for (int e = s; e < n; ++e) {
      const Segment seg{s + 1, e + 1};
      ok[s][e] = is_interval(pi, seg) && y.contains(pattern_of(pi, seg));
    }
  }
  std::set<Permutation> out;
  // Bit b of mask set means "cut after position b+1".
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> reps;
    int s = 0;
    bool valid = true;
    for (int e = 0; e < n && valid; ++e) {
      if (e == n - 1 || (mask >> e) & 1u) {
        valid = ok[s][e];
        reps.push_back(pi[s]);
        s = e + 1;
      }
    }
    if (valid) out.insert(reduce(reps));
  }
  return out;
}

bool is_y_deflation(const Permutation& pi, const ProfileDecomposition& candidate,
                    const PermClass& y) {
  const auto& segs = candidate.segments;
  if (segs.empty() || segs.size() != candidate.block_patterns.size() ||
      static_cast<int>(segs.size()) != candidate.profile.size()) {
    return false;
  }
  int expected_start = 1;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    if (s.start != expected_start || s.end < s.start || s.end > pi.size()) return false;
    if (!is_interval(pi, s)) return false;
    if (pattern_of(pi, s) != candidate.block_patterns[i]) return false;
    if (!y.contains(candidate.block_patterns[i])) return false;
    expected_start = s.end + 1;
  }
  if (expected_start != pi.size() + 1) return false;
  return inflate(candidate.profile, candidate.block_patterns) == pi;
}

}  // namespace permwreath
