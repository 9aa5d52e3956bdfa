#include "permwreath/pattern.hpp"

#include <algorithm>
#include <limits>

namespace permwreath {

PatternMatcher::PatternMatcher(const Permutation& pattern)
    : pattern_(pattern),
      below_(pattern.size(), -1),
      above_(pattern.size(), -1) {
  const int k = pattern.size();
  for (int t = 0; t < k; ++t) {
    int lo = 0, hi = std::numeric_limits<int>::max();
    for (int s = 0; s < t; ++s) {
      const int v = pattern[s];
      if (v < pattern[t] && v > lo) {
        lo = v;
        below_[t] = s;
      }
      if (v > pattern[t] && v < hi) {
        hi = v;
        above_[t] = s;
      }
    }
  }
}

template <typename Visit>
bool PatternMatcher::search(const Permutation& text, Visit&& visit) const {
  const int k = pattern_.size();
  const int n = text.size();
  if (k == 0) return visit(std::span<const int>());
  if (k > n) return true;

  std::vector<int> pos(k, 0);     // 0-based text index chosen for entry t
  std::vector<int> cursor(k, 0);  // next text index to try for entry t
  std::vector<int> out(k, 0);
  int t = 0;
  cursor[0] = 0;
  while (t >= 0) {
    const int lo = below_[t] < 0 ? 0 : text[pos[below_[t]]];
    const int hi = above_[t] < 0 ? n + 1 : text[pos[above_[t]]];
    const int last = n - (k - t);  // leave room for the remaining entries
    int i = cursor[t];
    while (i <= last && !(text[i] > lo && text[i] < hi)) ++i;
    if (i > last) {
      --t;
      continue;
    }
    pos[t] = i;
    cursor[t] = i + 1;
    if (t + 1 == k) {
      for (int s = 0; s < k; ++s) out[s] = pos[s] + 1;
      if (!visit(std::span<const int>(out))) return false;
    } else {
      ++t;
      cursor[t] = i + 1;
    }
  }
  return true;
}

bool PatternMatcher::occurs_in(const Permutation& text) const {
  bool found = false;
  search(text, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t PatternMatcher::count_in(const Permutation& text) const {
  std::uint64_t count = 0;
  search(text, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

void PatternMatcher::for_each(
    const Permutation& text,
    const std::function<bool(std::span<const int>)>& visit) const {
  search(text, [&](std::span<const int> positions) { return visit(positions); });
}

std::optional<std::vector<int>> PatternMatcher::first_in(
    const Permutation& text) const {
  std::optional<std::vector<int>> hit;
  search(text, [&](std::span<const int> positions) {
    hit.emplace(positions.begin(), positions.end());
    return false;
  });
  return hit;
}

bool involves(const Permutation& pattern, const Permutation& text) {
  if (pattern.size() > text.size()) return false;
  return PatternMatcher(pattern).occurs_in(text);
}

std::uint64_t occurrences(const Permutation& pattern, const Permutation& text) {
  if (pattern.size() > text.size()) return 0;
  return PatternMatcher(pattern).count_in(text);
}

Permutation inflate(const Permutation& pi, std::span<const Permutation> blocks) {
  const int n = pi.size();
  if (static_cast<int>(blocks.size()) != n) {
    throw InvalidArgument("inflate needs " + std::to_string(n) +
                          " blocks, got " + std::to_string(blocks.size()));
  }
  // offset[v] = total size of the blocks sitting at host values below v
  std::vector<int> size_at_value(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (blocks[i].empty()) throw InvalidArgument("inflate: empty block");
    size_at_value[pi[i]] = blocks[i].size();
  }
  std::vector<int> offset(n + 1, 0);
  for (int v = 2; v <= n; ++v) offset[v] = offset[v - 1] + size_at_value[v - 1];

  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    for (int x : blocks[i].values()) out.push_back(offset[pi[i]] + x);
  }
  return Permutation(std::move(out));
}

Segment value_range(const Permutation& pi, Segment positions) {
  auto vals = pi.values().subspan(positions.start - 1, positions.length());
  auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
  return {*lo, *hi};
}

bool is_interval(const Permutation& pi, Segment segment) {
  if (segment.start < 1 || segment.end > pi.size() || segment.start > segment.end) {
    return false;
  }
  const Segment v = value_range(pi, segment);
  return v.end - v.start == segment.end - segment.start;
}

std::vector<Segment> intervals(const Permutation& pi) {
  std::vector<Segment> out;
  const int n = pi.size();
  for (int s = 0; s < n; ++s) {
    int lo = pi[s], hi = pi[s];
    for (int e = s; e < n; ++e) {
      lo = std::min(lo, pi[e]);
      hi = std::max(hi, pi[e]);
      if (hi - lo == e - s) out.push_back({s + 1, e + 1});
    }
  }
  return out;
}

}  // namespace permwreath
