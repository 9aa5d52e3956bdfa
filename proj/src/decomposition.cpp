#include "permwreath/decomposition.hpp"

#include <algorithm>

#include "permwreath/pattern.hpp"

namespace permwreath {

std::string_view to_string(Decomposability d) {
  switch (d) {
    case Decomposability::sum:
      return "sum-decomposable";
    case Decomposability::skew:
      return "skew-decomposable";
    case Decomposability::neither:
      return "indecomposable-both";
  }
  return "?";
}

bool is_simple(const Permutation& pi) {
  const int n = pi.size();
  for (const Segment& s : intervals(pi)) {
    if (s.length() > 1 && s.length() < n) return false;
  }
  return true;
}

std::vector<Segment> sum_components(const Permutation& pi) {
  // A sum split after position k exists iff the first k values are 1..k.
  std::vector<Segment> out;
  int start = 1, running_max = 0;
  for (int k = 1; k <= pi.size(); ++k) {
    running_max = std::max(running_max, pi.at(k));
    if (running_max == k) {
      out.push_back({start, k});
      start = k + 1;
    }
  }
  return out;
}

std::vector<Segment> skew_components(const Permutation& pi) {
  // Split after k iff the first k values are the top k.
  const int n = pi.size();
  std::vector<Segment> out;
  int start = 1, running_min = n + 1;
  for (int k = 1; k <= n; ++k) {
    running_min = std::min(running_min, pi.at(k));
    if (running_min == n - k + 1) {
      out.push_back({start, k});
      start = k + 1;
    }
  }
  return out;
}

Decomposability sum_skew_status(const Permutation& pi) {
  if (pi.size() < 2) {
    throw InvalidArgument("sum/skew status needs length >= 2");
  }
  if (sum_components(pi).size() > 1) return Decomposability::sum;
  if (skew_components(pi).size() > 1) return Decomposability::skew;
  return Decomposability::neither;
}

namespace {

SubstitutionDecomposition from_segments(const Permutation& pi,
                                        std::vector<Segment> segments) {
  SubstitutionDecomposition d;
  std::vector<int> representatives;
  for (const Segment& s : segments) {
    d.block_patterns.push_back(pattern_of(pi, s));
    representatives.push_back(pi.at(s.start));
  }
  d.skeleton = reduce(representatives);
  d.block_segments = std::move(segments);
  return d;
}

}  // namespace

SubstitutionDecomposition substitution_decomposition(const Permutation& pi) {
  const int n = pi.size();
  if (n == 0) throw InvalidArgument("empty permutation has no decomposition");
  if (n == 1) return {Permutation{1}, {{1, 1}}, {Permutation{1}}};

  if (auto sum = sum_components(pi); sum.size() > 1) {
    return from_segments(pi, std::move(sum));
  }
  if (auto skew = skew_components(pi); skew.size() > 1) {
    return from_segments(pi, std::move(skew));
  }

  // Neither sum nor skew decomposable: the maximal proper intervals are
  // pairwise disjoint and cover pi.
  std::vector<Segment> proper;
  for (const Segment& s : intervals(pi)) {
    if (s.length() < n) proper.push_back(s);
  }
  std::vector<Segment> maximal;
  for (const Segment& s : proper) {
    const bool contained = std::any_of(proper.begin(), proper.end(), [&](const Segment& t) {
      return t != s && t.start <= s.start && s.end <= t.end;
    });
    if (!contained) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return from_segments(pi, std::move(maximal));
}

Permutation skeleton(const Permutation& pi) {
  // 12...t or t...21 deflates further to 12 or 21.
  if (pi.size() >= 2) {
    switch (sum_skew_status(pi)) {
      case Decomposability::sum:
        return Permutation{1, 2};
      case Decomposability::skew:
        return Permutation{2, 1};
      case Decomposability::neither:
        break;
    }
  }
  return substitution_decomposition(pi).skeleton;
}

}  // namespace permwreath
