#include "permwreath/minimal_block.hpp"

#include <algorithm>

#include "permwreath/pattern.hpp"

namespace permwreath {

namespace {

void check_pair(const Permutation& pi, int i, int j) {
  if (i < 1 || j > pi.size() || i >= j) {
    throw InvalidArgument("minimal block needs 1 <= i < j <= " +
                          std::to_string(pi.size()) + ", got (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
  }
}

MinimalBlock make_block(const Permutation& pi, Segment positions) {
  return {pi, positions, value_range(pi, positions), pattern_of(pi, positions)};
}

}  // namespace

MinimalBlock minimal_block(const Permutation& pi, int i, int j) {
  check_pair(pi, i, j);
  const Permutation inv = pi.inverse();
  Segment pos{i, j};
  while (true) {
    const Segment vals = value_range(pi, pos);
    Segment grown = pos;
    for (int v = vals.start; v <= vals.end; ++v) {
      const int p = inv.at(v);
      grown.start = std::min(grown.start, p);
      grown.end = std::max(grown.end, p);
    }
    if (grown == pos) return make_block(pi, pos);
    pos = grown;
  }
}

MinimalBlock minimal_block_stepwise(const Permutation& pi, int i, int j) {
  check_pair(pi, i, j);
  const Permutation inv = pi.inverse();
  Segment pos{i, j};
  Segment vals{std::min(pi.at(i), pi.at(j)), std::max(pi.at(i), pi.at(j))};
  // Alternate: pull in one missing position, then one missing value.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = pos.start; p <= pos.end; ++p) {
      const int v = pi.at(p);
      if (!vals.contains(v)) {
        vals.start = std::min(vals.start, v);
        vals.end = std::max(vals.end, v);
        changed = true;
        break;
      }
    }
    for (int v = vals.start; v <= vals.end; ++v) {
      const int p = inv.at(v);
      if (!pos.contains(p)) {
        pos.start = std::min(pos.start, p);
        pos.end = std::max(pos.end, p);
        changed = true;
        break;
      }
    }
  }
  return make_block(pi, pos);
}

}  // namespace permwreath
