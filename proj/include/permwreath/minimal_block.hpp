#pragma once

#include "permwreath/permutation.hpp"

namespace permwreath {

/// The smallest interval of `host` containing two given positions.
struct MinimalBlock {
  Permutation host;
  Segment positions;
  Segment values;
  Permutation pattern;

  bool contains_position(int p) const { return positions.contains(p); }
  bool contains(const MinimalBlock& other) const {
    return positions.start <= other.positions.start &&
           other.positions.end <= positions.end;
  }
};

/// mb(pi; i, j) for 1 <= i < j <= n, by closure: widen the position range to
/// cover every point whose value lies in the current value range, recompute the
/// value range, and repeat until stable.
MinimalBlock minimal_block(const Permutation& pi, int i, int j);

/// Same closure, but alternating strictly between a value-driven and a
/// position-driven widening one point at a time. Exposed so tests can check
/// that the result does not depend on the expansion schedule.
MinimalBlock minimal_block_stepwise(const Permutation& pi, int i, int j);

}  // namespace permwreath
