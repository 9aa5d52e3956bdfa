#pragma once

#include <string_view>
#include <vector>

#include "permwreath/permutation.hpp"

namespace permwreath {

/// pi = skeleton[blocks...], with the skeleton simple.
///
/// For sum (skew) decomposable pi the skeleton is 12...t (t...21) and the
/// blocks are the maximal sum (skew) indecomposable components, so t >= 2 and
/// the skeleton itself is only simple when t = 2. Otherwise the skeleton has
/// length >= 4 (or pi has length 1) and the decomposition is unique.
struct SubstitutionDecomposition {
  Permutation skeleton;
  std::vector<Segment> block_segments;
  std::vector<Permutation> block_patterns;
};

enum class Decomposability { sum, skew, neither };

std::string_view to_string(Decomposability d);

bool is_simple(const Permutation& pi);

SubstitutionDecomposition substitution_decomposition(const Permutation& pi);

/// The simple permutation at the root of the substitution decomposition: 12
/// or 21 for sum/skew decomposable pi.
Permutation skeleton(const Permutation& pi);

/// Requires |pi| >= 2.
Decomposability sum_skew_status(const Permutation& pi);

/// Maximal splits into sum (skew) indecomposable components; a single
/// segment when pi is sum (skew) indecomposable.
std::vector<Segment> sum_components(const Permutation& pi);
std::vector<Segment> skew_components(const Permutation& pi);

}  // namespace permwreath
