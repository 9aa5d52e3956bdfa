#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "permwreath/avoidance.hpp"
#include "permwreath/permutation.hpp"

namespace permwreath {

/// A minimal permutation outside X wr Y.
struct BasisRecord {
  Permutation perm;
  std::vector<Permutation> x_basis;
  std::vector<Permutation> y_basis;
  int length = 0;
  std::string discovered_at;  // ISO-8601 UTC
};

/// Default cap on the basis search length.
inline constexpr int kBasisSearchCap = 11;

struct BasisSearchOptions {
  int max_len = 8;
  int cap = kBasisSearchCap;
  int jobs = 1;
  /// Lengths <= skip_through are treated as already done: nothing is reported
  /// for them (resume support).
  int skip_through = 0;
  /// Called once per finished length with that length's records, in order.
  std::function<void(int length, const std::vector<BasisRecord>&)> on_length_done;
};

/// All basis elements of X wr Y up to max_len, sorted by (length, lex).
///
/// Each length walks S_n lexicographically. A permutation is tested for
/// membership only once all its one-point deletions are known members, so the
/// members of length n are collected along the way for the next length.
std::vector<BasisRecord> wreath_basis(const PermClass& x, const PermClass& y,
                                      const BasisSearchOptions& options);
std::vector<BasisRecord> wreath_basis(const PermClass& x, const PermClass& y,
                                      int max_len);

struct BasisVerdict {
  bool is_basis_element = false;
  /// pi itself already lies in X wr Y.
  bool pi_is_member = false;
  /// Otherwise, the first deletion found outside X wr Y.
  std::optional<int> deleted_position;
  std::optional<Permutation> witness;

  explicit operator bool() const { return is_basis_element; }
};

/// pi is not in X wr Y but every one-point deletion is.
BasisVerdict verify_basis_element(const Permutation& pi, const PermClass& x,
                                  const PermClass& y);

/// The first comparable pair (by index) under involvement, if any.
std::optional<std::pair<std::size_t, std::size_t>> comparable_pair(
    std::span<const Permutation> perms);
/// True iff the permutations are pairwise incomparable.
bool check_antichain(std::span<const Permutation> perms);

std::string utc_timestamp();

}  // namespace permwreath
