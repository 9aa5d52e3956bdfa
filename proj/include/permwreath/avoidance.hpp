#pragma once

#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permwreath/pattern.hpp"
#include "permwreath/permutation.hpp"

namespace permwreath {

/// Bounded LRU map from permutation to membership verdict. Split into
/// independently locked shards so concurrent workers rarely contend.
class MembershipCache {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;

  explicit MembershipCache(std::size_t capacity = kDefaultCapacity);

  std::optional<bool> find(const Permutation& p);
  void insert(const Permutation& p, bool verdict);
  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    using Order = std::list<Permutation>;
    mutable std::mutex mutex;
    Order order;  // most recently used first
    std::unordered_map<Permutation, std::pair<bool, Order::iterator>> entries;
  };
  Shard& shard_for(const Permutation& p);

  std::size_t capacity_;
  std::size_t per_shard_;
  std::unique_ptr<Shard[]> shards_;
};

/// Result of normalizing a candidate basis to an antichain.
struct NormalizedBasis {
  std::vector<Permutation> basis;    // sorted by (length, lex)
  std::vector<Permutation> dropped;  // duplicates or elements involving another
};

NormalizedBasis normalize_basis(std::vector<Permutation> candidates);

/// Av(B): the permutations avoiding every element of a finite basis B.
///
/// The basis is normalized to an antichain on construction; anything dropped
/// is reported through `dropped()` rather than rejected. Copies share one
/// membership cache.
class PermClass {
 public:
  explicit PermClass(std::vector<Permutation> basis, std::string name = {},
                     std::size_t cache_capacity = MembershipCache::kDefaultCapacity);

  const std::vector<Permutation>& basis() const { return basis_; }
  const std::vector<Permutation>& dropped() const { return dropped_; }
  const std::string& name() const { return name_; }
  /// "av(25134)", "av(3412,2413)"; multi-digit entries use brackets.
  std::string literal() const;
  /// Longest basis element (0 for the empty basis).
  int max_basis_length() const;

  bool contains(const Permutation& pi) const;
  /// The first basis element involved in pi, if any.
  std::optional<Permutation> violated_by(const Permutation& pi) const;

  const MembershipCache& cache() const { return *cache_; }

 private:
  std::vector<Permutation> basis_;
  std::vector<Permutation> dropped_;
  std::vector<PatternMatcher> matchers_;
  std::string name_;
  std::shared_ptr<MembershipCache> cache_;
};

inline bool member(const Permutation& pi, const PermClass& c) {
  return c.contains(pi);
}

/// Default cap on enumeration length.
inline constexpr int kEnumerationCap = 10;

/// Members of length n in lexicographic order. Walks prefixes depth-first and
/// abandons any prefix whose pattern already lies outside the class.
std::vector<Permutation> enumerate(const PermClass& c, int n,
                                   int cap = kEnumerationCap);

/// Named classes. Immutable once built; `default_registry()` is preloaded.
class ClassRegistry {
 public:
  void add(std::string name, std::vector<Permutation> basis);
  const PermClass& get(std::string_view name) const;
  bool has(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, PermClass, std::less<>> classes_;
};

const ClassRegistry& default_registry();

inline const PermClass& named(std::string_view name) {
  return default_registry().get(name);
}

/// Accepts a registry name or a literal "av(p1,p2,...)". Each pattern is a
/// digit string or a bracketed list such as "[10,1,2,...]". "av()" is the
/// class of all permutations.
PermClass parse_class(std::string_view text,
                      const ClassRegistry& registry = default_registry());

}  // namespace permwreath
