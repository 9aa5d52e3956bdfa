#include "permwreath/basis_search.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <numeric>
#include <thread>

#include "permwreath/pattern.hpp"
#include "permwreath/profile.hpp"

namespace permwreath {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

using KeySet = std::unordered_set<std::uint64_t>;

// Packed key of pi with the entry at 0-based index `skip` removed.
std::uint64_t deletion_key(std::span<const int> values, int skip) {
  const int removed = values[skip];
  std::uint64_t key = 0;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (i == skip) continue;
    const int v = values[i] > removed ? values[i] - 1 : values[i];
    key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  }
  return key;
}

struct LengthResult {
  std::vector<Permutation> basis;
  std::vector<std::uint64_t> members;
};

// Scan the permutations of length n whose first entry is in [first_lo,
// first_hi], in lexicographic order.
LengthResult scan(int n, int first_lo, int first_hi, const KeySet& previous,
                  const PermClass& x, const PermClass& y) {
  LengthResult out;
  std::vector<int> v(n);
  for (int first = first_lo; first <= first_hi; ++first) {
    v[0] = first;
    int next = 1;
    for (int k = 1; k < n; ++k) {
      if (next == first) ++next;
      v[k] = next++;
    }
    do {
      bool minimal_candidate = true;
      if (n > 1) {
        for (int i = 0; i < n && minimal_candidate; ++i) {
          minimal_candidate = previous.count(deletion_key(v, i)) > 0;
        }
      }
      if (!minimal_candidate) continue;  // contains a smaller non-member
      const Permutation pi(v);
      if (wreath_member(pi, x, y)) {
        out.members.push_back(pack(pi));
      } else {
        out.basis.push_back(pi);
      }
    } while (std::next_permutation(v.begin() + 1, v.end()));
  }
  return out;
}

LengthResult scan_length(int n, const KeySet& previous, const PermClass& x,
                         const PermClass& y, int jobs) {
  const int workers = std::clamp(jobs, 1, n);
  if (workers == 1) return scan(n, 1, n, previous, x, y);

  std::vector<LengthResult> parts(workers);
  std::vector<std::thread> threads;
  const int chunk = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    const int lo = t * chunk + 1;
    const int hi = std::min(n, lo + chunk - 1);
    if (lo > hi) continue;
    threads.emplace_back([&, t, lo, hi] { parts[t] = scan(n, lo, hi, previous, x, y); });
  }
  for (auto& th : threads) th.join();
  LengthResult merged;
  for (auto& p : parts) {  // chunks are in first-entry order, so lex order holds
    merged.basis.insert(merged.basis.end(), p.basis.begin(), p.basis.end());
    merged.members.insert(merged.members.end(), p.members.begin(), p.members.end());
  }
  return merged;
}

// Members of X wr Y of length n by direct membership tests.
KeySet members_of_length(int n, const PermClass& x, const PermClass& y) {
  KeySet out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    const Permutation pi(v);
    if (wreath_member(pi, x, y)) out.insert(pack(pi));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

std::vector<BasisRecord> wreath_basis(const PermClass& x, const PermClass& y,
                                      const BasisSearchOptions& options) {
  if (options.max_len > options.cap) {
    throw LimitExceeded("basis search length " + std::to_string(options.max_len) +
                        " exceeds cap " + std::to_string(options.cap));
  }
  if (options.cap > 16) throw LimitExceeded("basis search supports length <= 16");

  std::vector<BasisRecord> all;
  KeySet previous;
  const int first = std::max(1, options.skip_through + 1);
  if (first > 1 && first <= options.max_len) {
    previous = members_of_length(first - 1, x, y);
  }
  for (int n = first; n <= options.max_len; ++n) {
    // With no members of length n-1 every longer permutation contains a
    // non-member, so nothing of length n can be minimal.
    LengthResult r;
    if (n == 1 || !previous.empty()) r = scan_length(n, previous, x, y, options.jobs);
    std::vector<BasisRecord> records;
    const std::string when = utc_timestamp();
    for (auto& p : r.basis) {
      records.push_back({std::move(p), x.basis(), y.basis(), n, when});
    }
    if (options.on_length_done) options.on_length_done(n, records);
    all.insert(all.end(), records.begin(), records.end());
    previous = KeySet(r.members.begin(), r.members.end());
  }
  return all;
}

std::vector<BasisRecord> wreath_basis(const PermClass& x, const PermClass& y,
                                      int max_len) {
  BasisSearchOptions options;
  options.max_len = max_len;
  return wreath_basis(x, y, options);
}

BasisVerdict verify_basis_element(const Permutation& pi, const PermClass& x,
                                  const PermClass& y) {
  BasisVerdict verdict;
  if (wreath_member(pi, x, y)) {
    verdict.pi_is_member = true;
    return verdict;
  }
  for (int p = 1; p <= pi.size(); ++p) {
    Permutation smaller = pi.without_position(p);
    if (!wreath_member(smaller, x, y)) {
      verdict.deleted_position = p;
      verdict.witness = std::move(smaller);
      return verdict;
    }
  }
  verdict.is_basis_element = true;
  return verdict;
}

std::optional<std::pair<std::size_t, std::size_t>> comparable_pair(
    std::span<const Permutation> perms) {
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = a + 1; b < perms.size(); ++b) {
      if (involves(perms[a], perms[b]) || involves(perms[b], perms[a])) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

bool check_antichain(std::span<const Permutation> perms) {
  return !comparable_pair(perms).has_value();
}

}  // namespace permwreath
