#include "permwreath/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace permwreath {

namespace {

std::atomic<std::size_t> g_max_length{64};

void check_length(std::size_t n) {
  if (n > g_max_length.load(std::memory_order_relaxed)) {
    throw LimitExceeded("permutation length " + std::to_string(n) +
                        " exceeds the length cap of " +
                        std::to_string(max_length()));
  }
}

}  // namespace

std::size_t max_length() { return g_max_length.load(std::memory_order_relaxed); }

void set_max_length(std::size_t cap) {
  if (cap == 0) throw InvalidArgument("length cap must be positive");
  g_max_length.store(cap, std::memory_order_relaxed);
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_length(values_.size());
  const int n = size();
  std::vector<char> seen(values_.size() + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw InvalidArgument("value " + std::to_string(v) +
                            " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw InvalidArgument("repeated value " + std::to_string(v));
    seen[v] = 1;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  check_length(static_cast<std::size_t>(n));
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::decreasing(int n) {
  check_length(static_cast<std::size_t>(n));
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v), Unchecked{});
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw InvalidArgument("position " + std::to_string(position) +
                          " out of range 1.." + std::to_string(size()));
  }
  return values_[position - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::reverse() const {
  return Permutation(std::vector<int>(values_.rbegin(), values_.rend()),
                     Unchecked{});
}

Permutation Permutation::complement() const {
  std::vector<int> c(values_.size());
  const int n = size();
  for (int i = 0; i < n; ++i) c[i] = n + 1 - values_[i];
  return Permutation(std::move(c), Unchecked{});
}

Permutation Permutation::reverse_complement() const {
  return reverse().complement();
}

Permutation Permutation::without_position(int position) const {
  const int removed = at(position);
  std::vector<int> rest;
  rest.reserve(values_.size() - 1);
  for (int i = 0; i < size(); ++i) {
    if (i == position - 1) continue;
    const int v = values_[i];
    rest.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(rest), Unchecked{});
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::to_compact_string() const {
  if (size() > 9) return to_string();
  std::string out;
  for (int v : values_) out += static_cast<char>('0' + v);
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end());
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

Permutation reduce(std::span<const int> sequence) {
  if (sequence.empty()) throw InvalidArgument("empty sequence");
  check_length(sequence.size());
  std::vector<int> order(sequence.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sequence[a] < sequence[b]; });
  std::vector<int> ranks(sequence.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && sequence[order[r]] == sequence[order[r - 1]]) {
      throw InvalidArgument("repeated entry " +
                            std::to_string(sequence[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks), Permutation::Unchecked{});
}

Permutation pattern_at(const Permutation& p, std::span<const int> positions) {
  std::vector<int> picked;
  picked.reserve(positions.size());
  for (int pos : positions) picked.push_back(p.at(pos));
  return reduce(picked);
}

Permutation pattern_of(const Permutation& p, Segment positions) {
  if (positions.start < 1 || positions.end > p.size() ||
      positions.start > positions.end) {
    throw InvalidArgument("segment out of range");
  }
  auto v = p.values();
  return reduce(v.subspan(positions.start - 1, positions.length()));
}

std::vector<int> parse_sequence(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < text.size() &&
           !(std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
      ++i;
    }
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw InvalidArgument("empty permutation");

  auto to_int = [](std::string_view tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("not an integer: '" + std::string(tok) + "'");
    }
    return value;
  };

  std::vector<int> out;
  if (tokens.size() == 1 && tokens[0].size() > 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    for (char c : tokens[0]) out.push_back(c - '0');
    return out;
  }
  for (auto tok : tokens) out.push_back(to_int(tok));
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_sequence(text));
}

std::uint64_t pack(const Permutation& p) {
  if (p.size() > 16) throw LimitExceeded("pack supports length <= 16");
  std::uint64_t key = 0;
  for (int v : p.values()) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

}  // namespace permwreath

std::size_t std::hash<permwreath::Permutation>::operator()(
    const permwreath::Permutation& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.size()) * 0x9e3779b97f4a7c15ULL;
  for (int v : p.values()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
