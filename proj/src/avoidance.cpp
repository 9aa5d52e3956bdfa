#include "permwreath/avoidance.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace permwreath {

MembershipCache::MembershipCache(std::size_t capacity)
    : capacity_(capacity),
      per_shard_(std::max<std::size_t>(1, capacity / kShards)),
      shards_(std::make_unique<Shard[]>(kShards)) {}

MembershipCache::Shard& MembershipCache::shard_for(const Permutation& p) {
  return shards_[std::hash<Permutation>{}(p) % kShards];
}

std::optional<bool> MembershipCache::find(const Permutation& p) {
  Shard& s = shard_for(p);
  std::lock_guard lock(s.mutex);
  auto it = s.entries.find(p);
  if (it == s.entries.end()) return std::nullopt;
  s.order.splice(s.order.begin(), s.order, it->second.second);
  return it->second.first;
}

void MembershipCache::insert(const Permutation& p, bool verdict) {
  if (capacity_ == 0) return;
  Shard& s = shard_for(p);
  std::lock_guard lock(s.mutex);
  if (auto it = s.entries.find(p); it != s.entries.end()) {
    it->second.first = verdict;
    s.order.splice(s.order.begin(), s.order, it->second.second);
    return;
  }
  if (s.entries.size() >= per_shard_) {
    s.entries.erase(s.order.back());
    s.order.pop_back();
  }
  s.order.push_front(p);
  s.entries.emplace(p, std::make_pair(verdict, s.order.begin()));
}

std::size_t MembershipCache::size() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < kShards; ++i) {
    std::lock_guard lock(shards_[i].mutex);
    total += shards_[i].entries.size();
  }
  return total;
}

NormalizedBasis normalize_basis(std::vector<Permutation> candidates) {
  std::sort(candidates.begin(), candidates.end());
  NormalizedBasis out;
  for (auto& c : candidates) {
    // Candidates are sorted by length, so anything c could involve is
    // already in the kept list.
    const bool redundant =
        std::any_of(out.basis.begin(), out.basis.end(),
                    [&](const Permutation& b) { return involves(b, c); });
    if (redundant) {
      out.dropped.push_back(std::move(c));
    } else {
      out.basis.push_back(std::move(c));
    }
  }
  return out;
}

PermClass::PermClass(std::vector<Permutation> basis, std::string name,
                     std::size_t cache_capacity)
    : name_(std::move(name)),
      cache_(std::make_shared<MembershipCache>(cache_capacity)) {
  for (const auto& b : basis) {
    if (b.empty()) throw InvalidArgument("basis elements must be nonempty");
  }
  auto normalized = normalize_basis(std::move(basis));
  basis_ = std::move(normalized.basis);
  dropped_ = std::move(normalized.dropped);
  for (const auto& b : basis_) matchers_.emplace_back(b);
}

std::string PermClass::literal() const {
  std::string out = "av(";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ',';
    if (basis_[i].size() <= 9) {
      out += basis_[i].to_compact_string();
    } else {
      out += '[';
      for (int k = 0; k < basis_[i].size(); ++k) {
        if (k) out += ',';
        out += std::to_string(basis_[i][k]);
      }
      out += ']';
    }
  }
  return out + ")";
}

int PermClass::max_basis_length() const {
  int m = 0;
  for (const auto& b : basis_) m = std::max(m, b.size());
  return m;
}

bool PermClass::contains(const Permutation& pi) const {
  if (basis_.empty()) return true;
  if (pi.size() < basis_.front().size()) return true;
  if (auto hit = cache_->find(pi)) return *hit;
  bool in = true;
  for (const auto& m : matchers_) {
    if (m.pattern().size() <= pi.size() && m.occurs_in(pi)) {
      in = false;
      break;
    }
  }
  cache_->insert(pi, in);
  return in;
}

std::optional<Permutation> PermClass::violated_by(const Permutation& pi) const {
  for (const auto& m : matchers_) {
    if (m.pattern().size() <= pi.size() && m.occurs_in(pi)) return m.pattern();
  }
  return std::nullopt;
}

std::vector<Permutation> enumerate(const PermClass& c, int n, int cap) {
  if (n < 1) throw InvalidArgument("enumeration length must be >= 1");
  if (n > cap) {
    throw LimitExceeded("enumeration length " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<char> used(n + 1, 0);
  std::function<void()> extend = [&] {
    if (static_cast<int>(prefix.size()) == n) {
      out.push_back(reduce(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      if (c.contains(reduce(prefix))) {
        used[v] = 1;
        extend();
        used[v] = 0;
      }
      prefix.pop_back();
    }
  };
  extend();
  return out;
}

void ClassRegistry::add(std::string name, std::vector<Permutation> basis) {
  if (classes_.count(name)) {
    throw InvalidArgument("class name already registered: " + name);
  }
  PermClass c(std::move(basis), name);
  classes_.emplace(std::move(name), std::move(c));
}

const PermClass& ClassRegistry::get(std::string_view name) const {
  auto it = classes_.find(name);
  if (it == classes_.end()) {
    throw InvalidArgument("unknown class name: " + std::string(name));
  }
  return it->second;
}

bool ClassRegistry::has(std::string_view name) const {
  return classes_.find(name) != classes_.end();
}

std::vector<std::string> ClassRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : classes_) out.push_back(k);
  return out;
}

namespace {

ClassRegistry build_default_registry() {
  ClassRegistry r;
  auto p = [](std::string_view s) { return parse_permutation(s); };
  for (const char* single :
       {"21", "321", "123", "25134", "25143", "31542", "412563", "321654"}) {
    r.add(std::string("av") + single, {p(single)});
  }
  const std::pair<const char*, const char*> pairs[] = {
      {"321", "2341"},  {"321", "3412"},  {"4321", "4312"}, {"4321", "4231"},
      {"4321", "4213"}, {"4321", "3412"}, {"4321", "3214"}, {"4312", "4231"},
      {"4312", "4213"}, {"4312", "3421"}, {"4321", "4123"}, {"4312", "4123"},
      {"3412", "2413"}, {"3412", "2143"},
  };
  for (auto [a, b] : pairs) {
    r.add(std::string("av") + a + "-" + b, {p(a), p(b)});
  }
  r.add("inc-osc", {p("321"), p("2341"), p("3412"), p("4123")});
  r.add("widdershins-y", {p("3412"), p("2413")});
  r.add("widdershins-y2", {p("3412"), p("2143")});
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

const ClassRegistry& default_registry() {
  static const ClassRegistry registry = build_default_registry();
  return registry;
}

PermClass parse_class(std::string_view text, const ClassRegistry& registry) {
  text = trim(text);
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (registry.has(lower)) return registry.get(lower);

  if (lower.size() < 4 || lower.compare(0, 3, "av(") != 0 || lower.back() != ')') {
    throw InvalidArgument("not a class name or av(...) literal: '" +
                          std::string(text) + "'");
  }
  std::string_view body(lower);
  body = trim(body.substr(3, body.size() - 4));

  std::vector<Permutation> basis;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i])))) ++i;
    if (i >= body.size()) break;
    std::string_view item;
    if (body[i] == '[') {
      const auto close = body.find(']', i);
      if (close == std::string_view::npos) {
        throw InvalidArgument("unterminated '[' in class literal");
      }
      item = body.substr(i + 1, close - i - 1);
      i = close + 1;
    } else {
      const std::size_t start = i;
      while (i < body.size() && body[i] != ',') ++i;
      item = trim(body.substr(start, i - start));
    }
    basis.push_back(parse_permutation(item));
  }
  return PermClass(std::move(basis));
}

}  // namespace permwreath
