#include "permwreath/antichain.hpp"

#include <utility>

namespace permwreath {

namespace {

// 2,5,1,3 | 7,4, 9,6, ..., 2k+3,2k : the bottom anchor followed by k-1 up-right
// pin pairs.
std::vector<int> up_right_body(int k) {
  std::vector<int> v{2, 5, 1, 3};
  for (int j = 2; j <= k; ++j) {
    v.push_back(2 * j + 3);
    v.push_back(2 * j);
  }
  return v;
}

std::vector<int> thm6(int k) {
  auto v = up_right_body(k);
  for (int x : {2 * k + 5, 2 * k + 4, 2 * k + 2}) v.push_back(x);
  return v;
}

std::vector<int> ex2ii(int k) {
  auto v = up_right_body(k);
  for (int x : {2 * k + 6, 2 * k + 5, 2 * k + 4, 2 * k + 2}) v.push_back(x);
  return v;
}

std::vector<int> swap_last_two(std::vector<int> v) {
  std::swap(v[v.size() - 1], v[v.size() - 2]);
  return v;
}

// The bottom anchor 2,5,1,4 instead of 2,5,1,3: exchange the values 3 and 4.
std::vector<int> ex3(int k) {
  auto v = ex2ii(k);
  for (int& x : v) {
    if (x == 3) {
      x = 4;
    } else if (x == 4) {
      x = 3;
    }
  }
  return v;
}

// 4k+4,1, 4k+2,4, ..., 2k+6,2k | 2k+4,2k+2,2k+7,2k+5,2k+3 |
// 2k+9,2k+1, ..., 4k+5,5 | 2,3
std::vector<int> widdershins_2413(int k) {
  std::vector<int> v;
  for (int i = 0; i < k; ++i) {
    v.push_back(4 * k + 4 - 2 * i);
    v.push_back(i == 0 ? 1 : 2 * i + 2);
  }
  for (int x : {2 * k + 4, 2 * k + 2, 2 * k + 7, 2 * k + 5, 2 * k + 3}) v.push_back(x);
  for (int i = 0; i < k - 1; ++i) {
    v.push_back(2 * k + 9 + 2 * i);
    v.push_back(2 * k + 1 - 2 * i);
  }
  v.push_back(2);
  v.push_back(3);
  return v;
}

// 4k+6,1, 4k+4,4, ..., 2k+8,2k | 2k+6,2k+2,2k+4,2k+7,2k+9,2k+5,2k+3 |
// 2k+11,2k+1, ..., 4k+7,5 | 2,3
std::vector<int> widdershins_2143(int k) {
  std::vector<int> v;
  for (int i = 0; i < k; ++i) {
    v.push_back(4 * k + 6 - 2 * i);
    v.push_back(i == 0 ? 1 : 2 * i + 2);
  }
  for (int x : {2 * k + 6, 2 * k + 2, 2 * k + 4, 2 * k + 7, 2 * k + 9, 2 * k + 5,
                2 * k + 3}) {
    v.push_back(x);
  }
  for (int i = 0; i < k - 1; ++i) {
    v.push_back(2 * k + 11 + 2 * i);
    v.push_back(2 * k + 1 - 2 * i);
  }
  v.push_back(2);
  v.push_back(3);
  return v;
}

std::vector<FamilyInfo> build_families() {
  auto p = [](std::string_view s) { return parse_permutation(s); };
  auto av = [&](std::initializer_list<const char*> basis) {
    std::vector<Permutation> b;
    for (const char* s : basis) b.push_back(p(s));
    return PermClass(std::move(b));
  };
  std::vector<FamilyInfo> f;
  f.push_back({AntichainFamily::thm6,
               "thm6",
               av({"25134"}),
               {av({"321"}), av({"321", "2341"}), av({"321", "3412"})},
               {p("321"), p("25134")}});
  f.push_back({AntichainFamily::ex2ii,
               "ex2ii",
               av({"25134"}),
               {av({"4321", "4312"}), av({"4321", "4231"}), av({"4321", "4213"}),
                av({"4321", "3412"}), av({"4321", "3214"})},
               {p("4321"), p("25134")}});
  f.push_back({AntichainFamily::ex2iii,
               "ex2iii",
               av({"25134"}),
               {av({"4312", "4231"}), av({"4312", "4213"}), av({"4312", "3421"})},
               {p("4312"), p("25134")}});
  f.push_back({AntichainFamily::ex3_4321_4123,
               "ex3-4321-4123",
               av({"25143"}),
               {av({"4321", "4123"})},
               {p("4321"), p("25143")}});
  f.push_back({AntichainFamily::ex3_4312_4123,
               "ex3-4312-4123",
               av({"25143"}),
               {av({"4312", "4123"})},
               {p("4312"), p("25143")}});
  f.push_back({AntichainFamily::widdershins_2413,
               "widdershins-2413",
               av({"31542"}),
               {av({"3412", "2413"})},
               {}});
  f.push_back({AntichainFamily::widdershins_2143,
               "widdershins-2143",
               av({"412563"}),
               {av({"3412", "2143"})},
               {}});
  return f;
}

}  // namespace

const std::vector<FamilyInfo>& antichain_families() {
  static const std::vector<FamilyInfo> families = build_families();
  return families;
}

const FamilyInfo& family_info(AntichainFamily family) {
  for (const auto& f : antichain_families()) {
    if (f.family == family) return f;
  }
  throw InvalidArgument("unknown antichain family");
}

AntichainFamily parse_family(std::string_view name) {
  for (const auto& f : antichain_families()) {
    if (f.name == name) return f.family;
  }
  throw InvalidArgument("unknown antichain family: " + std::string(name));
}

std::string_view to_string(AntichainFamily family) {
  return family_info(family).name;
}

Permutation antichain_member(AntichainFamily family, int k) {
  if (k < 1) throw InvalidArgument("antichain index k must be >= 1");
  switch (family) {
    case AntichainFamily::thm6:
      return Permutation(thm6(k));
    case AntichainFamily::ex2ii:
      return Permutation(ex2ii(k));
    case AntichainFamily::ex2iii:
      return Permutation(swap_last_two(ex2ii(k)));
    case AntichainFamily::ex3_4321_4123:
      return Permutation(ex3(k));
    case AntichainFamily::ex3_4312_4123:
      return Permutation(swap_last_two(ex3(k)));
    case AntichainFamily::widdershins_2413:
      return Permutation(widdershins_2413(k));
    case AntichainFamily::widdershins_2143:
      return Permutation(widdershins_2143(k));
  }
  throw InvalidArgument("unknown antichain family");
}

}  // namespace permwreath
