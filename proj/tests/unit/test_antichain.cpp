#include "doctest.h"
#include "permwreath/antichain.hpp"
#include "permwreath/basis_search.hpp"
#include "permwreath/decomposition.hpp"
#include "permwreath/pattern.hpp"
#include "permwreath/profile.hpp"

using namespace permwreath;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("displayed members") {
  CHECK(antichain_member(AntichainFamily::thm6, 1) == P("2513764"));
  CHECK(antichain_member(AntichainFamily::thm6, 2) == P("2,5,1,3,7,4,9,8,6"));
  CHECK(antichain_member(AntichainFamily::thm6, 3) == P("2,5,1,3,7,4,9,6,11,10,8"));
  CHECK(antichain_member(AntichainFamily::widdershins_2413, 1) == P("816497523"));
  CHECK(antichain_member(AntichainFamily::widdershins_2143, 1) ==
        P("10,1,8,4,6,9,11,7,5,2,3"));
  CHECK_THROWS_AS(antichain_member(AntichainFamily::thm6, 0), InvalidArgument);
  CHECK_THROWS_AS(parse_family("thm7"), InvalidArgument);
  CHECK(parse_family("ex3-4312-4123") == AntichainFamily::ex3_4312_4123);
  CHECK(to_string(AntichainFamily::ex2iii) == "ex2iii");
}

TEST_CASE("families are antichains of basis elements") {
  for (const auto& f : antichain_families()) {
    const bool widdershins = f.unique_anchors.empty();
    const int top = widdershins ? 3 : 5;
    std::vector<Permutation> members;
    for (int k = 1; k <= top; ++k) {
      const Permutation b = antichain_member(f.family, k);
      CAPTURE(f.name);
      CAPTURE(k);
      members.push_back(b);
      for (const auto& y : f.ys) CHECK(verify_basis_element(b, f.x, y).is_basis_element);
      for (const auto& anchor : f.unique_anchors) CHECK(occurrences(anchor, b) == 1);
      CHECK(sum_skew_status(b) == Decomposability::neither);
    }
    CHECK(check_antichain(members));
  }
}

TEST_CASE("thm6 profile keeps one nontrivial block") {
  for (int k = 1; k <= 5; ++k) {
    const Permutation b = antichain_member(AntichainFamily::thm6, k);
    const auto d = left_greedy_profile(b, named("av321"));
    CHECK(d.profile.size() == b.size() - 1);
    int nontrivial = 0;
    for (const auto& blk : d.block_patterns) nontrivial += blk.size() > 1;
    CHECK(nontrivial == 1);
    CHECK(involves(P("25134"), d.profile));
  }
}
