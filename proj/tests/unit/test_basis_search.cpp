#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "permwreath/basis_search.hpp"
#include "permwreath/pattern.hpp"
#include "permwreath/profile.hpp"

using namespace permwreath;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }

std::vector<oracle::Seq> basis_of(const PermClass& c) {
  std::vector<oracle::Seq> b;
  for (const auto& p : c.basis()) b.push_back(oracle::values(p));
  return b;
}

// Minimal non-members by the segmentation oracle.
std::vector<Permutation> oracle_basis(const PermClass& x, const PermClass& y, int max_len) {
  const auto xb = basis_of(x), yb = basis_of(y);
  std::vector<Permutation> out;
  std::set<oracle::Seq> members{{}};
  for (int n = 1; n <= max_len; ++n) {
    std::set<oracle::Seq> next;
    for (const auto& v : oracle::all_perms(n)) {
      bool minimal = true;
      for (int d = 0; d < n && minimal; ++d) {
        oracle::Seq del = v;
        del.erase(del.begin() + d);
        if (!members.count(del.empty() ? del : oracle::reduce(del))) minimal = false;
      }
      const bool in = oracle::wreath_member(v, xb, yb);
      if (in) next.insert(v);
      if (!in && minimal) out.emplace_back(v);
    }
    members = std::move(next);
  }
  return out;
}

std::vector<Permutation> perms_of(const std::vector<BasisRecord>& rs) {
  std::vector<Permutation> out;
  for (const auto& r : rs) out.push_back(r.perm);
  return out;
}
}  // namespace

TEST_CASE("basis examples") {
  const auto r = wreath_basis(named("av21"), named("av21"), 5);
  REQUIRE(r.size() == 1);
  CHECK(r[0].perm == P("21"));
  CHECK(r[0].length == 2);
  CHECK(r[0].x_basis == named("av21").basis());
  CHECK(r[0].discovered_at.size() == 20);

  for (const auto& rec : wreath_basis(named("av321"), named("av21"), 8)) {
    CHECK(rec.length <= 7);
  }
}

TEST_CASE("basis of Av(25134) wr Av(321) to length 9 contains the first two antichain members") {
  BasisSearchOptions o;
  o.max_len = 9;
  o.jobs = 2;
  const auto found = perms_of(wreath_basis(named("av25134"), named("av321"), o));
  CHECK(std::find(found.begin(), found.end(), P("2513764")) != found.end());
  CHECK(std::find(found.begin(), found.end(), P("251374986")) != found.end());
  CHECK(check_antichain(found));
  CHECK(std::is_sorted(found.begin(), found.end()));
}

TEST_CASE("basis agrees with segmentation oracle to length 8") {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"av21", "av21"}, {"av321", "av21"}, {"av25134", "av321"}};
  for (auto [xn, yn] : pairs) {
    const auto got = perms_of(wreath_basis(named(xn), named(yn), 8));
    CHECK(got == oracle_basis(named(xn), named(yn), 8));
    CHECK(check_antichain(got));
  }
}

TEST_CASE("job count does not change results") {
  BasisSearchOptions one, four;
  one.max_len = four.max_len = 8;
  four.jobs = 4;
  CHECK(perms_of(wreath_basis(named("av25134"), named("av321"), one)) ==
        perms_of(wreath_basis(named("av25134"), named("av321"), four)));
}

TEST_CASE("resume skips completed lengths") {
  BasisSearchOptions o;
  o.max_len = 8;
  std::vector<int> reported;
  o.on_length_done = [&](int n, const std::vector<BasisRecord>&) { reported.push_back(n); };
  const auto full = perms_of(wreath_basis(named("av25134"), named("av321"), o));
  CHECK(reported == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});

  reported.clear();
  o.skip_through = 6;
  const auto tail = perms_of(wreath_basis(named("av25134"), named("av321"), o));
  CHECK(reported == std::vector<int>{7, 8});
  std::vector<Permutation> expect;
  for (const auto& p : full) {
    if (p.size() > 6) expect.push_back(p);
  }
  CHECK(tail == expect);
}

TEST_CASE("basis caps") {
  CHECK_THROWS_AS(wreath_basis(named("av21"), named("av21"), 12), LimitExceeded);
  BasisSearchOptions o;
  o.max_len = 12;
  o.cap = 12;
  o.skip_through = 12;
  CHECK_NOTHROW(wreath_basis(named("av21"), named("av21"), o));
  o.cap = 17;
  CHECK_THROWS_AS(wreath_basis(named("av21"), named("av21"), o), LimitExceeded);
}

TEST_CASE("verify basis element") {
  CHECK(verify_basis_element(P("2513764"), named("av25134"), named("av321")));
  CHECK(verify_basis_element(P("816497523"), named("av31542"), named("widdershins-y")));
  const auto v = verify_basis_element(P("12"), named("av21"), named("av21"));
  CHECK_FALSE(v);
  CHECK(v.pi_is_member);
  const auto w = verify_basis_element(P("25137648"), named("av25134"), named("av321"));
  CHECK_FALSE(w);
  CHECK_FALSE(w.pi_is_member);
  REQUIRE(w.deleted_position.has_value());
  REQUIRE(w.witness.has_value());
  CHECK_FALSE(wreath_member(*w.witness, named("av25134"), named("av321")));
}

TEST_CASE("antichain checks") {
  CHECK_FALSE(check_antichain(std::vector<Permutation>{P("1"), P("12")}));
  CHECK(check_antichain(std::vector<Permutation>{P("2413"), P("3142")}));
  const auto pair = comparable_pair(std::vector<Permutation>{P("2413"), P("3142"), P("312")});
  REQUIRE(pair.has_value());
  CHECK(pair->first == 0);
  CHECK(pair->second == 2);
}
