#include "doctest.h"
#include "oracles.hpp"
#include "permwreath/minimal_block.hpp"
#include "permwreath/pattern.hpp"

using namespace permwreath;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("minimal block examples") {
  auto mb = minimal_block(P("236745981"), 2, 3);
  CHECK(mb.positions == Segment{2, 6});
  CHECK(mb.values == Segment{3, 7});
  CHECK(mb.pattern == reduce(std::vector<int>{3, 6, 7, 4, 5}));

  mb = minimal_block(P("12"), 1, 2);
  CHECK(mb.positions == Segment{1, 2});
  mb = minimal_block(P("2413"), 1, 2);
  CHECK(mb.positions == Segment{1, 4});
  CHECK(mb.pattern == P("2413"));
}

TEST_CASE("minimal block rejects bad indices") {
  CHECK_THROWS_AS(minimal_block(P("2413"), 2, 2), InvalidArgument);
  CHECK_THROWS_AS(minimal_block(P("2413"), 3, 2), InvalidArgument);
  CHECK_THROWS_AS(minimal_block(P("2413"), 0, 2), InvalidArgument);
  CHECK_THROWS_AS(minimal_block(P("2413"), 1, 5), InvalidArgument);
}

TEST_CASE("minimal block agrees with oracle, both schedules, exhaustive to length 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation pi(v);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const auto mb = minimal_block(pi, i, j);
          const auto expect = oracle::minimal_block(v, i, j);
          REQUIRE(mb.positions.start == expect.first);
          REQUIRE(mb.positions.end == expect.second);
          REQUIRE(is_interval(pi, mb.positions));
          REQUIRE(mb.values == value_range(pi, mb.positions));
          REQUIRE(mb.pattern == pattern_of(pi, mb.positions));
          const auto other = minimal_block_stepwise(pi, i, j);
          REQUIRE(other.positions == mb.positions);
          REQUIRE(other.values == mb.values);
        }
      }
    }
  }
}

TEST_CASE("minimal block nesting, exhaustive to length 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation pi(v);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const auto outer = minimal_block(pi, i, j);
          for (int k = outer.positions.start; k <= outer.positions.end; ++k) {
            for (int l = k + 1; l <= outer.positions.end; ++l) {
              const auto inner = minimal_block(pi, k, l);
              REQUIRE(outer.contains(inner));
              if (k <= i && j <= l) REQUIRE(inner.positions == outer.positions);
            }
          }
        }
      }
    }
  }
}
