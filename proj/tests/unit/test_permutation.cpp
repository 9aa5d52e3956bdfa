#include "doctest.h"
#include "oracles.hpp"
#include "permwreath/permutation.hpp"

using namespace permwreath;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("reduce examples") {
  CHECK(reduce(std::vector<int>{3, 5, 4, 7}) == P("1324"));
  CHECK(reduce(std::vector<int>{2, 9, 4}) == P("132"));
  CHECK(reduce(std::vector<int>{1, 2, 3, 4, 5, 6}) == Permutation::identity(6));
  CHECK(reduce(std::vector<int>{-3, 10, 0}) == P("132"));
}

TEST_CASE("reduce rejects duplicates and empty input") {
  CHECK_THROWS_AS(reduce(std::vector<int>{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(reduce(std::vector<int>{}), InvalidArgument);
}

TEST_CASE("reduce agrees with sorting oracle and is idempotent") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      std::vector<int> spread;
      for (int x : v) spread.push_back(x * 7 - 20);
      const Permutation r = reduce(spread);
      CHECK(oracle::values(r) == oracle::reduce(spread));
      CHECK(reduce(r.values()) == r);
    }
  }
}

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({2, 2, 1}), InvalidArgument);
  CHECK_NOTHROW(Permutation({2, 3, 1}));
}

TEST_CASE("length cap") {
  const std::size_t saved = max_length();
  CHECK(saved == 64);
  set_max_length(5);
  CHECK_THROWS_AS(Permutation::identity(6), LimitExceeded);
  CHECK_NOTHROW(Permutation::identity(5));
  set_max_length(saved);
  CHECK_NOTHROW(Permutation::identity(64));
  CHECK_THROWS_AS(Permutation::identity(65), LimitExceeded);
}

TEST_CASE("parsing forms") {
  CHECK(P("2513764") == Permutation({2, 5, 1, 3, 7, 6, 4}));
  CHECK(P("2,4,1,3") == Permutation({2, 4, 1, 3}));
  CHECK(P("2 4 1 3") == Permutation({2, 4, 1, 3}));
  CHECK(P("10,1,8,4,6,9,11,7,5,2,3").size() == 11);
  CHECK_THROWS_AS(P(""), InvalidArgument);
  CHECK_THROWS_AS(P("1,x"), InvalidArgument);
  CHECK_THROWS_AS(P("133"), InvalidArgument);
}

TEST_CASE("text round trip") {
  for (const char* s : {"1", "21", "2513764", "10 1 8 4 6 9 11 7 5 2 3"}) {
    const Permutation p = P(s);
    CHECK(parse_permutation(p.to_string()) == p);
    CHECK(parse_permutation(p.to_compact_string()) == p);
  }
  CHECK(P("2513764").to_string() == "2 5 1 3 7 6 4");
}

TEST_CASE("symmetries") {
  const Permutation p = P("25134");
  CHECK(p.inverse() == P("31452"));
  CHECK(p.reverse() == P("43152"));
  CHECK(p.complement() == P("41532"));
  CHECK(p.reverse_complement() == p.reverse().complement());
  CHECK(p.inverse().inverse() == p);
  CHECK(p.without_position(2) == P("2134"));
}

TEST_CASE("ordering is length then lex") {
  CHECK(P("321") < P("1234"));
  CHECK(P("132") < P("213"));
}
