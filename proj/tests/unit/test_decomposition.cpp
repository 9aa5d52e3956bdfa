#include "doctest.h"
#include "oracles.hpp"
#include "permwreath/decomposition.hpp"
#include "permwreath/pattern.hpp"

using namespace permwreath;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }

std::vector<Permutation> Ps(std::initializer_list<const char*> list) {
  std::vector<Permutation> out;
  for (const char* s : list) out.push_back(P(s));
  return out;
}

// 1 = sum, 2 = skew, 0 = neither, by prefix value sets.
int oracle_status(const oracle::Seq& v) {
  const int n = static_cast<int>(v.size());
  int lo = n + 1, hi = 0;
  bool sum = false, skew = false;
  for (int k = 1; k < n; ++k) {
    lo = std::min(lo, v[k - 1]);
    hi = std::max(hi, v[k - 1]);
    if (lo == 1 && hi == k) sum = true;
    if (hi == n && lo == n - k + 1) skew = true;
  }
  return sum ? 1 : (skew ? 2 : 0);
}
}  // namespace

TEST_CASE("simplicity examples") {
  CHECK_FALSE(is_simple(P("132")));
  CHECK(is_simple(P("1")));
  CHECK(is_simple(P("12")));
  CHECK(is_simple(P("2413")));
  CHECK(is_simple(P("35142")));
}

TEST_CASE("no simple permutation of length 3") {
  for (const auto& v : oracle::all_perms(3)) CHECK_FALSE(is_simple(Permutation(v)));
}

TEST_CASE("simplicity agrees with oracle") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      REQUIRE(is_simple(Permutation(v)) == oracle::is_simple(v));
    }
  }
}

TEST_CASE("decomposition examples") {
  auto d = substitution_decomposition(P("346215"));
  CHECK(d.skeleton == P("2413"));
  CHECK(d.block_patterns == Ps({"12", "1", "21", "1"}));
  CHECK(d.block_segments == std::vector<Segment>{{1, 2}, {3, 3}, {4, 5}, {6, 6}});

  d = substitution_decomposition(P("217968543"));
  CHECK(d.skeleton == P("12"));
  CHECK(d.block_patterns == Ps({"21", "5746321"}));

  d = substitution_decomposition(P("35142"));
  CHECK(d.skeleton == P("35142"));
  CHECK(d.block_patterns == Ps({"1", "1", "1", "1", "1"}));

  d = substitution_decomposition(P("123"));
  CHECK(d.skeleton == P("123"));
  CHECK(d.block_patterns == Ps({"1", "1", "1"}));
}

TEST_CASE("skeleton examples") {
  CHECK(skeleton(P("346215")) == P("2413"));
  CHECK(skeleton(P("35142")) == P("35142"));
  CHECK(skeleton(P("456123")) == P("21"));
  CHECK(skeleton(P("1234")) == P("12"));
  CHECK(skeleton(P("1")) == P("1"));
}

TEST_CASE("sum/skew status") {
  CHECK(sum_skew_status(P("12")) == Decomposability::sum);
  CHECK(sum_skew_status(P("21")) == Decomposability::skew);
  CHECK(sum_skew_status(P("2513764")) == Decomposability::neither);
  CHECK(to_string(Decomposability::neither) == "indecomposable-both");
  CHECK_THROWS_AS(sum_skew_status(P("1")), InvalidArgument);
}

TEST_CASE("decomposition invariants, exhaustive to length 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation pi(v);
      const auto d = substitution_decomposition(pi);
      REQUIRE(inflate(d.skeleton, d.block_patterns) == pi);
      REQUIRE(is_simple(skeleton(pi)));
      if (n < 2) continue;
      const int status = oracle_status(v);
      const auto got = sum_skew_status(pi);
      REQUIRE(got == (status == 1   ? Decomposability::sum
                      : status == 2 ? Decomposability::skew
                                    : Decomposability::neither));
      const int t = d.skeleton.size();
      if (status == 1) {
        REQUIRE(d.skeleton == Permutation::identity(t));
        for (const auto& b : d.block_patterns) {
          if (b.size() > 1) REQUIRE(sum_skew_status(b) != Decomposability::sum);
        }
      } else if (status == 2) {
        REQUIRE(d.skeleton == Permutation::decreasing(t));
        for (const auto& b : d.block_patterns) {
          if (b.size() > 1) REQUIRE(sum_skew_status(b) != Decomposability::skew);
        }
      } else {
        REQUIRE(t >= 4);
      }
    }
  }
}

TEST_CASE("simple skeleton of length >= 4 is the unique brute-force decomposition") {
  for (int n = 4; n <= 8; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      if (oracle_status(v) != 0) continue;
      std::vector<oracle::Seq> found;
      std::vector<std::vector<int>> found_ends;
      oracle::for_each_segmentation(n, [&](const std::vector<int>& ends) {
        oracle::Seq reps;
        int s = 1;
        for (int e : ends) {
          if (!oracle::is_interval(v, s, e)) return;
          reps.push_back(v[s - 1]);
          s = e + 1;
        }
        const auto sk = oracle::reduce(reps);
        if (sk.size() >= 4 && oracle::is_simple(sk)) {
          found.push_back(sk);
          found_ends.push_back(ends);
        }
      });
      REQUIRE(found.size() == 1);
      const auto d = substitution_decomposition(Permutation(v));
      REQUIRE(oracle::values(d.skeleton) == found[0]);
      REQUIRE(d.block_segments.size() == found_ends[0].size());
      for (std::size_t k = 0; k < found_ends[0].size(); ++k) {
        REQUIRE(d.block_segments[k].end == found_ends[0][k]);
      }
    }
  }
}
