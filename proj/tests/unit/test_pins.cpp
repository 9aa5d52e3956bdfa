#include "doctest.h"
#include "oracles.hpp"
#include "permwreath/minimal_block.hpp"
#include "permwreath/pattern.hpp"
#include "permwreath/pins.hpp"

using namespace permwreath;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }

std::vector<Point> at(const Permutation& host, std::initializer_list<int> positions) {
  std::vector<Point> pts;
  for (int p : positions) pts.push_back(host.point(p));
  return pts;
}

std::vector<oracle::PinPoint> plain(const std::vector<Point>& pts) {
  std::vector<oracle::PinPoint> out;
  for (const auto& p : pts) out.push_back({p.position, p.value});
  return out;
}

// Proper by the oracle, with the library agreeing flag by flag.
void require_proper(const PinSequence& s) {
  const auto v = oracle::judge_pins(oracle::values(s.host), plain(s.points));
  REQUIRE(v.valid);
  std::string dirs;
  for (auto d : s.directions()) dirs += to_char(d);
  REQUIRE(dirs == v.directions);
  for (std::size_t k = 0; k < s.pins.size(); ++k) {
    REQUIRE(s.pins[k].proper());
    REQUIRE(v.proper[k]);
  }
  for (std::size_t k = 1; k < s.pins.size(); ++k) {
    REQUIRE(perpendicular(s.pins[k - 1].direction, s.pins[k].direction));
  }
}

const Permutation kFig = P("3,10,1,7,11,4,9,5,6,2,8");
}  // namespace

TEST_CASE("figure pin sequence") {
  const auto seq = classify_pins(kFig, at(kFig, {4, 6, 8, 7, 9, 11, 10, 1}));
  std::string dirs;
  for (auto d : seq.directions()) dirs += to_char(d);
  CHECK(dirs == "RURRDL");
  std::vector<bool> proper;
  for (const auto& p : seq.pins) proper.push_back(p.proper());
  CHECK(proper == std::vector<bool>{false, true, false, false, true, true});
  CHECK_FALSE(seq.pins[0].maximal);
  CHECK_FALSE(seq.pins[2].separating);
  CHECK_FALSE(seq.pins[3].separating);

  const auto v = oracle::judge_pins(oracle::values(kFig), plain(seq.points));
  CHECK(v.directions == "RURRDL");
  CHECK(v.proper == proper);
}

TEST_CASE("pin classification errors") {
  CHECK(classify_pins(kFig, at(kFig, {1, 2})).pins.empty());
  try {
    classify_pins(kFig, at(kFig, {4, 6, 3}));  // (3,1) is below and left, not slicing
    FAIL("expected PinConditionError");
  } catch (const PinConditionError& e) {
    CHECK(e.index() == 3);
  }
  try {
    classify_pins(kFig, at(kFig, {4, 6, 8, 7, 8}));
    FAIL("expected PinConditionError");
  } catch (const PinConditionError& e) {
    CHECK(e.index() == 5);
  }
  CHECK_THROWS_AS(classify_pins(kFig, std::vector<Point>{{1, 4}, {2, 10}}), InvalidArgument);
}

TEST_CASE("classification agrees with oracle on random walks") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation host(v);
      // extend greedily by the first slicing point, several starts
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          std::vector<Point> pts{host.point(a), host.point(b)};
          while (true) {
            const Rect r = Rect::around(pts);
            bool grew = false;
            for (int q = 1; q <= n && !grew; ++q) {
              if (slice_direction(host.point(q), r)) {
                pts.push_back(host.point(q));
                grew = true;
              }
            }
            if (!grew) break;
          }
          const auto seq = classify_pins(host, pts);
          const auto o = oracle::judge_pins(v, plain(pts));
          REQUIRE(o.valid);
          for (std::size_t k = 0; k < seq.pins.size(); ++k) {
            REQUIRE(seq.pins[k].proper() == o.proper[k]);
            REQUIRE(to_char(seq.pins[k].direction) == o.directions[k]);
          }
        }
      }
    }
  }
}

TEST_CASE("pin words") {
  CHECK(pin_word_to_perm(PinWord::parse("12:")) == P("12"));
  CHECK(pin_word_to_perm(PinWord::parse("21")) == P("21"));
  CHECK(pin_word_to_perm(PinWord::parse("12:UR")) == P("1423"));
  CHECK(pin_word_to_perm(PinWord::parse("12:URUR")) == P("142635"));
  CHECK(pin_word_to_perm(PinWord::parse("21:LDRU")) == P("415362"));
  CHECK(PinWord::parse("21:ldru").to_string() == "21:LDRU");
  CHECK_THROWS_AS(PinWord::parse("12:UU"), InvalidArgument);
  CHECK_THROWS_AS(PinWord::parse("13:U"), InvalidArgument);
  CHECK_THROWS_AS(PinWord::parse("12:X"), InvalidArgument);
}

TEST_CASE("up-right words lie in the increasing oscillation") {
  const Permutation osc =
      reduce(std::vector<int>{4, 1, 6, 3, 8, 5, 10, 7, 12, 9, 14, 11, 16, 13, 18, 15});
  std::string letters;
  for (int m = 0; m < 10; ++m) {
    letters += (m % 2 == 0) ? 'U' : 'R';
    const Permutation p = pin_word_to_perm({true, letters});
    CHECK(named("inc-osc").contains(p));
    CHECK(involves(p, osc));
  }
}

TEST_CASE("widdershins words avoid 3412 and 2413") {
  std::string letters;
  for (int m = 0; m < 16; ++m) {
    letters += "LDRU"[m % 4];
    CHECK(named("widdershins-y").contains(pin_word_to_perm({false, letters})));
  }
}

TEST_CASE("pin word realizations embed every prefix") {
  for (bool inc : {true, false}) {
    for (const char* w : {"URULDRDLURDR", "LDRULDRU", "RDLURDLU", "ULURDRUL"}) {
      const std::string letters(w);
      const Permutation full = pin_word_to_perm({inc, letters});
      CHECK(full.size() == static_cast<int>(letters.size()) + 2);
      for (std::size_t k = 0; k < letters.size(); ++k) {
        CHECK(involves(pin_word_to_perm({inc, letters.substr(0, k)}), full));
      }
    }
  }
}

TEST_CASE("right-reaching examples") {
  auto s = right_reaching(P("21"), 1, 2);
  CHECK(s.points.size() == 2);

  s = right_reaching(P("2413"), 1, 2);
  CHECK(s.points.back().position == 4);
  require_proper(s);

  s = right_reaching(P("236745981"), 2, 3);
  CHECK(s.points.back().position == 6);
  for (const auto& p : s.points) CHECK((2 <= p.position && p.position <= 6));
  require_proper(s);
}

TEST_CASE("left-reaching examples") {
  auto s = left_reaching(P("12"), 1, 2);
  CHECK(s.points.size() == 2);
  CHECK(s.points[0] == Point{1, 1});

  s = left_reaching(P("2413"), 3, 4);
  CHECK(s.points.back().position == 1);
  CHECK(s.points[0] == Point{3, 1});
  require_proper(s);

  const Permutation pi = P("236745981");
  s = left_reaching(pi, 3, 6);  // p1 is already the leftmost point of 6745
  CHECK(minimal_block(pi, 3, 6).positions.start == 3);
  CHECK(s.points.size() == 2);
  s = left_reaching(pi, 4, 6);
  CHECK(s.points.back().position == minimal_block(pi, 4, 6).positions.start);
  require_proper(s);
}

TEST_CASE("saturated sequence covers the minimal block") {
  const Permutation pi = P("236745981");
  const auto sat = saturated_pin_sequence(pi, 2, 3);
  const Rect r = Rect::around(sat);
  CHECK(r.left == 2);
  CHECK(r.right == 6);
  CHECK(r.bottom == 3);
  CHECK(r.top == 7);
}

TEST_CASE("exhaustive search agrees on existence") {
  for (const auto& v : oracle::all_perms(5)) {
    const Permutation pi(v);
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        const auto found = right_reaching_search(pi, i, j);
        REQUIRE(found.has_value());
        require_proper(*found);
      }
    }
  }
}

TEST_CASE("pin probe") {
  auto r = pin_probe(named("av21"), 10);
  CHECK_FALSE(r.exceeded);
  CHECK(r.n == 1);
  r = pin_probe(named("av321"), 8);
  CHECK(r.exceeded);
  CHECK(pin_probe(named("av321"), 8, 3).survivors == r.survivors);
  CHECK_THROWS_AS(pin_probe(named("av21"), 0), InvalidArgument);
}
