#include "permwreath/pins.hpp"

#include <algorithm>
#include <thread>

#include "permwreath/minimal_block.hpp"

namespace permwreath {

char to_char(PinDirection d) {
  switch (d) {
    case PinDirection::left:
      return 'L';
    case PinDirection::right:
      return 'R';
    case PinDirection::up:
      return 'U';
    case PinDirection::down:
      return 'D';
  }
  return '?';
}

PinDirection direction_from_char(char c) {
  switch (c) {
    case 'L':
      return PinDirection::left;
    case 'R':
      return PinDirection::right;
    case 'U':
      return PinDirection::up;
    case 'D':
      return PinDirection::down;
    default:
      throw InvalidArgument(std::string("not a pin direction: '") + c + "'");
  }
}

Rect Rect::around(std::span<const Point> points) {
  Rect r{points.front().position, points.front().position, points.front().value,
         points.front().value};
  for (const Point& p : points) {
    r.left = std::min(r.left, p.position);
    r.right = std::max(r.right, p.position);
    r.bottom = std::min(r.bottom, p.value);
    r.top = std::max(r.top, p.value);
  }
  return r;
}

std::optional<PinDirection> slice_direction(Point q, const Rect& r) {
  if (r.contains(q)) return std::nullopt;
  if (r.left < q.position && q.position < r.right) {
    return q.value > r.top ? PinDirection::up : PinDirection::down;
  }
  if (r.bottom < q.value && q.value < r.top) {
    return q.position > r.right ? PinDirection::right : PinDirection::left;
  }
  return std::nullopt;
}

bool separates(Point q, Point previous, const Rect& before) {
  if (previous.position > before.right) {
    return before.right < q.position && q.position < previous.position;
  }
  if (previous.position < before.left) {
    return previous.position < q.position && q.position < before.left;
  }
  if (previous.value > before.top) {
    return before.top < q.value && q.value < previous.value;
  }
  if (previous.value < before.bottom) {
    return previous.value < q.value && q.value < before.bottom;
  }
  return false;
}

namespace {

// Larger is more extreme in direction d.
int reach(PinDirection d, Point p) {
  switch (d) {
    case PinDirection::right:
      return p.position;
    case PinDirection::left:
      return -p.position;
    case PinDirection::up:
      return p.value;
    case PinDirection::down:
      return -p.value;
  }
  return 0;
}

std::vector<Point> points_in(const Permutation& pi, Segment positions) {
  std::vector<Point> out;
  for (int p = positions.start; p <= positions.end; ++p) out.push_back(pi.point(p));
  return out;
}

bool admissible(Point q, PinDirection d, std::span<const Point> seq) {
  const Rect r = Rect::around(seq);
  if (slice_direction(q, r) != d) return false;
  if (seq.size() < 3) return true;
  return separates(q, seq.back(), Rect::around(seq.first(seq.size() - 1)));
}

// The proper pin in direction d that may follow seq, if any.
std::optional<Point> proper_next(std::span<const Point> region,
                                 std::span<const Point> seq, PinDirection d) {
  std::optional<Point> best;
  for (const Point& q : region) {
    if (!admissible(q, d, seq)) continue;
    if (!best || reach(d, q) > reach(d, *best)) best = q;
  }
  return best;
}

constexpr PinDirection kDirectionOrder[] = {PinDirection::right, PinDirection::up,
                                            PinDirection::left, PinDirection::down};

bool is_valid_pin_sequence(std::span<const Point> seq) {
  for (std::size_t k = 2; k < seq.size(); ++k) {
    if (!slice_direction(seq[k], Rect::around(seq.first(k)))) return false;
  }
  return true;
}

bool contains_point(std::span<const Point> seq, Point p) {
  return std::find(seq.begin(), seq.end(), p) != seq.end();
}

// Reaching the target means the target is in the sequence and, past the
// start pair, is the final pin.
bool reaches(std::span<const Point> seq, Point target) {
  if (seq.size() <= 2) return contains_point(seq, target);
  return seq.back() == target;
}

}  // namespace

bool PinSequence::all_proper() const {
  return std::all_of(pins.begin(), pins.end(), [](const Pin& p) { return p.proper(); });
}

std::vector<PinDirection> PinSequence::directions() const {
  std::vector<PinDirection> out;
  for (const Pin& p : pins) out.push_back(p.direction);
  return out;
}

PinConditionError::PinConditionError(int index, std::string condition)
    : InvalidArgument("pin p" + std::to_string(index) + " violates: " + condition),
      index_(index),
      condition_(std::move(condition)) {}

PinSequence classify_pins(const Permutation& host, std::span<const Point> points) {
  if (points.size() < 2) {
    throw InvalidArgument("a pin sequence needs at least two points");
  }
  for (const Point& p : points) {
    if (p.position < 1 || p.position > host.size() || host.at(p.position) != p.value) {
      throw InvalidArgument("point (" + std::to_string(p.position) + "," +
                            std::to_string(p.value) + ") is not a point of the host");
    }
  }
  if (points[0] == points[1]) {
    throw PinConditionError(2, "p2 must differ from p1");
  }
  const std::vector<Point> everything = points_in(host, {1, host.size()});

  PinSequence out{host, {points.begin(), points.end()}, {}};
  for (std::size_t k = 2; k < points.size(); ++k) {
    const auto before = points.first(k);
    const Rect r = Rect::around(before);
    const Point q = points[k];
    const int index = static_cast<int>(k) + 1;
    if (r.contains(q)) {
      throw PinConditionError(index, "lies inside the rectangle of the earlier pins");
    }
    const auto d = slice_direction(q, r);
    if (!d) {
      throw PinConditionError(index,
                              "does not slice the rectangle of the earlier pins");
    }
    Pin pin{q, *d, true, true};
    if (k >= 3) {
      pin.separating = separates(q, points[k - 1], Rect::around(before.first(k - 1)));
    }
    for (const Point& c : everything) {
      if (admissible(c, *d, before) && reach(*d, c) > reach(*d, q)) {
        pin.maximal = false;
        break;
      }
    }
    out.pins.push_back(pin);
  }
  return out;
}

PinWord PinWord::parse(std::string_view text) {
  // "12" alone is the empty word
  const auto colon = std::min(text.find(':'), text.size());
  PinWord w;
  const auto origin = text.substr(0, colon);
  if (origin == "12") {
    w.increasing_origin = true;
  } else if (origin == "21") {
    w.increasing_origin = false;
  } else {
    throw InvalidArgument("pin word origin must be 12 or 21");
  }
  for (char c : text.substr(std::min(colon + 1, text.size()))) {
    w.letters += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  w.validate();
  return w;
}

void PinWord::validate() const {
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const PinDirection d = direction_from_char(letters[k]);
    if (k > 0 && !perpendicular(direction_from_char(letters[k - 1]), d)) {
      throw InvalidArgument("pin word letters " + std::to_string(k) + " and " +
                            std::to_string(k + 1) + " are not perpendicular");
    }
  }
}

std::string PinWord::to_string() const {
  return (increasing_origin ? "12:" : "21:") + letters;
}

Permutation pin_word_to_perm(const PinWord& word) {
  word.validate();
  std::vector<Point> pts = word.increasing_origin
                               ? std::vector<Point>{{1, 1}, {2, 2}}
                               : std::vector<Point>{{1, 2}, {2, 1}};
  auto open_value = [&](int v) {
    for (Point& q : pts) {
      if (q.value >= v) ++q.value;
    }
  };
  auto open_position = [&](int p) {
    for (Point& q : pts) {
      if (q.position >= p) ++q.position;
    }
  };

  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    const PinDirection d = direction_from_char(word.letters[k]);
    const int n = static_cast<int>(pts.size());
    int position = 0, value = 0;
    if (is_horizontal(d)) {
      if (k == 0) {
        value = std::max(pts[0].value, pts[1].value);  // between p_1 and p_2
      } else {
        // Previous pin was vertical; sit just inside it.
        const Point prev = pts.back();
        value = word.letters[k - 1] == 'U' ? prev.value : prev.value + 1;
      }
      open_value(value);
      if (d == PinDirection::right) {
        position = n + 1;
      } else {
        open_position(1);
        position = 1;
      }
    } else {
      if (k == 0) {
        position = std::max(pts[0].position, pts[1].position);
      } else {
        const Point prev = pts.back();
        position = word.letters[k - 1] == 'R' ? prev.position : prev.position + 1;
      }
      open_position(position);
      if (d == PinDirection::up) {
        value = n + 1;
      } else {
        open_value(1);
        value = 1;
      }
    }
    pts.push_back({position, value});
  }

  std::vector<int> values(pts.size());
  for (const Point& q : pts) values[q.position - 1] = q.value;
  return Permutation(std::move(values));
}

std::vector<Point> saturated_pin_sequence(const Permutation& pi, int i, int j) {
  const MinimalBlock mb = minimal_block(pi, i, j);
  const std::vector<Point> region = points_in(pi, mb.positions);
  const Rect target{mb.positions.start, mb.positions.end, mb.values.start,
                    mb.values.end};
  std::vector<Point> seq{pi.point(i), pi.point(j)};
  while (true) {
    const Rect r = Rect::around(seq);
    if (r.left == target.left && r.right == target.right &&
        r.bottom == target.bottom && r.top == target.top) {
      break;
    }
    std::optional<Point> next;
    for (PinDirection d : kDirectionOrder) {
      for (const Point& q : region) {
        if (slice_direction(q, r) == d && (!next || reach(d, q) > reach(d, *next))) {
          next = q;
        }
      }
      if (next) break;
    }
    if (!next) break;  // cannot happen inside a minimal block
    seq.push_back(*next);
  }
  return seq;
}

std::optional<PinSequence> right_reaching_search(const Permutation& pi, int i, int j) {
  const MinimalBlock mb = minimal_block(pi, i, j);
  const std::vector<Point> region = points_in(pi, mb.positions);
  const Point target = pi.point(mb.positions.end);

  std::vector<std::vector<Point>> stack{{pi.point(i), pi.point(j)}};
  while (!stack.empty()) {
    std::vector<Point> seq = std::move(stack.back());
    stack.pop_back();
    if (reaches(seq, target)) return classify_pins(pi, seq);
    // Push in reverse so R is explored first.
    for (auto it = std::rbegin(kDirectionOrder); it != std::rend(kDirectionOrder); ++it) {
      if (auto q = proper_next(region, seq, *it)) {
        auto longer = seq;
        longer.push_back(*q);
        stack.push_back(std::move(longer));
      }
    }
  }
  return std::nullopt;
}

PinSequence right_reaching(const Permutation& pi, int i, int j) {
  const MinimalBlock mb = minimal_block(pi, i, j);
  const Point target = pi.point(mb.positions.end);
  const Point p1 = pi.point(i), p2 = pi.point(j);
  if (p2 == target) return classify_pins(pi, std::vector<Point>{p1, p2});

  const std::vector<Point> sat = saturated_pin_sequence(pi, i, j);
  const auto found = std::find(sat.begin(), sat.end(), target);
  if (found != sat.end()) {
    // Walk back from the rightmost point: each step keeps the shortest prefix
    // after which the current pin is still a valid pin.
    std::vector<std::size_t> chain{static_cast<std::size_t>(found - sat.begin())};
    while (true) {
      const std::size_t current = chain.back();
      std::size_t next = current;
      for (std::size_t k = 1; k < current; ++k) {
        std::vector<Point> trial(sat.begin(), sat.begin() + k + 1);
        trial.push_back(sat[current]);
        if (is_valid_pin_sequence(trial)) {
          next = k;
          break;
        }
      }
      if (next == 1 || next == current) break;
      chain.push_back(next);
    }
    std::vector<Point> seq{p1, p2};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) seq.push_back(sat[*it]);
    try {
      PinSequence result = classify_pins(pi, seq);
      if (result.all_proper() && reaches(result.points, target)) return result;
    } catch (const PinConditionError&) {
      // fall through to the search
    }
  }
  if (auto searched = right_reaching_search(pi, i, j)) return *searched;
  throw Error("no proper right-reaching pin sequence for (" + std::to_string(i) +
              ", " + std::to_string(j) + ") in " + pi.to_string());
}

PinSequence left_reaching(const Permutation& pi, int i, int j) {
  const int n = pi.size();
  if (i < 1 || j > n || i >= j) {
    throw InvalidArgument("left_reaching needs 1 <= i < j <= n");
  }
  const Permutation rc = pi.reverse_complement();
  const PinSequence mirrored = right_reaching(rc, n + 1 - j, n + 1 - i);
  std::vector<Point> seq;
  for (const Point& q : mirrored.points) {
    seq.push_back({n + 1 - q.position, n + 1 - q.value});
  }
  std::swap(seq[0], seq[1]);  // restore p_1 = (i, pi(i))
  return classify_pins(pi, seq);
}

PinProbeResult pin_probe(const PermClass& y, int cap, int jobs) {
  if (cap < 1) throw InvalidArgument("pin probe cap must be >= 1");
  jobs = std::max(1, jobs);

  std::vector<PinWord> level;
  for (bool increasing : {true, false}) {
    PinWord w{increasing, ""};
    if (y.contains(pin_word_to_perm(w))) level.push_back(w);
  }
  if (level.empty()) return {false, 0, {}};

  auto extend = [&](std::span<const PinWord> words, std::vector<PinWord>& out) {
    for (const PinWord& w : words) {
      std::string options = "RULD";
      if (!w.letters.empty()) {
        options = is_horizontal(direction_from_char(w.letters.back())) ? "UD" : "RL";
      }
      for (char c : options) {
        PinWord longer{w.increasing_origin, w.letters + c};
        if (y.contains(pin_word_to_perm(longer))) out.push_back(std::move(longer));
      }
    }
  };

  for (int depth = 1; depth <= cap; ++depth) {
    std::vector<PinWord> next;
    const std::size_t workers = std::min<std::size_t>(jobs, level.size());
    if (workers <= 1) {
      extend(level, next);
    } else {
      std::vector<std::vector<PinWord>> parts(workers);
      std::vector<std::thread> threads;
      const std::size_t chunk = (level.size() + workers - 1) / workers;
      for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t lo = std::min(level.size(), t * chunk);
        const std::size_t hi = std::min(level.size(), lo + chunk);
        threads.emplace_back([&, t, lo, hi] {
          extend(std::span<const PinWord>(level).subspan(lo, hi - lo), parts[t]);
        });
      }
      for (auto& th : threads) th.join();
      for (auto& part : parts) {
        next.insert(next.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
      }
    }
    if (next.empty()) return {false, depth, {}};
    level = std::move(next);
  }
  return {true, cap, std::move(level)};
}

}  // namespace permwreath
