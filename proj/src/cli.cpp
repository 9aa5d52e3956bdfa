#include "permwreath/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permwreath/antichain.hpp"
#include "permwreath/avoidance.hpp"
#include "permwreath/basis_search.hpp"
#include "permwreath/decomposition.hpp"
#include "permwreath/minimal_block.hpp"
#include "permwreath/pattern.hpp"
#include "permwreath/pins.hpp"
#include "permwreath/profile.hpp"
#include "permwreath/store.hpp"

namespace permwreath::cli {

using nlohmann::json;

std::string ascii_plot(const Permutation& p) {
  std::string out;
  for (int v = p.size(); v >= 1; --v) {
    for (int i = 0; i < p.size(); ++i) {
      if (i > 0) out += ' ';
      out += p[i] == v ? '*' : '.';
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string join_compact(const std::vector<Permutation>& perms) {
  std::string s;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i > 0) s += ',';
    s += perms[i].to_compact_string();
  }
  return s;
}

std::string segment_text(Segment s) {
  return std::to_string(s.start) + ".." + std::to_string(s.end);
}

json segment_json(Segment s) { return json::array({s.start, s.end}); }

json perm_array(const std::vector<Permutation>& perms) {
  json a = json::array();
  for (const auto& p : perms) a.push_back(p.to_string());
  return a;
}

json point_json(Point p) { return json::array({p.position, p.value}); }

// Everything a subcommand handler produces.
struct Output {
  bool json_mode = false;
  bool plot = false;
  std::ostringstream text;
  std::ostringstream err;
  json data = json::object();
  int exit_code = kExitOk;

  void line(const std::string& s) { text << s << '\n'; }
  void perm(const Permutation& p) {
    text << p.to_compact_string() << '\n';
    if (plot && !json_mode) text << ascii_plot(p);
  }
};

struct Options {
  bool json_mode = false;
  bool plot = false;
  int jobs = 1;

  std::vector<std::string> words;  // positionals
  std::string cls, x, y, store;
  std::optional<int> max_len;
  std::optional<int> cap;
  int pin_cap = 20;
  bool count_only = false;
  bool left = false;
  bool all = false;
};

PermClass load_class(const std::string& text, Output& o) {
  PermClass c = parse_class(text);
  if (!c.dropped().empty()) {
    o.err << "warning: basis of " << text << " normalized to " << c.literal()
          << "; dropped " << join_compact(c.dropped()) << '\n';
  }
  return c;
}

Permutation perm_arg(const Options& opt, std::size_t i) {
  return parse_permutation(opt.words.at(i));
}

int int_arg(const Options& opt, std::size_t i) {
  const std::string& s = opt.words.at(i);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("expected an integer, got '" + s + "'");
}

void need_words(const Options& opt, std::size_t lo, std::size_t hi, const char* usage) {
  if (opt.words.size() < lo || opt.words.size() > hi) {
    throw InvalidArgument(std::string("usage: ") + usage);
  }
}

void need_flag(const std::string& value, const char* flag) {
  if (value.empty()) throw InvalidArgument(std::string(flag) + " is required");
}

void verdict(Output& o, bool yes, const char* yes_text, const char* no_text) {
  o.line(yes ? yes_text : no_text);
  if (!yes) o.exit_code = kExitNegative;
}

void cmd_involve(const Options& opt, Output& o) {
  need_words(opt, 2, 2, "involve SIGMA PI");
  const Permutation sigma = perm_arg(opt, 0), pi = perm_arg(opt, 1);
  auto occ = PatternMatcher(sigma).first_in(pi);
  o.data = {{"pattern", sigma.to_string()}, {"text", pi.to_string()},
            {"involves", occ.has_value()}};
  if (occ) o.data["occurrence"] = *occ;
  verdict(o, occ.has_value(), "yes", "no");
}

void cmd_occurrences(const Options& opt, Output& o) {
  need_words(opt, 2, 2, "occurrences SIGMA PI");
  const Permutation sigma = perm_arg(opt, 0), pi = perm_arg(opt, 1);
  const auto n = occurrences(sigma, pi);
  o.data = {{"pattern", sigma.to_string()}, {"text", pi.to_string()}, {"count", n}};
  o.line(std::to_string(n));
}

void cmd_inflate(const Options& opt, Output& o) {
  need_words(opt, 2, SIZE_MAX, "inflate PI BLOCK...");
  const Permutation pi = perm_arg(opt, 0);
  std::vector<Permutation> blocks;
  for (std::size_t i = 1; i < opt.words.size(); ++i) blocks.push_back(perm_arg(opt, i));
  const Permutation r = inflate(pi, blocks);
  o.data = {{"result", r.to_string()}};
  o.perm(r);
}

void cmd_reduce(const Options& opt, Output& o) {
  need_words(opt, 1, SIZE_MAX, "reduce SEQUENCE");
  std::string joined;
  for (const auto& w : opt.words) joined += w + ' ';
  const Permutation r = reduce(parse_sequence(joined));
  o.data = {{"result", r.to_string()}};
  o.perm(r);
}

void cmd_intervals(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "intervals PI");
  const Permutation pi = perm_arg(opt, 0);
  json a = json::array();
  for (Segment s : intervals(pi)) {
    a.push_back(segment_json(s));
    o.line(segment_text(s) + " " + pattern_of(pi, s).to_compact_string());
  }
  o.data = {{"intervals", a}};
}

void cmd_simple(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "simple PI");
  const bool s = is_simple(perm_arg(opt, 0));
  o.data = {{"simple", s}};
  verdict(o, s, "simple", "not simple");
}

void cmd_skeleton(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "skeleton PI");
  const Permutation s = skeleton(perm_arg(opt, 0));
  o.data = {{"skeleton", s.to_string()}};
  o.perm(s);
}

void cmd_decompose(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "decompose PI");
  const Permutation pi = perm_arg(opt, 0);
  const auto d = substitution_decomposition(pi);
  json blocks = json::array();
  for (std::size_t i = 0; i < d.block_segments.size(); ++i) {
    blocks.push_back({{"positions", segment_json(d.block_segments[i])},
                      {"pattern", d.block_patterns[i].to_string()}});
  }
  const std::string status =
      pi.size() >= 2 ? std::string(to_string(sum_skew_status(pi))) : "trivial";
  o.data = {{"skeleton", d.skeleton.to_string()}, {"blocks", blocks}, {"status", status}};
  o.line(d.skeleton.to_compact_string() + "[" + join_compact(d.block_patterns) + "]");
  o.line(status);
}

void cmd_member(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "member PI --class C");
  need_flag(opt.cls, "--class");
  const PermClass c = load_class(opt.cls, o);
  const Permutation pi = perm_arg(opt, 0);
  const auto bad = c.violated_by(pi);
  o.data = {{"member", !bad}, {"class", c.literal()}};
  if (bad) o.data["contains"] = bad->to_string();
  verdict(o, !bad, "member", "non-member");
}

void cmd_enumerate(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "enumerate N --class C");
  need_flag(opt.cls, "--class");
  const PermClass c = load_class(opt.cls, o);
  const auto perms = enumerate(c, int_arg(opt, 0), opt.max_len.value_or(kEnumerationCap));
  o.data = {{"class", c.literal()}, {"count", perms.size()}};
  if (opt.count_only) {
    o.line(std::to_string(perms.size()));
    return;
  }
  o.data["perms"] = perm_array(perms);
  for (const auto& p : perms) o.line(p.to_compact_string());
}

void cmd_profile(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "profile PI --y C");
  need_flag(opt.y, "--y");
  const PermClass y = load_class(opt.y, o);
  const auto d = left_greedy_profile(perm_arg(opt, 0), y);
  json segs = json::array();
  for (Segment s : d.segments) segs.push_back(segment_json(s));
  o.data = {{"profile", d.profile.to_string()},
            {"segments", segs},
            {"blocks", perm_array(d.block_patterns)}};
  o.perm(d.profile);
}

void cmd_deflations(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "deflations PI --y C");
  need_flag(opt.y, "--y");
  const PermClass y = load_class(opt.y, o);
  const auto all =
      all_y_deflations(perm_arg(opt, 0), y, opt.max_len.value_or(kDeflationOracleCap));
  std::vector<Permutation> v(all.begin(), all.end());
  o.data = {{"deflations", perm_array(v)}};
  for (const auto& p : v) o.line(p.to_compact_string());
}

void cmd_wreath_member(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "wreath-member PI --x C --y C");
  need_flag(opt.x, "--x");
  need_flag(opt.y, "--y");
  const PermClass x = load_class(opt.x, o), y = load_class(opt.y, o);
  const Permutation pi = perm_arg(opt, 0);
  const auto d = left_greedy_profile(pi, y);
  const bool in = x.contains(d.profile);
  o.data = {{"member", in}, {"profile", d.profile.to_string()}};
  verdict(o, in, "member", "non-member");
}

void cmd_minblock(const Options& opt, Output& o) {
  need_words(opt, 3, 3, "minblock PI I J");
  const auto mb = minimal_block(perm_arg(opt, 0), int_arg(opt, 1), int_arg(opt, 2));
  o.data = {{"pattern", mb.pattern.to_string()},
            {"positions", segment_json(mb.positions)},
            {"values", segment_json(mb.values)}};
  o.perm(mb.pattern);
  std::string entries = "entries";
  for (int q = mb.positions.start; q <= mb.positions.end; ++q) {
    entries += " " + std::to_string(mb.host.at(q));
  }
  o.line(entries);
  o.line("positions " + segment_text(mb.positions));
  o.line("values " + segment_text(mb.values));
}

void report_pins(const PinSequence& seq, Output& o) {
  json pts = json::array();
  for (std::size_t i = 0; i < seq.points.size(); ++i) {
    const Point p = seq.points[i];
    json e = {{"index", i + 1}, {"point", point_json(p)}};
    std::string s = "p" + std::to_string(i + 1) + " (" + std::to_string(p.position) +
                    "," + std::to_string(p.value) + ")";
    if (i >= 2) {
      const Pin& pin = seq.pins[i - 2];
      e["direction"] = std::string(1, to_char(pin.direction));
      e["maximal"] = pin.maximal;
      e["separating"] = pin.separating;
      e["proper"] = pin.proper();
      s += std::string(" ") + to_char(pin.direction) +
           (pin.proper() ? " proper" : " non-proper");
      if (!pin.proper()) {
        s += pin.separating ? " (not extremal)"
                            : (pin.maximal ? " (not separating)"
                                           : " (not separating, not extremal)");
      }
    }
    pts.push_back(e);
    o.line(s);
  }
  std::string dirs;
  for (PinDirection d : seq.directions()) dirs += to_char(d);
  o.data["points"] = pts;
  o.data["directions"] = dirs;
  o.data["all_proper"] = seq.all_proper();
}

void cmd_pins_classify(const Options& opt, Output& o) {
  need_words(opt, 2, SIZE_MAX, "pins classify HOST POS...");
  const Permutation host = perm_arg(opt, 0);
  std::vector<Point> points;
  for (std::size_t i = 1; i < opt.words.size(); ++i) {
    points.push_back(host.point(int_arg(opt, i)));
  }
  try {
    report_pins(classify_pins(host, points), o);
  } catch (const PinConditionError& e) {
    o.data = {{"pin_sequence", false}, {"index", e.index()}, {"condition", e.condition()}};
    o.line(std::string("not a pin sequence: ") + e.what());
    o.exit_code = kExitNegative;
  }
}

void cmd_pins_word(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "pins word WORD");
  const PinWord w = PinWord::parse(opt.words[0]);
  const Permutation p = pin_word_to_perm(w);
  o.data = {{"word", w.to_string()}, {"perm", p.to_string()}};
  o.perm(p);
}

void cmd_pins_reach(const Options& opt, Output& o) {
  need_words(opt, 3, 3, "pins reach PI I J [--left]");
  const Permutation pi = perm_arg(opt, 0);
  const int i = int_arg(opt, 1), j = int_arg(opt, 2);
  report_pins(opt.left ? left_reaching(pi, i, j) : right_reaching(pi, i, j), o);
}

void cmd_pin_probe(const Options& opt, Output& o) {
  need_words(opt, 0, 0, "pin-probe --y C [--pin-cap N]");
  need_flag(opt.y, "--y");
  const PermClass y = load_class(opt.y, o);
  const auto r = pin_probe(y, opt.pin_cap, opt.jobs);
  json words = json::array();
  for (const auto& w : r.survivors) words.push_back(w.to_string());
  o.data = {{"class", y.literal()}, {"cap", opt.pin_cap}, {"exceeded", r.exceeded}};
  if (r.exceeded) {
    o.data["survivors"] = words;
    o.line("exceeded");
    for (const auto& w : r.survivors) o.line(w.to_string());
    o.exit_code = kExitLimit;
  } else {
    o.data["n"] = r.n;
    o.line("N=" + std::to_string(r.n));
  }
}

void cmd_basis(const Options& opt, Output& o) {
  need_words(opt, 0, 0, "basis --x C --y C [--max-len N] [--store PATH]");
  need_flag(opt.x, "--x");
  need_flag(opt.y, "--y");
  const PermClass x = load_class(opt.x, o), y = load_class(opt.y, o);
  BasisSearchOptions so;
  so.max_len = opt.max_len.value_or(so.max_len);
  so.cap = opt.cap.value_or(kBasisSearchCap);
  so.jobs = opt.jobs;

  std::string store = opt.store;
  if (store.empty()) {
    if (const char* env = std::getenv(kStoreEnvVar)) store = env;
  }
  std::vector<BasisRecord> records;
  const std::string job = job_key(x, y);
  if (!store.empty()) {
    const auto done = store_resume(store);
    const auto it = done.find(job);
    const int resumed = it == done.end() ? 0 : it->second;
    so.skip_through = std::min(resumed, so.max_len);
    for (auto& r : stored_records(store, job)) {
      if (r.length <= so.skip_through) records.push_back(std::move(r));
    }
    so.on_length_done = [&](int n, const std::vector<BasisRecord>& found) {
      for (const auto& r : found) store_append(store, basis_record_line(job, r));
      store_append(store, length_complete_line(job, n));
    };
    if (resumed > 0) o.err << "resuming after length " << resumed << '\n';
  }
  // Validate the cap before touching the store.
  if (so.max_len > so.cap || so.cap > 16) {
    throw LimitExceeded("basis search length " + std::to_string(so.max_len) +
                        " exceeds cap " + std::to_string(so.cap));
  }
  for (auto& r : wreath_basis(x, y, so)) records.push_back(std::move(r));
  std::sort(records.begin(), records.end(),
            [](const BasisRecord& a, const BasisRecord& b) { return a.perm < b.perm; });

  json a = json::array();
  for (const auto& r : records) {
    a.push_back(to_json(r));
    o.line(r.perm.to_compact_string());
  }
  o.data = {{"x", x.literal()}, {"y", y.literal()}, {"max_len", so.max_len}, {"records", a}};
}

void cmd_verify_basis(const Options& opt, Output& o) {
  need_words(opt, 1, 1, "verify-basis PI --x C --y C");
  need_flag(opt.x, "--x");
  need_flag(opt.y, "--y");
  const PermClass x = load_class(opt.x, o), y = load_class(opt.y, o);
  const auto v = verify_basis_element(perm_arg(opt, 0), x, y);
  o.data = {{"basis_element", v.is_basis_element}, {"member", v.pi_is_member}};
  if (v.deleted_position) o.data["deleted_position"] = *v.deleted_position;
  if (v.witness) o.data["witness"] = v.witness->to_string();
  if (v.is_basis_element) {
    o.line("basis element");
    return;
  }
  o.exit_code = kExitNegative;
  if (v.pi_is_member) {
    o.line("not a basis element: member of the wreath product");
  } else {
    std::string s = "not a basis element";
    if (v.deleted_position) {
      s += ": deleting position " + std::to_string(*v.deleted_position) + " leaves non-member";
      if (v.witness) s += " " + v.witness->to_string();
    }
    o.line(s);
  }
}

void cmd_antichain_gen(const Options& opt, Output& o) {
  need_words(opt, 2, 2, "antichain gen FAMILY K [--all]");
  const AntichainFamily f = parse_family(opt.words[0]);
  const int k = int_arg(opt, 1);
  json a = json::array();
  for (int i = opt.all ? 1 : k; i <= k; ++i) {
    const Permutation p = antichain_member(f, i);
    a.push_back(p.to_string());
    o.perm(p);
  }
  o.data = {{"family", std::string(to_string(f))}, {"members", a}};
}

void cmd_antichain_check(const Options& opt, Output& o) {
  need_words(opt, 1, SIZE_MAX, "antichain check PI...");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < opt.words.size(); ++i) perms.push_back(perm_arg(opt, i));
  const auto pair = comparable_pair(perms);
  o.data = {{"antichain", !pair}};
  if (!pair) {
    o.line("antichain");
    return;
  }
  Permutation a = perms[pair->first], b = perms[pair->second];
  if (!involves(a, b)) std::swap(a, b);
  o.data["comparable"] = {a.to_string(), b.to_string()};
  o.line("comparable: " + a.to_compact_string() + " <= " + b.to_compact_string());
  o.exit_code = kExitNegative;
}

void cmd_classes(const Options&, Output& o) {
  json a = json::array();
  for (const auto& name : default_registry().names()) {
    const auto& c = default_registry().get(name);
    a.push_back({{"name", name}, {"literal", c.literal()}});
    o.line(name + " " + c.literal());
  }
  o.data = {{"classes", a}};
}

using Handler = void (*)(const Options&, Output&);

}  // namespace

CommandResult execute(const std::vector<std::string>& args) {
  CLI::App app{"Permutation classes, wreath products and pin sequences", "permwreath"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_mode, "structured output");
  app.add_flag("--ascii-plot", opt.plot, "plot printed permutations");
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1, 256));

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](CLI::App* parent, const char* name, const char* help, Handler h) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->add_option("args", opt.words);
    handlers.emplace_back(s, h);
    return s;
  };

  sub(&app, "involve", "does SIGMA occur in PI", cmd_involve);
  sub(&app, "occurrences", "count occurrences of SIGMA in PI", cmd_occurrences);
  sub(&app, "inflate", "inflate PI by blocks", cmd_inflate);
  sub(&app, "reduce", "pattern of a sequence", cmd_reduce);
  sub(&app, "intervals", "all intervals of PI", cmd_intervals);
  sub(&app, "simple", "is PI simple", cmd_simple);
  sub(&app, "skeleton", "simple skeleton of PI", cmd_skeleton);
  sub(&app, "decompose", "substitution decomposition of PI", cmd_decompose);
  sub(&app, "member", "membership in a class", cmd_member)
      ->add_option("--class", opt.cls, "class literal or name");
  {
    auto* s = sub(&app, "enumerate", "members of a class of length N", cmd_enumerate);
    s->add_option("--class", opt.cls, "class literal or name");
    s->add_option("--max-len", opt.max_len, "length cap");
    s->add_flag("--count", opt.count_only, "print only the count");
  }
  sub(&app, "profile", "left-greedy Y-profile", cmd_profile)
      ->add_option("--y", opt.y, "class Y");
  {
    auto* s = sub(&app, "deflations", "all Y-deflations (brute force)", cmd_deflations);
    s->add_option("--y", opt.y, "class Y");
    s->add_option("--max-len", opt.max_len, "length cap");
  }
  {
    auto* s = sub(&app, "wreath-member", "membership in X wr Y", cmd_wreath_member);
    s->add_option("--x", opt.x, "class X");
    s->add_option("--y", opt.y, "class Y");
  }
  sub(&app, "minblock", "minimal block containing positions I and J", cmd_minblock);
  {
    CLI::App* pins = app.add_subcommand("pins", "pin sequences");
    pins->require_subcommand(1);
    sub(pins, "classify", "classify the pins at the given positions", cmd_pins_classify);
    sub(pins, "word", "permutation of a pin word", cmd_pins_word);
    sub(pins, "reach", "right- or left-reaching pin sequence", cmd_pins_reach)
        ->add_flag("--left", opt.left, "left-reaching");
  }
  {
    auto* s = sub(&app, "pin-probe", "bound proper pin words inside Y", cmd_pin_probe);
    s->add_option("--y", opt.y, "class Y");
    s->add_option("--pin-cap", opt.pin_cap, "word length cap");
  }
  {
    auto* s = sub(&app, "basis", "basis of X wr Y up to a length", cmd_basis);
    s->add_option("--x", opt.x, "class X");
    s->add_option("--y", opt.y, "class Y");
    s->add_option("--max-len", opt.max_len, "longest length searched");
    s->add_option("--cap", opt.cap, "hard length cap");
    s->add_option("--store", opt.store, "JSON-lines store (default $PERMWREATH_STORE)");
  }
  {
    auto* s = sub(&app, "verify-basis", "is PI a basis element of X wr Y", cmd_verify_basis);
    s->add_option("--x", opt.x, "class X");
    s->add_option("--y", opt.y, "class Y");
  }
  {
    CLI::App* ac = app.add_subcommand("antichain", "antichain families");
    ac->require_subcommand(1);
    sub(ac, "gen", "k-th member of a family", cmd_antichain_gen)
        ->add_flag("--all", opt.all, "members 1..k");
    sub(ac, "check", "pairwise incomparability", cmd_antichain_check);
  }
  sub(&app, "classes", "named classes", cmd_classes);

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }

  Handler handler = nullptr;
  for (auto& [s, h] : handlers) {
    if (s->parsed()) handler = h;
  }
  if (!handler) {
    result.exit_code = kExitUsage;
    result.err = app.help();
    return result;
  }

  Output o;
  o.json_mode = opt.json_mode;
  o.plot = opt.plot;
  try {
    handler(opt, o);
  } catch (const LimitExceeded& e) {
    o.exit_code = kExitLimit;
    o.err << "limit: " << e.what() << '\n';
    o.text.str("");
    o.data = {{"error", e.what()}};
  } catch (const std::exception& e) {
    o.exit_code = kExitUsage;
    o.err << "error: " << e.what() << '\n';
    o.text.str("");
    o.data = {{"error", e.what()}};
  }
  result.exit_code = o.exit_code;
  result.out = o.json_mode ? o.data.dump(2) + "\n" : o.text.str();
  result.err = o.err.str();
  return result;
}

}  // namespace permwreath::cli
