#include "problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "khc/error.hpp"

namespace khc::cli {

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

struct Block {
  std::vector<std::string> header;
  std::vector<Entry> entries;
  std::size_t line = 0;
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& what, std::size_t line) {
  throw ParseError("line " + std::to_string(line) + ": " + what, 0, line);
}

std::vector<Block> split_blocks(const std::string& text) {
  std::vector<Block> blocks;
  std::size_t line = 1;
  std::size_t i = 0;
  auto skip_comment = [&] {
    while (i < text.size() && text[i] != '\n') ++i;
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '#') {
      skip_comment();
      continue;
    }
    Block block;
    block.line = line;
    std::string head;
    while (i < text.size() && text[i] != '{') {
      if (text[i] == '\n') fail("expected '{' after block header", line);
      if (text[i] == '#' || text[i] == '}' || text[i] == ';') fail("expected '{' after block header", line);
      head += text[i++];
    }
    if (i == text.size()) fail("expected '{' after block header", line);
    ++i;
    std::istringstream words(head);
    for (std::string w; words >> w;) block.header.push_back(w);
    if (block.header.empty()) fail("block without a name", line);

    std::string cur;
    std::size_t cur_line = line;
    int depth = 0;
    bool closed = false;
    auto flush = [&] {
      std::string piece = trim(cur);
      cur.clear();
      if (piece.empty()) return;
      auto colon = piece.find(':');
      if (colon == std::string::npos) fail("expected 'key: value' in block '" + block.header[0] + "'", cur_line);
      block.entries.push_back({trim(piece.substr(0, colon)), trim(piece.substr(colon + 1)), cur_line});
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == '#') {
        skip_comment();
        continue;
      }
      if (c == '\n') ++line;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth < 0) fail("unbalanced parenthesis", line);
      if (depth == 0 && (c == ';' || c == '}')) {
        flush();
        ++i;
        if (c == '}') {
          closed = true;
          break;
        }
        continue;
      }
      if (trim(cur).empty()) cur_line = line;
      cur += c;
      ++i;
    }
    if (!closed) fail("block '" + block.header[0] + "' is not closed", block.line);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool parse_bool(const Entry& e) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  fail("expected true or false for '" + e.key + "'", e.line);
}

int parse_int(const Entry& e) {
  try {
    std::size_t used = 0;
    int v = std::stoi(e.value, &used);
    if (used == e.value.size()) return v;
  } catch (const std::exception&) {
  }
  fail("expected an integer for '" + e.key + "'", e.line);
}

template <class F>
auto with_line(const Entry& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& err) {
    fail("in '" + e.key + "': " + err.what(), e.line);
  }
}

const std::map<TaskKind, std::set<std::string>>& allowed_keys() {
  static const std::set<std::string> asserts = {"assert-member", "assert-member-not", "assert-equals",
                                                "assert-contains", "assert-not-contains"};
  auto with = [&](std::initializer_list<const char*> extra) {
    std::set<std::string> s = asserts;
    for (auto k : extra) s.insert(k);
    return s;
  };
  static const std::map<TaskKind, std::set<std::string>> table = {
      {TaskKind::kh, with({"ideal", "route"})},
      {TaskKind::hir, with({"ideal", "mode", "assert-contains-kh"})},
      {TaskKind::hir_hull, with({"ideal", "mode", "max-iter", "assert-contains-kh"})},
      {TaskKind::clpi, with({"ideal", "assert-equals-kh"})},
      {TaskKind::tau, with({})},
      {TaskKind::colon_check, {"params", "t", "a", "k"}},
      {TaskKind::axiom_check, {"ideal", "seed"}},
      {TaskKind::depth_check, {"params"}},
      {TaskKind::counterexample, {"preset"}},
  };
  return table;
}

RingPtr parse_ring(const Block& b) {
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  bool domain = false;
  OrderKind order = OrderKind::grevlex;
  bool have_vars = false;
  for (const auto& e : b.entries) {
    if (e.key == "vars") {
      vars = split_top_level(e.value, ',');
      have_vars = true;
    } else if (e.key == "relations") {
      relations = split_top_level(e.value, ',');
    } else if (e.key == "domain") {
      domain = parse_bool(e);
    } else if (e.key == "order") {
      if (e.value == "grevlex") order = OrderKind::grevlex;
      else if (e.value == "lex") order = OrderKind::lex;
      else fail("unknown monomial order '" + e.value + "'", e.line);
    } else {
      fail("unknown ring key '" + e.key + "'", e.line);
    }
  }
  if (!have_vars || vars.empty()) fail("ring block needs 'vars'", b.line);
  RingPtr ring;
  try {
    ring = RingPresentation::make(vars, relations, order, domain);
  } catch (const Error& err) {
    fail(err.what(), b.line);
  }
  if (ring->is_unit_ideal()) fail("relations generate the unit ideal", b.line);
  return ring;
}

MultiplierModuleSpec parse_multiplier(const Block& b, const RingPtr& ring) {
  MultiplierModuleSpec spec;
  spec.ring = ring;
  spec.mode = MultiplierMode::unit;
  bool have_mode = false;
  for (const auto& e : b.entries) {
    if (e.key == "mode") {
      have_mode = true;
      if (e.value == "submodule-of-R") spec.mode = MultiplierMode::submodule_of_R;
      else if (e.value == "unit") spec.mode = MultiplierMode::unit;
      else if (e.value == "submodule-of-omega") spec.mode = MultiplierMode::submodule_of_omega;
      else fail("unknown multiplier mode '" + e.value + "'", e.line);
    } else if (e.key == "generators") {
      spec.generators = with_line(e, [&] { return parse_ideal_list(*ring, e.value); });
    } else if (e.key == "columns") {
      for (const auto& col : split_top_level(e.value, ',')) {
        if (col.size() < 2 || col.front() != '[' || col.back() != ']')
          fail("columns are written as [a, b, ...]", e.line);
        ModuleElement v;
        for (const auto& p : split_top_level(col.substr(1, col.size() - 2), ','))
          v.push_back(with_line(e, [&] { return ring->parse(p); }));
        spec.omega_columns.push_back(std::move(v));
      }
    } else if (e.key == "omega-is-R") {
      spec.omega_is_R = parse_bool(e);
    } else {
      fail("unknown multiplier key '" + e.key + "'", e.line);
    }
  }
  if (!have_mode) fail("multiplier block needs 'mode'", b.line);
  if (spec.mode == MultiplierMode::unit && !spec.generators.empty())
    fail("mode 'unit' takes no generators", b.line);
  if (spec.mode == MultiplierMode::submodule_of_R && spec.generators.empty())
    fail("mode 'submodule-of-R' needs generators", b.line);
  if (spec.mode == MultiplierMode::submodule_of_omega && spec.omega_columns.empty())
    fail("mode 'submodule-of-omega' needs columns", b.line);
  return spec;
}

Task parse_task(const Block& b, const RingPtr& ring, std::size_t index) {
  if (b.header.size() < 2 || b.header.size() > 3) fail("expected 'task <kind> [name] {'", b.line);
  auto kind = parse_task_kind(b.header[1]);
  if (!kind) fail("unknown task kind '" + b.header[1] + "'", b.line);
  Task t;
  t.kind = *kind;
  t.line = b.line;
  t.name = b.header.size() == 3 ? b.header[2] : b.header[1] + "-" + std::to_string(index + 1);
  const auto& allowed = allowed_keys().at(t.kind);
  std::set<std::string> seen;
  for (const auto& e : b.entries) {
    if (!allowed.count(e.key)) fail("key '" + e.key + "' is not valid for task " + b.header[1], e.line);
    if (!seen.insert(e.key).second) fail("duplicate key '" + e.key + "'", e.line);
    auto list = [&] { return with_line(e, [&] { return parse_ideal_list(*ring, e.value); }); };
    auto items = [&] { return with_line(e, [&] { return parse_ideal_items(*ring, e.value); }); };
    if (e.key == "ideal") t.ideal = list();
    else if (e.key == "params") t.params = list();
    else if (e.key == "route") {
      if (e.value == "cycle-image") t.route = KHRoute::cycle_image;
      else if (e.value == "homology") t.route = KHRoute::homology;
      else fail("unknown route '" + e.value + "'", e.line);
    } else if (e.key == "mode") {
      if (e.value == "over-A") t.hir_mode = HironakaMode::over_A;
      else if (e.value == "over-R") t.hir_mode = HironakaMode::over_R;
      else fail("unknown Hironaka mode '" + e.value + "'", e.line);
    } else if (e.key == "max-iter") t.max_iter = parse_int(e);
    else if (e.key == "t") t.t = parse_int(e);
    else if (e.key == "a") t.a = parse_int(e);
    else if (e.key == "k") t.k = parse_int(e);
    else if (e.key == "seed") t.seed = static_cast<std::uint64_t>(parse_int(e));
    else if (e.key == "preset") {
      t.preset = parse_preset(e.value);
      if (!t.preset) fail("unknown preset '" + e.value + "'", e.line);
    } else if (e.key == "assert-member") t.member = list();
    else if (e.key == "assert-member-not") t.member_not = list();
    else if (e.key == "assert-equals") t.equals = list();
    else if (e.key == "assert-contains") t.contains = items();
    else if (e.key == "assert-not-contains") t.not_contains = items();
    else if (e.key == "assert-equals-kh") t.equals_kh = parse_bool(e);
    else if (e.key == "assert-contains-kh") t.contains_kh = parse_bool(e);
  }
  switch (t.kind) {
    case TaskKind::colon_check:
    case TaskKind::depth_check:
      if (!seen.count("params")) fail("task needs 'params'", b.line);
      break;
    case TaskKind::counterexample:
      if (!t.preset) fail("task needs 'preset'", b.line);
      break;
    case TaskKind::tau:
      break;
    default:
      if (!seen.count("ideal")) fail("task needs 'ideal'", b.line);
  }
  return t;
}

}  // namespace

std::string to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::kh: return "kh";
    case TaskKind::hir: return "hir";
    case TaskKind::hir_hull: return "hir-hull";
    case TaskKind::clpi: return "clpi";
    case TaskKind::tau: return "tau";
    case TaskKind::colon_check: return "colon-check";
    case TaskKind::axiom_check: return "axiom-check";
    case TaskKind::depth_check: return "depth-check";
    case TaskKind::counterexample: return "counterexample";
  }
  return "?";
}

std::optional<TaskKind> parse_task_kind(const std::string& text) {
  for (auto k : {TaskKind::kh, TaskKind::hir, TaskKind::hir_hull, TaskKind::clpi, TaskKind::tau,
                 TaskKind::colon_check, TaskKind::axiom_check, TaskKind::depth_check, TaskKind::counterexample})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

bool Task::has_assertions() const {
  switch (kind) {
    case TaskKind::colon_check:
    case TaskKind::axiom_check:
    case TaskKind::depth_check:
    case TaskKind::counterexample:
      return true;
    default:
      return !member.empty() || !member_not.empty() || equals || !contains.empty() || !not_contains.empty() ||
             equals_kh || contains_kh;
  }
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      auto piece = trim(cur);
      if (!piece.empty()) out.push_back(piece);
      cur.clear();
      continue;
    }
    cur += c;
  }
  auto piece = trim(cur);
  if (!piece.empty()) out.push_back(piece);
  return out;
}

std::vector<std::vector<Polynomial>> parse_ideal_items(const RingPresentation& ring, const std::string& text) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& item : split_top_level(text, ',')) {
    // `(g1, ..., gr)^k` is a power of an ideal; anything else is a polynomial.
    if (item.front() == '(') {
      int depth = 0;
      std::size_t close = std::string::npos;
      for (std::size_t i = 0; i < item.size(); ++i) {
        if (item[i] == '(') ++depth;
        if (item[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      std::string inner = close == std::string::npos ? "" : item.substr(1, close - 1);
      std::string rest = close == std::string::npos ? "" : trim(item.substr(close + 1));
      auto gens = split_top_level(inner, ',');
      if (gens.size() > 1) {
        unsigned k = 1;
        if (!rest.empty()) {
          if (rest[0] != '^') throw ParseError("expected '^' after an ideal in parentheses", close + 1);
          try {
            std::size_t used = 0;
            int v = std::stoi(rest.substr(1), &used);
            if (v < 1 || used + 1 != rest.size()) throw ParseError("bad exponent", close + 2);
            k = static_cast<unsigned>(v);
          } catch (const std::logic_error&) {
            throw ParseError("bad exponent", close + 2);
          }
        }
        std::vector<Polynomial> polys;
        for (const auto& g : gens) polys.push_back(ring.parse(g));
        out.push_back(power_generators(polys, k));
        continue;
      }
    }
    out.push_back({ring.parse(item)});
  }
  return out;
}

std::vector<Polynomial> parse_ideal_list(const RingPresentation& ring, const std::string& text) {
  std::vector<Polynomial> out;
  for (auto& item : parse_ideal_items(ring, text))
    for (auto& p : item) out.push_back(std::move(p));
  return out;
}

Problem parse_problem(const std::string& text, const std::string& source) {
  Problem p;
  p.source = source;
  auto blocks = split_blocks(text);
  const Block* multiplier = nullptr;
  std::vector<const Block*> tasks;
  for (const auto& b : blocks) {
    const std::string& kind = b.header[0];
    if (kind == "ring") {
      if (b.header.size() != 1) fail("ring block takes no name", b.line);
      if (p.ring) fail("more than one ring block", b.line);
      p.ring = parse_ring(b);
    } else if (kind == "multiplier") {
      if (b.header.size() != 1) fail("multiplier block takes no name", b.line);
      if (multiplier) fail("more than one multiplier block", b.line);
      multiplier = &b;
    } else if (kind == "task") {
      tasks.push_back(&b);
    } else {
      fail("unknown block '" + kind + "'", b.line);
    }
  }
  if (!p.ring) throw ParseError("no ring block", 0, 1);
  p.multiplier = multiplier ? parse_multiplier(*multiplier, p.ring) : MultiplierModuleSpec::unit_module(p.ring);
  if (tasks.empty()) throw ParseError("no tasks", 0, blocks.empty() ? 1 : blocks.back().line);
  std::set<std::string> names;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    Task t = parse_task(*tasks[i], p.ring, i);
    if (!names.insert(t.name).second) fail("duplicate task name '" + t.name + "'", t.line);
    p.tasks.push_back(std::move(t));
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path);
}

}  // namespace khc::cli
