#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "khc/closure.hpp"

namespace khc::cli {

enum class TaskKind { kh, hir, hir_hull, clpi, tau, colon_check, axiom_check, depth_check, counterexample };

std::string to_string(TaskKind kind);
std::optional<TaskKind> parse_task_kind(const std::string& text);

struct Task {
  TaskKind kind = TaskKind::kh;
  std::string name;
  std::size_t line = 0;

  std::vector<Polynomial> ideal;
  std::vector<Polynomial> params;

  KHRoute route = KHRoute::cycle_image;
  HironakaMode hir_mode = HironakaMode::over_R;
  int max_iter = 10;
  int t = 2, a = 1, k = 1;
  std::optional<CounterexamplePreset> preset;
  std::optional<std::uint64_t> seed;

  // assertions
  std::vector<Polynomial> member;
  std::vector<Polynomial> member_not;
  std::optional<std::vector<Polynomial>> equals;
  /// Each entry is one ideal that must (not) be contained in the result.
  std::vector<std::vector<Polynomial>> contains;
  std::vector<std::vector<Polynomial>> not_contains;
  bool equals_kh = false;
  bool contains_kh = false;

  bool has_assertions() const;
};

struct Problem {
  std::string source;
  RingPtr ring;
  MultiplierModuleSpec multiplier;
  std::vector<Task> tasks;
};

/// Parses and validates a problem file.  Errors are ParseError with the
/// 1-based line set.
Problem parse_problem(const std::string& text, const std::string& source = "<input>");
Problem load_problem(const std::string& path);

/// Items of an ideal list: polynomials and `(g1, ..., gr)^k` powers.
/// Returns one generator list per item.
std::vector<std::vector<Polynomial>> parse_ideal_items(const RingPresentation& ring, const std::string& text);
std::vector<Polynomial> parse_ideal_list(const RingPresentation& ring, const std::string& text);

/// Splits on `sep` outside parentheses and brackets; pieces are trimmed and
/// empty pieces dropped.
std::vector<std::string> split_top_level(const std::string& text, char sep);

}  // namespace khc::cli
