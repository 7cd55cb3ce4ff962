#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "problem.hpp"

namespace khc::cli {

struct Verdict {
  std::string label;
  bool ok = false;
};

enum class TaskStatus { done, pass, fail, error, skipped };
std::string to_string(TaskStatus s);

struct TaskReport {
  std::string name;
  TaskKind kind = TaskKind::kh;
  /// Closure operation tag ("kh", "hir-over-R", ...) or the task kind.
  std::string op;
  bool has_assertions = false;
  TaskStatus status = TaskStatus::done;
  std::string error;
  std::optional<SubmoduleBasis> result;
  /// Canonical generators of `result`.
  std::vector<std::string> ideal;
  std::vector<Verdict> verdicts;
  std::vector<std::string> details;
  double seconds = 0;
  std::optional<ClosureDiagnostics> diagnostics;
};

struct RunReport {
  std::string source;
  std::vector<TaskReport> tasks;
  /// Assertion-bearing tasks that failed or raised.
  std::size_t failures() const;
  int exit_status() const { return failures() == 0 ? 0 : 1; }
};

struct RunOptions {
  bool fail_fast = false;
  bool parallel = false;
  /// Run only tasks with this name or kind.
  std::optional<std::string> only;
  std::uint64_t seed = 1;
  bool timings = false;
};

RunReport run_problem(const Problem& problem, const RunOptions& options = {});

/// Reduced monic Gröbner basis over A of (ideal + I_R), largest leading
/// monomial first.
std::vector<Polynomial> canonical_basis(const SubmoduleBasis& ideal);
std::vector<std::string> canonical_strings(const SubmoduleBasis& ideal);

std::string format_text(const RunReport& report, bool timings);
nlohmann::json to_json(const RunReport& report, bool timings);

// --- bundled corpus --------------------------------------------------------

struct GoldenMismatch {
  std::string task;
  std::vector<std::string> expected;
  std::vector<std::string> computed;
};

struct CorpusFileResult {
  std::string name;
  RunReport report;
  std::vector<GoldenMismatch> mismatches;
  std::string error;
  bool ok() const { return error.empty() && mismatches.empty() && report.failures() == 0; }
};

/// KHC_CORPUS_DIR if set, then share/khc/corpus beside the installed binary,
/// then the directory compiled into the tool.
std::string corpus_directory();

/// Runs every `<name>.khc` in `dir` (sorted) against `<name>.golden`.
/// With `only`, runs just the file of that name or the tasks of that name.
std::vector<CorpusFileResult> verify_corpus(const std::string& dir, const RunOptions& options);

/// `[task]` sections followed by one generator per line, or `pass`.
std::vector<std::pair<std::string, std::vector<std::string>>> parse_golden(const std::string& text);

}  // namespace khc::cli
