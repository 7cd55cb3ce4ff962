#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <sstream>

#include "khc/error.hpp"

#ifndef KHC_DEFAULT_CORPUS_DIR
#define KHC_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace khc::cli {

namespace {

std::string join(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out;
}

/// State shared by the tasks of one run; the KH complex and the test ideal
/// are built on first use.
class Context {
 public:
  explicit Context(const Problem& p) : problem_(p) {}

  const RGammaComplex& rgamma() {
    std::call_once(g_once_, [this] {
      try {
        g_.emplace(build_rgamma(problem_.multiplier));
      } catch (const Error& e) {
        g_error_ = e.what();
      }
    });
    if (!g_) throw Error("cannot build the derived sections complex: " + g_error_);
    return *g_;
  }

  const SubmoduleBasis& tau() {
    std::call_once(tau_once_, [this] {
      try {
        tau_.emplace(kh_test_ideal(problem_.ring, problem_.multiplier));
      } catch (const Error& e) {
        tau_error_ = e.what();
      }
    });
    if (!tau_) throw Error("cannot compute the test ideal: " + tau_error_);
    return *tau_;
  }

  const Problem& problem() const { return problem_; }

 private:
  const Problem& problem_;
  std::once_flag g_once_, tau_once_;
  std::optional<RGammaComplex> g_;
  std::optional<SubmoduleBasis> tau_;
  std::string g_error_, tau_error_;
};

void closure_verdicts(const Task& t, const RingPtr& ring, TaskReport& r, Context& ctx) {
  const SubmoduleBasis& c = *r.result;
  for (const auto& p : t.member) r.verdicts.push_back({"member " + p.to_string(), c.contains(p)});
  for (const auto& p : t.member_not) r.verdicts.push_back({"member-not " + p.to_string(), !c.contains(p)});
  if (t.equals) r.verdicts.push_back({"equals (" + join(*t.equals) + ")", ideal_equal(c, ideal_of(ring, *t.equals))});
  for (const auto& item : t.contains)
    r.verdicts.push_back({"contains (" + join(item) + ")", is_subset(ideal_of(ring, item), c)});
  for (const auto& item : t.not_contains)
    r.verdicts.push_back({"not-contains (" + join(item) + ")", !is_subset(ideal_of(ring, item), c)});
  if (t.equals_kh || t.contains_kh) {
    SubmoduleBasis kh = kh_closure(t.ideal, ctx.rgamma()).closure;
    if (t.equals_kh) r.verdicts.push_back({"equals-kh", ideal_equal(c, kh)});
    if (t.contains_kh) r.verdicts.push_back({"contains-kh", is_subset(kh, c)});
  }
}

void run_closure(const Task& t, TaskReport& r, Context& ctx) {
  const RingPtr& ring = ctx.problem().ring;
  ClosureResult res = [&] {
    switch (t.kind) {
      case TaskKind::kh: return kh_closure(t.ideal, ctx.rgamma(), t.route);
      case TaskKind::hir: return hironaka_preclosure(t.ideal, ctx.rgamma(), t.hir_mode);
      case TaskKind::hir_hull: return hironaka_hull(t.ideal, ctx.rgamma(), t.hir_mode, t.max_iter);
      case TaskKind::clpi: return clpi_closure(t.ideal, ctx.problem().multiplier);
      default: throw InternalInconsistency("not a closure task");
    }
  }();
  r.op = to_string(res.op);
  if (t.kind == TaskKind::hir_hull)
    r.op += t.hir_mode == HironakaMode::over_A ? " over-A" : " over-R";
  r.diagnostics = res.diagnostics;
  r.result = res.closure;
  if (t.kind == TaskKind::hir_hull) {
    r.details.push_back("iterations: " + std::to_string(res.diagnostics.iterations));
    r.details.push_back(std::string("stabilized: ") + (res.diagnostics.stabilized ? "true" : "false"));
  }
  closure_verdicts(t, ring, r, ctx);
  if (t.kind == TaskKind::kh) {
    // The test ideal multiplies every closure back into the ideal.
    const SubmoduleBasis* tau = nullptr;
    try {
      tau = &ctx.tau();
    } catch (const Error& e) {
      r.details.push_back(std::string("tau check skipped: ") + e.what());
    }
    if (tau) r.verdicts.push_back({"tau*closure inside ideal", is_subset(ideal_product(*tau, res.closure), res.input)});
  }
}

void run_task(const Task& t, TaskReport& r, Context& ctx, const RunOptions& options) {
  const RingPtr& ring = ctx.problem().ring;
  switch (t.kind) {
    case TaskKind::kh:
    case TaskKind::hir:
    case TaskKind::hir_hull:
    case TaskKind::clpi:
      run_closure(t, r, ctx);
      break;
    case TaskKind::tau:
      r.result = ctx.tau();
      closure_verdicts(t, ring, r, ctx);
      break;
    case TaskKind::colon_check: {
      auto rep = check_colon_capturing(ctx.rgamma(), t.params, t.t, t.a, t.k);
      r.details.push_back("t=" + std::to_string(t.t) + " a=" + std::to_string(t.a) + " k=" + std::to_string(t.k));
      r.verdicts.push_back({"version A", rep.version_a});
      if (rep.version_b) r.verdicts.push_back({"version B", *rep.version_b});
      break;
    }
    case TaskKind::axiom_check: {
      auto rep = check_axioms(t.ideal, ctx.rgamma(), t.seed.value_or(options.seed));
      r.verdicts.push_back({"extension", rep.extension});
      r.verdicts.push_back({"idempotence", rep.idempotence});
      r.verdicts.push_back({"generating-set independence", rep.generating_set_independence});
      r.verdicts.push_back({"order preservation", rep.order_preservation});
      break;
    }
    case TaskKind::depth_check: {
      auto rep = check_depth_vanishing(ctx.rgamma(), t.params);
      for (auto [k, h] : rep.failures)
        r.details.push_back("H_" + std::to_string(h) + " nonzero for the first " + std::to_string(k) + " parameters");
      r.verdicts.push_back({"higher Koszul homology vanishes", rep.passed()});
      break;
    }
    case TaskKind::counterexample: {
      auto rep = check_counterexamples(*t.preset);
      r.op = to_string(*t.preset);
      r.details = rep.details;
      r.verdicts.push_back({to_string(*t.preset), rep.passed});
      break;
    }
  }
  if (r.result) r.ideal = canonical_strings(*r.result);
}

TaskReport execute(const Task& t, Context& ctx, const RunOptions& options) {
  TaskReport r;
  r.name = t.name;
  r.kind = t.kind;
  r.op = to_string(t.kind);
  r.has_assertions = t.has_assertions();
  auto t0 = std::chrono::steady_clock::now();
  try {
    run_task(t, r, ctx, options);
    bool all = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& v) { return v.ok; });
    if (!all) r.status = TaskStatus::fail;
    else r.status = r.has_assertions ? TaskStatus::pass : TaskStatus::done;
  } catch (const Error& e) {
    r.status = TaskStatus::error;
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool selected(const Task& t, const RunOptions& options) {
  return !options.only || *options.only == t.name || *options.only == to_string(t.kind);
}

bool counts_as_failure(const TaskReport& r) {
  if (r.status == TaskStatus::fail) return true;
  return r.status == TaskStatus::error && r.has_assertions;
}

}  // namespace

std::string to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::done: return "done";
    case TaskStatus::pass: return "pass";
    case TaskStatus::fail: return "fail";
    case TaskStatus::error: return "error";
    case TaskStatus::skipped: return "skipped";
  }
  return "?";
}

std::size_t RunReport::failures() const {
  return static_cast<std::size_t>(std::count_if(tasks.begin(), tasks.end(), counts_as_failure));
}

RunReport run_problem(const Problem& problem, const RunOptions& options) {
  RunReport report;
  report.source = problem.source;
  Context ctx(problem);
  std::vector<const Task*> chosen;
  for (const auto& t : problem.tasks)
    if (selected(t, options)) chosen.push_back(&t);

  if (options.parallel && !options.fail_fast) {
    std::vector<std::future<TaskReport>> futures;
    for (const Task* t : chosen)
      futures.push_back(std::async(std::launch::async, [&ctx, &options, t] { return execute(*t, ctx, options); }));
    for (auto& f : futures) report.tasks.push_back(f.get());
    return report;
  }
  bool stop = false;
  for (const Task* t : chosen) {
    if (stop) {
      TaskReport skipped;
      skipped.name = t->name;
      skipped.kind = t->kind;
      skipped.op = to_string(t->kind);
      skipped.status = TaskStatus::skipped;
      report.tasks.push_back(std::move(skipped));
      continue;
    }
    report.tasks.push_back(execute(*t, ctx, options));
    const TaskReport& last = report.tasks.back();
    if (options.fail_fast && (last.status == TaskStatus::fail || last.status == TaskStatus::error)) stop = true;
  }
  return report;
}

std::vector<Polynomial> canonical_basis(const SubmoduleBasis& ideal) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> gens = ideal.ideal_basis();
  for (const auto& r : ring->relation_basis()) gens.push_back(r);
  std::vector<Polynomial> basis = SubmoduleBasis::ideal(ring, Ambient::over_A, gens).ideal_basis();
  for (auto& p : basis) p = p.monic();
  const auto& pr = *ring->ambient();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return pr.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return basis;
}

std::vector<std::string> canonical_strings(const SubmoduleBasis& ideal) {
  std::vector<std::string> out;
  for (const auto& p : canonical_basis(ideal)) out.push_back(p.to_string());
  return out;
}

std::string format_text(const RunReport& report, bool timings) {
  std::ostringstream out;
  out << "# " << report.source << "\n";
  for (const auto& t : report.tasks) {
    out << "task " << to_string(t.kind) << " " << t.name << " [" << t.op << "]: " << to_string(t.status) << "\n";
    if (!t.error.empty()) out << "  error: " << t.error << "\n";
    if (t.result) {
      out << "  ideal:\n";
      for (const auto& g : t.ideal) out << "    " << g << "\n";
    }
    for (const auto& v : t.verdicts) out << "  " << (v.ok ? "ok   " : "FAIL ") << v.label << "\n";
    for (const auto& d : t.details) out << "  " << d << "\n";
    if (timings) out << "  seconds: " << t.seconds << "\n";
  }
  out << report.tasks.size() << " tasks, " << report.failures() << " failed\n";
  return out.str();
}

nlohmann::json to_json(const RunReport& report, bool timings) {
  nlohmann::json tasks = nlohmann::json::array();
  for (const auto& t : report.tasks) {
    nlohmann::json j;
    j["name"] = t.name;
    j["kind"] = to_string(t.kind);
    j["op"] = t.op;
    j["status"] = to_string(t.status);
    if (!t.error.empty()) j["error"] = t.error;
    if (t.result) j["ideal"] = t.ideal;
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : t.verdicts) verdicts.push_back({{"label", v.label}, {"ok", v.ok}});
    j["verdicts"] = verdicts;
    j["details"] = t.details;
    if (timings) {
      j["seconds"] = t.seconds;
      if (t.diagnostics) {
        j["diagnostics"] = {{"gb_size", t.diagnostics->gb_size},
                            {"ambient_rank", t.diagnostics->ambient_rank},
                            {"relations", t.diagnostics->relations},
                            {"iterations", t.diagnostics->iterations},
                            {"stabilized", t.diagnostics->stabilized}};
      }
    }
    tasks.push_back(std::move(j));
  }
  return {{"source", report.source}, {"tasks", tasks}, {"failures", report.failures()},
          {"exit_status", report.exit_status()}};
}

// ---------------------------------------------------------------------------

std::string corpus_directory() {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("KHC_CORPUS_DIR"); env && *env) return env;
  // relocatable installs: <prefix>/bin/khc next to <prefix>/share/khc/corpus
  std::error_code ec;
  fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    fs::path near = exe.parent_path().parent_path() / "share" / "khc" / "corpus";
    if (fs::is_directory(near, ec)) return near.string();
  }
  return KHC_DEFAULT_CORPUS_DIR;
}

std::vector<std::pair<std::string, std::vector<std::string>>> parse_golden(const std::string& text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string s = line.substr(b, e - b + 1);
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3) throw ParseError("bad golden section header", 0, lineno);
      out.emplace_back(s.substr(1, s.size() - 2), std::vector<std::string>{});
      continue;
    }
    if (out.empty()) throw ParseError("golden entry outside a section", 0, lineno);
    out.back().second.push_back(s);
  }
  return out;
}

std::vector<CorpusFileResult> verify_corpus(const std::string& dir, const RunOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".khc") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  bool file_filter = false;
  if (options.only)
    for (const auto& f : files)
      if (f.stem().string() == *options.only) file_filter = true;

  std::vector<CorpusFileResult> results;
  for (const auto& f : files) {
    if (file_filter && f.stem().string() != *options.only) continue;
    CorpusFileResult res;
    res.name = f.stem().string();
    try {
      Problem p = load_problem(f.string());
      RunOptions opts = options;
      if (file_filter) opts.only.reset();
      res.report = run_problem(p, opts);
      if (res.report.tasks.empty()) continue;

      fs::path golden_path = f;
      golden_path.replace_extension(".golden");
      std::ifstream in(golden_path);
      if (!in) throw Error("missing golden file " + golden_path.string());
      std::ostringstream ss;
      ss << in.rdbuf();
      auto golden = parse_golden(ss.str());

      for (const auto& t : res.report.tasks) {
        auto it = std::find_if(golden.begin(), golden.end(), [&](const auto& g) { return g.first == t.name; });
        if (it == golden.end()) {
          res.mismatches.push_back({t.name, {"<no golden entry>"}, t.ideal});
          continue;
        }
        const auto& expected = it->second;
        if (!t.result) {
          std::vector<std::string> got{t.status == TaskStatus::pass ? "pass" : to_string(t.status)};
          if (expected != got) res.mismatches.push_back({t.name, expected, got});
          continue;
        }
        bool same = false;
        try {
          std::vector<Polynomial> gens;
          for (const auto& s : expected) gens.push_back(p.ring->parse(s));
          same = ideal_equal(ideal_of(p.ring, gens), *t.result);
        } catch (const ParseError&) {
          same = false;
        }
        if (!same) res.mismatches.push_back({t.name, expected, t.ideal});
      }
    } catch (const Error& e) {
      res.error = e.what();
    }
    results.push_back(std::move(res));
  }
  if (options.only && results.empty()) throw Error("nothing in the corpus matches '" + *options.only + "'");
  return results;
}

}  // namespace khc::cli
