#include <iostream>

#include <CLI11.hpp>

#include "khc/error.hpp"
#include "runner.hpp"

namespace {

using namespace khc;
using namespace khc::cli;

void print_mismatches(const CorpusFileResult& r) {
  if (!r.error.empty()) std::cout << "  error: " << r.error << "\n";
  for (const auto& m : r.mismatches) {
    std::cout << "  mismatch in " << m.task << "\n    expected:";
    for (const auto& g : m.expected) std::cout << " " << g;
    std::cout << "\n    computed:";
    for (const auto& g : m.computed) std::cout << " " << g;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul-Hironaka closure of ideals in graded quotient rings"};
  app.require_subcommand(1);

  RunOptions options;
  bool machine = false;
  long max_degree = 0;
  std::string only;
  std::string file;
  std::string corpus;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--machine", machine, "Emit JSON instead of text");
    sub->add_flag("--timings", options.timings, "Include wall-clock timings in the report");
    sub->add_flag("--fail-fast", options.fail_fast, "Skip remaining tasks after the first failure");
    sub->add_flag("--parallel", options.parallel, "Run independent tasks concurrently");
    sub->add_option("--only", only, "Run only the task (or corpus file) with this name or kind");
    sub->add_option("--max-degree", max_degree, "Abort computations whose total degrees exceed n")->check(CLI::PositiveNumber);
    sub->add_option("--seed", options.seed, "Seed for randomized property sampling");
  };

  auto* run = app.add_subcommand("run", "Run the tasks of a problem file");
  run->add_option("file", file, "Problem file")->required();
  add_common(run);

  auto* verify = app.add_subcommand("verify", "Check the bundled corpus against its golden ideals");
  verify->add_option("--corpus", corpus, "Corpus directory (default: KHC_CORPUS_DIR or the bundled one)");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);
  if (!only.empty()) options.only = only;
  if (max_degree > 0) set_max_degree(static_cast<std::uint32_t>(max_degree));

  try {
    if (*run) {
      Problem problem = load_problem(file);
      RunReport report = run_problem(problem, options);
      if (machine) std::cout << to_json(report, options.timings).dump(2) << "\n";
      else std::cout << format_text(report, options.timings);
      return report.exit_status();
    }

    auto results = verify_corpus(corpus.empty() ? corpus_directory() : corpus, options);
    bool ok = true;
    if (machine) {
      nlohmann::json files = nlohmann::json::array();
      for (const auto& r : results) {
        nlohmann::json mism = nlohmann::json::array();
        for (const auto& m : r.mismatches)
          mism.push_back({{"task", m.task}, {"expected", m.expected}, {"computed", m.computed}});
        nlohmann::json j = {{"name", r.name}, {"ok", r.ok()}, {"report", to_json(r.report, options.timings)},
                            {"mismatches", mism}};
        if (!r.error.empty()) j["error"] = r.error;
        files.push_back(std::move(j));
        ok = ok && r.ok();
      }
      std::cout << nlohmann::json{{"files", files}, {"ok", ok}}.dump(2) << "\n";
    } else {
      std::size_t tasks = 0;
      for (const auto& r : results) {
        std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.report.tasks.size() << " tasks)\n";
        tasks += r.report.tasks.size();
        if (!r.ok()) {
          print_mismatches(r);
          std::cout << format_text(r.report, options.timings);
        }
        ok = ok && r.ok();
      }
      std::cout << results.size() << " files, " << tasks << " tasks: " << (ok ? "all match" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "khc: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "khc: " << e.what() << "\n";
    return 2;
  }
}
