// Command-line front end. Everything goes through the shared library's C
// interface; this file only parses flags, shuttles JSON strings and writes
// files. Exit codes: 0 success (or all checks passed), 1 check failure,
// 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "incdec.h"

namespace {

using nlohmann::json;

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { incdec_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

struct OwnedInstance {
  incdec_instance* handle = nullptr;
  ~OwnedInstance() { incdec_instance_free(handle); }
};

struct CommonFlags {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string prec = "le";
  std::string tie = "min-index";
  bool raw = false;
  int analyzer_cap = 0;  // 0: default (or INCDEC_ANALYZER_CAP)
  int pair_cap = 0;
  int profile_cap = 0;
  int order_cap = 0;
};

void add_io_flags(CLI::App* cmd, CommonFlags& flags, bool needs_input) {
  if (needs_input) {
    cmd->add_option("-i,--input", flags.input, "instance JSON file")->required();
  }
  cmd->add_option("-o,--output", flags.output, "output path (default: stdout)");
}

void add_cap_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--analyzer-cap", flags.analyzer_cap,
                  "max n for the 3^n analyzers (default 12, env INCDEC_ANALYZER_CAP)");
  cmd->add_option("--pair-cap", flags.pair_cap, "max n for the 4^n analyzer (default 10)");
  cmd->add_option("--profile-cap", flags.profile_cap,
                  "max n for the optimum profile (default 20)");
  cmd->add_option("--order-cap", flags.order_cap, "max n for the n! search (default 9)");
}

std::string options_json(const CommonFlags& flags) {
  json j;
  j["prec"] = flags.prec;
  j["tie"] = flags.tie;
  if (flags.raw) j["normalize"] = false;

  int analyzer_cap = flags.analyzer_cap;
  if (analyzer_cap == 0) {
    if (const char* env = std::getenv("INCDEC_ANALYZER_CAP")) analyzer_cap = std::atoi(env);
  }
  if (analyzer_cap > 0) {
    if (analyzer_cap > 12) {
      std::cerr << "warning: analyzer cap " << analyzer_cap
                << " costs O(3^n) oracle scans; expect long runtimes\n";
    }
    j["analyzer_cap"] = analyzer_cap;
  }
  if (flags.pair_cap > 0) {
    if (flags.pair_cap > 10) {
      std::cerr << "warning: pair cap " << flags.pair_cap << " costs O(4^n) oracle scans\n";
    }
    j["pair_cap"] = flags.pair_cap;
  }
  if (flags.profile_cap > 0) j["profile_cap"] = flags.profile_cap;
  if (flags.order_cap > 0) j["order_cap"] = flags.order_cap;
  return j.dump();
}

int report_error(incdec_status status) {
  std::cerr << "error (" << incdec_status_name(status) << "): " << incdec_last_error() << "\n";
  return 2;
}

int emit(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out.good()) {
    std::cerr << "error (io): cannot write \"" << path << "\"\n";
    return 2;
  }
  return 0;
}

int load_instance(const CommonFlags& flags, OwnedInstance& inst) {
  const incdec_status status = incdec_instance_read(flags.input.c_str(), &inst.handle);
  if (status != INCDEC_OK) return report_error(status);
  return 0;
}

// run / ratio / best-order emit either the full JSON or just the CSV table.
int emit_report(const CommonFlags& flags, const std::string& body) {
  if (flags.format == "json") return emit(body, flags.output);
  OwnedString csv;
  const incdec_status status = incdec_ratio_report_csv(body.c_str(), &csv.text);
  if (status != INCDEC_OK) return report_error(status);
  return emit(csv.str(), flags.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"incremental-decremental maximization toolkit"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, run_flags, ratio_flags, best_flags, gen_flags, verify_flags;

  auto* analyze = app.add_subcommand("analyze", "structural properties of every function");
  add_io_flags(analyze, analyze_flags, true);
  add_cap_flags(analyze, analyze_flags);

  auto* run = app.add_subcommand("run", "double-greedy ordering, trace and ratio report");
  add_io_flags(run, run_flags, true);
  add_cap_flags(run, run_flags);
  run->add_option("--prec", run_flags.prec, "tie side: le or lt")
      ->check(CLI::IsMember({"le", "lt"}));
  run->add_option("--tie", run_flags.tie, "min-index | max-index | priority:<label,...>");
  run->add_option("--format", run_flags.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--raw", run_flags.raw, "keep raw values (auto-normalizes for the run)");

  std::string ratio_order;
  auto* ratio = app.add_subcommand("ratio", "ratio report for a given ordering");
  add_io_flags(ratio, ratio_flags, true);
  add_cap_flags(ratio, ratio_flags);
  ratio->add_option("--order", ratio_order, "comma-separated labels, first to last")->required();
  ratio->add_option("--format", ratio_flags.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* best = app.add_subcommand("best-order", "exhaustive search over all orderings");
  add_io_flags(best, best_flags, true);
  add_cap_flags(best, best_flags);
  best->add_option("--format", best_flags.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string gen_id;
  std::string gen_n, gen_c, gen_gamma, gen_k, gen_epsilon;
  auto* gen = app.add_subcommand("gen", "write a named instance from the catalog");
  gen->add_option("--id", gen_id, "curvature_lb | gamma_lb | gross_substitute_lb | "
                                  "modular_remark | coverage_tight | incremental_unbounded")
      ->required();
  gen->add_option("--n", gen_n, "ground-set size (curvature_lb, incremental_unbounded)");
  gen->add_option("--c", gen_c, "curvature parameter, rational in [0,1]");
  gen->add_option("--gamma", gen_gamma, "generic submodularity ratio, rational in (0,1]");
  gen->add_option("--k", gen_k, "tuple dimension (coverage_tight)");
  gen->add_option("--epsilon", gen_epsilon, "step value, rational in (0,1)");
  gen->add_option("-o,--output", gen_flags.output, "output path (default: stdout)");

  std::uint64_t verify_seed = 1;
  std::string verify_only;
  auto* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");
  verify->add_option("-o,--output", verify_flags.output, "write the JSON results here");
  verify->add_option("--seed", verify_seed, "base seed for the randomized sweeps");
  verify->add_option("--only", verify_only, "run a single named check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (analyze->parsed()) {
    OwnedInstance inst;
    if (int rc = load_instance(analyze_flags, inst)) return rc;
    OwnedString out;
    const incdec_status status =
        incdec_analyze(inst.handle, options_json(analyze_flags).c_str(), &out.text);
    if (status != INCDEC_OK) return report_error(status);
    return emit(out.str(), analyze_flags.output);
  }

  if (run->parsed()) {
    OwnedInstance inst;
    if (int rc = load_instance(run_flags, inst)) return rc;
    OwnedString out;
    const incdec_status status = incdec_run(inst.handle, options_json(run_flags).c_str(), &out.text);
    if (status != INCDEC_OK) return report_error(status);
    return emit_report(run_flags, out.str());
  }

  if (ratio->parsed()) {
    OwnedInstance inst;
    if (int rc = load_instance(ratio_flags, inst)) return rc;
    json order = json::array();
    std::stringstream body(ratio_order);
    std::string label;
    while (std::getline(body, label, ',')) order.push_back(label);
    OwnedString out;
    const incdec_status status = incdec_ratio(inst.handle, order.dump().c_str(),
                                              options_json(ratio_flags).c_str(), &out.text);
    if (status != INCDEC_OK) return report_error(status);
    return emit_report(ratio_flags, out.str());
  }

  if (best->parsed()) {
    OwnedInstance inst;
    if (int rc = load_instance(best_flags, inst)) return rc;
    OwnedString out;
    const incdec_status status =
        incdec_best_order(inst.handle, options_json(best_flags).c_str(), &out.text);
    if (status != INCDEC_OK) return report_error(status);
    return emit_report(best_flags, out.str());
  }

  if (gen->parsed()) {
    json params = json::object();
    if (!gen_n.empty()) params["n"] = gen_n;
    if (!gen_c.empty()) params["c"] = gen_c;
    if (!gen_gamma.empty()) params["gamma"] = gen_gamma;
    if (!gen_k.empty()) params["k"] = gen_k;
    if (!gen_epsilon.empty()) params["epsilon"] = gen_epsilon;
    OwnedInstance inst;
    const incdec_status built =
        incdec_instance_build(gen_id.c_str(), params.dump().c_str(), &inst.handle);
    if (built != INCDEC_OK) return report_error(built);
    OwnedString out;
    const incdec_status status = incdec_instance_to_json(inst.handle, &out.text);
    if (status != INCDEC_OK) return report_error(status);
    return emit(out.str(), gen_flags.output);
  }

  // verify-paper
  json options;
  options["seed"] = verify_seed;
  if (!verify_only.empty()) options["only"] = verify_only;
  OwnedString out, timings;
  int all_passed = 0;
  const incdec_status status =
      incdec_verify_paper(options.dump().c_str(), &out.text, &timings.text, &all_passed);
  if (status != INCDEC_OK) return report_error(status);

  const json results = json::parse(out.str());
  const json times = json::parse(timings.str());
  for (const json& check : results["checks"]) {
    const std::string name = check["name"].get<std::string>();
    const bool passed = check["passed"].get<bool>();
    std::printf("[%s] %-30s %8.2fs\n", passed ? "PASS" : "FAIL", name.c_str(),
                times.value(name, 0.0));
    if (!passed) {
      for (const json& line : check["detail"]) {
        std::printf("       - %s\n", line.get<std::string>().c_str());
      }
    }
  }
  std::printf("%s\n", all_passed ? "all checks passed" : "FAILURES");
  if (!verify_flags.output.empty()) {
    if (int rc = emit(out.str(), verify_flags.output)) return rc;
  }
  return all_passed ? 0 : 1;
}
