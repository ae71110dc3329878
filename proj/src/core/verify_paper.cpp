#include "core/verify_paper.hpp"

#include <chrono>
#include <numeric>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/harness.hpp"

namespace incdec {

namespace {

class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok_ = false;
      lines_.push_back("failed: " + what);
    }
  }
  void note(const std::string& line) { lines_.push_back(line); }
  bool ok() const { return ok_; }
  std::vector<std::string> take_lines() { return std::move(lines_); }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::uint64_t sweep_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t i) {
  return base + tag * 1000003ULL + i;
}

std::vector<TieBreak> all_tie_breaks_n3() {
  std::vector<TieBreak> ties = {TieBreak::min_index(), TieBreak::max_index()};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) ties.push_back(TieBreak::by_priority({p[0], p[1], p[2]}));
  return ties;
}

std::vector<int> seeded_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Independent form of the curvature for submodular inputs: only the largest
// and smallest base sets matter.
Value submodular_curvature_shortcut(const Oracle& oracle) {
  const int n = oracle.n();
  bool any = false;
  Value best(1);
  for (int e = 0; e < n; ++e) {
    const Value single = oracle.marginal(e, 0);
    if (!single.is_positive()) continue;
    const Value ratio = oracle.marginal(e, complement(n, bit(e))) / single;
    if (!any || ratio < best) best = ratio;
    any = true;
  }
  return any ? Value(1) - best : Value(0);
}

void check_gross_substitute_lower_bound(Check& c, const PaperCheckOptions&) {
  const OracleInstance inst = instantiate(build_named_instance("gross_substitute_lb", {}));
  const PropertyReport rg = analyze(*inst.g);
  const PropertyReport rh = analyze(*inst.h);
  c.expect(rg.gross_substitute && rg.gross_substitute->holds, "g is gross substitute");
  c.expect(rh.gross_substitute && rh.gross_substitute->holds, "h is gross substitute");

  const Objective f = inst.objective();
  const OptProfile opt = opt_profile(f);
  c.expect(opt.by_size[1].value == Value(5), "optimum of size 1 equals 5");
  c.expect(opt.by_size[2].value == Value(5), "optimum of size 2 equals 5");

  const BestOrderingResult best = best_ordering(f);
  c.expect(best.ratio == ValueOrInf(Value(5, 4)), "exhaustive best ordering ratio equals 5/4");

  int runs = 0;
  for (Prec prec : {Prec::Le, Prec::Lt}) {
    for (const TieBreak& tie : all_tie_breaks_n3()) {
      const DoubleGreedyResult run = double_greedy(*inst.g, *inst.h, prec, tie);
      const RatioReport report = competitive_ratio(f, run.ordering, opt);
      c.expect(report.rho <= ValueOrInf(Value(2)),
               "rho <= 2 for prec=" + prec_name(prec) + " tie=" + tie.describe(inst.ground));
      ++runs;
    }
  }
  c.note("optimum 5 at sizes 1 and 2, best ordering ratio 5/4");
  c.note("rho <= 2 across " + std::to_string(runs) + " double-greedy runs");
}

void check_modular_tightness(Check& c, const PaperCheckOptions&) {
  const OracleInstance inst = instantiate(build_named_instance("modular_remark", {}));
  const DoubleGreedyResult run =
      double_greedy(*inst.g, *inst.h, Prec::Lt, TieBreak::by_priority({0}));
  const Objective f = inst.objective();
  const RatioReport report = competitive_ratio(f, run.ordering, opt_profile(f));
  c.expect(report.rho == ValueOrInf(Value(2)), "a-first run reaches rho = 2 exactly");

  const BoundAttestation att =
      BoundAttestation::from_reports(analyze(*inst.g), analyze(*inst.h), *inst.g, *inst.h);
  const BoundCheck bound = verify_theorem_bound(report, BoundSpec{BoundClass::GrossSubstitute}, att);
  c.expect(bound.passed, "gross-substitute class bound accepts rho = 2");
  c.note("rho = " + report.rho.str() + " against class bound 2");
}

void check_curvature_lower_bound(Check& c, const PaperCheckOptions&) {
  std::map<std::string, Value> params;
  params.emplace("n", Value(6));
  params.emplace("c", Value(1, 2));
  const OracleInstance inst = instantiate(build_named_instance("curvature_lb", params));

  const ExtremalRatio cur = curvature(*inst.h);
  c.expect(cur.value == Value(1, 2), "analyzer curvature equals 1/2 exactly");

  const BestOrderingResult best = best_ordering(inst.objective());
  c.expect(!best.ratio.is_infinite() && best.ratio.finite() >= Value(10, 8),
           "exhaustive ratio at least 10/8");
  c.expect(best.ratio == ValueOrInf(Value(5, 4)), "exhaustive minimum equals 5/4");
  c.note("curvature 1/2, exhaustive best ratio " + best.ratio.str());
}

void check_gamma_lower_bound(Check& c, const PaperCheckOptions&) {
  std::map<std::string, Value> params;
  params.emplace("gamma", Value(1, 2));
  const OracleInstance inst = instantiate(build_named_instance("gamma_lb", params));

  const ExtremalRatio gamma = generic_submodularity_ratio(*inst.h);
  c.expect(gamma.value == Value(1, 2), "analyzer generic submodularity ratio equals 1/2");

  const BestOrderingResult best = best_ordering(inst.objective());
  c.expect(best.ratio == ValueOrInf(Value(4, 3)), "exhaustive best ordering ratio equals 4/3");
  c.note("generic ratio 1/2, exhaustive best ratio " + best.ratio.str());
}

void check_coverage_tight(Check& c, const PaperCheckOptions&) {
  const Value bound_cap = Value::from_double(BoundSpec{BoundClass::Submodular}.bound() + 1e-9);
  Value previous(0);
  for (long k = 3; k <= 5; ++k) {
    std::map<std::string, Value> params;
    params.emplace("k", Value(k));
    const OracleInstance inst = instantiate(build_named_instance("coverage_tight", params));
    const int n = inst.ground.n;

    std::vector<int> suffix_first;
    for (int e = static_cast<int>(k); e < n; ++e) suffix_first.push_back(e);
    const DoubleGreedyResult run =
        double_greedy(*inst.g, *inst.h, Prec::Lt, TieBreak::by_priority(suffix_first));

    Subset b_family = 0;
    for (int e : suffix_first) b_family |= bit(e);
    const Subset prefix_k = run.ordering.prefix(static_cast<int>(k));
    c.expect(prefix_k == b_family, "k = " + std::to_string(k) + ": prefix is the B family");

    const Value covered = Value::ipow(k, k) - Value::ipow(k - 1, k);
    const Value best_possible = Value(2) * Value::ipow(k, k) - Value::ipow(k - 1, k);
    const Objective f = inst.objective();
    c.expect(f.eval(prefix_k) == covered,
             "k = " + std::to_string(k) + ": prefix value equals k^k - (k-1)^k");

    const OptProfile opt = opt_profile(f);
    c.expect(opt.by_size[k].value == best_possible,
             "k = " + std::to_string(k) + ": optimum equals 2k^k - (k-1)^k");

    const Value ratio = best_possible / covered;
    const Value frozen = k == 3 ? Value(46, 19) : k == 4 ? Value(431, 175) : Value(5226, 2101);
    c.expect(ratio == frozen, "k = " + std::to_string(k) + ": step-k ratio matches");
    c.expect(previous < ratio, "k = " + std::to_string(k) + ": ratio grew");
    c.expect(ratio <= bound_cap, "k = " + std::to_string(k) + ": ratio below the class bound");
    previous = ratio;
    c.note("k = " + std::to_string(k) + ": step ratio " + ratio.str());
  }
}

void check_deterministic_bound_sweep(Check& c, const PaperCheckOptions& options) {
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Instance raw = random_coverage_pair(sweep_seed(options.seed, 6, i), 8, 64);
    const OracleInstance inst = instantiate(raw);
    const PropertyReport rg = analyze(*inst.g);
    const PropertyReport rh = analyze(*inst.h);
    const BoundAttestation att = BoundAttestation::from_reports(rg, rh, *inst.g, *inst.h);
    const Value c_max = max(rg.curvature->value, rh.curvature->value);
    const Value gamma_min =
        min(rg.generic_submodularity_ratio->value, rh.generic_submodularity_ratio->value);

    const Objective f = inst.objective();
    const OptProfile opt = opt_profile(f);
    for (Prec prec : {Prec::Le, Prec::Lt}) {
      const DoubleGreedyResult run = double_greedy(*inst.g, *inst.h, prec);
      const RatioReport report = competitive_ratio(f, run.ordering, opt);
      const BoundCheck submod = verify_theorem_bound(report, BoundSpec{BoundClass::Submodular}, att);
      const BoundCheck general =
          verify_theorem_bound(report, BoundSpec{BoundClass::General, c_max, gamma_min}, att);
      if (!submod.passed || !general.passed) {
        ++failures;
        c.expect(false, "instance " + std::to_string(i) + " prec=" + prec_name(prec) +
                            " rho=" + report.rho.str() + " broke a bound");
      }
    }
  }
  c.expect(failures == 0, "no bound violations in the sweep");
  c.note("100 coverage pairs, both precs: submodular and general bounds hold");
}

void check_randomized_bound_sweep(Check& c, const PaperCheckOptions& options) {
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Instance raw = random_coverage_pair(sweep_seed(options.seed, 6, i), 8, 64);
    const OracleInstance inst = instantiate(raw);
    const PropertyReport rg = analyze(*inst.g);
    const PropertyReport rh = analyze(*inst.h);
    const BoundAttestation att = BoundAttestation::from_reports(rg, rh, *inst.g, *inst.h);
    const Value c_max = max(rg.curvature->value, rh.curvature->value);
    const Value gamma_min =
        min(rg.generic_submodularity_ratio->value, rh.generic_submodularity_ratio->value);

    const Objective f = inst.objective();
    const RandomizedPair pair = randomized_pair(*inst.g, *inst.h);
    const RatioReport report = expected_competitive_ratio(f, pair, opt_profile(f));
    const BoundCheck bound =
        verify_theorem_bound(report, BoundSpec{BoundClass::Randomized, c_max, gamma_min}, att);
    if (!bound.passed) {
      ++failures;
      c.expect(false, "instance " + std::to_string(i) + " expected rho=" + report.rho.str() +
                          " broke the randomized bound");
    }
  }
  c.expect(failures == 0, "no randomized-bound violations in the sweep");
  c.note("100 coverage pairs: exact two-outcome expectation meets the randomized bound");
}

void check_universal_invariants(Check& c, const PaperCheckOptions& options) {
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t seed = sweep_seed(options.seed, 8, i);
    const Instance raw = random_monotone_pair(seed, 8);
    const OracleInstance inst = instantiate(raw);
    const int n = inst.ground.n;
    const PropertyReport rg = analyze(*inst.g);
    const PropertyReport rh = analyze(*inst.h);
    const std::string tag = "instance " + std::to_string(i);

    if (!rg.structure.monotone || !rh.structure.monotone) {
      ++failures;
      c.expect(false, tag + ": generator produced a non-monotone function");
      continue;
    }

    const Value c_max = max(rg.curvature->value, rh.curvature->value);
    const Value gamma_min =
        min(rg.generic_submodularity_ratio->value, rh.generic_submodularity_ratio->value);
    const bool both_submodular = rg.structure.submodular && rh.structure.submodular;

    Rng perm_rng(seed ^ 0x7e57ab1e);
    const TieBreak tie = TieBreak::by_priority(seeded_permutation(perm_rng, n));

    for (Prec prec : {Prec::Le, Prec::Lt}) {
      const DoubleGreedyResult run = double_greedy(*inst.g, *inst.h, prec, tie);
      for (const CheckResult& result : verify_trace_invariants(run.trace, *inst.g, *inst.h, c_max,
                                                               gamma_min, both_submodular)) {
        if (!result.passed) {
          ++failures;
          c.expect(false, tag + " prec=" + prec_name(prec) + ": " + result.name + ": " +
                              result.detail);
        }
      }
      const SymmetryResult sym = verify_symmetry(*inst.g, *inst.h, prec, tie);
      if (!sym.passed) {
        ++failures;
        c.expect(false, tag + " prec=" + prec_name(prec) + ": symmetry: " + sym.detail);
      }
    }

    const auto per_function = [&](const char* name, const PropertyReport& report,
                                  const Oracle& oracle) {
      if (!report.submodularity_ratio ||
          report.generic_submodularity_ratio->value > report.submodularity_ratio->value) {
        ++failures;
        c.expect(false, tag + ": " + name + ": generic ratio exceeds the submodularity ratio");
      }
      if (report.structure.submodular &&
          report.curvature->value != submodular_curvature_shortcut(oracle)) {
        ++failures;
        c.expect(false, tag + ": " + name + ": curvature shortcut mismatch");
      }
    };
    per_function("g", rg, *inst.g);
    per_function("h", rh, *inst.h);
  }
  c.expect(failures == 0, "no invariant violations in the sweep");
  c.note("200 mixed monotone pairs: trace bounds, chains, reversal and ratio order hold");
}

void check_equal_totals(Check& c, const PaperCheckOptions& options) {
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const Instance raw = random_equal_totals_pair(sweep_seed(options.seed, 9, i), 8, 64);
    const OracleInstance inst = instantiate(raw);
    const int n = inst.ground.n;
    const Value h_total = inst.h->eval(full_mask(n));
    const PropertyReport rg = analyze(*inst.g);
    const PropertyReport rh = analyze(*inst.h);
    const BoundAttestation att = BoundAttestation::from_reports(rg, rh, *inst.g, *inst.h);

    const Objective f = inst.objective();
    const OptProfile opt = opt_profile(f);
    for (Prec prec : {Prec::Le, Prec::Lt}) {
      const DoubleGreedyResult run = double_greedy(*inst.g, *inst.h, prec);
      for (int k = 1; k <= n; ++k) {
        if (f.eval(run.ordering.prefix(k)) < h_total) {
          ++failures;
          c.expect(false, "instance " + std::to_string(i) + " prec=" + prec_name(prec) +
                              ": prefix " + std::to_string(k) + " fell below the shared total");
        }
      }
      const RatioReport report = competitive_ratio(f, run.ordering, opt);
      const BoundCheck bound = verify_theorem_bound(report, BoundSpec{BoundClass::EqualTotals}, att);
      if (!bound.passed) {
        ++failures;
        c.expect(false, "instance " + std::to_string(i) + " prec=" + prec_name(prec) +
                            " rho=" + report.rho.str() + " broke the equal-totals bound");
      }
    }
  }
  c.expect(failures == 0, "no equal-totals violations in the sweep");
  c.note("50 rescaled pairs: every prefix holds the shared total and rho <= 2");
}

void check_incremental_unbounded(Check& c, const PaperCheckOptions&) {
  const UnboundedDemo big = incremental_unbounded_demo(9, Value(1, 3));
  c.expect(big.best_ratio == ValueOrInf(Value(8, 3)), "n = 9, eps = 1/3 best ratio equals 8/3");

  const UnboundedDemo small = incremental_unbounded_demo(4, Value(1, 2));
  c.expect(small.best_ratio == ValueOrInf(Value(3, 2)), "n = 4, eps = 1/2 best ratio equals 3/2");
  c.expect(small.best_ratio < big.best_ratio, "best ratio grows with n");
  c.note("best ratios: " + small.best_ratio.str() + " at n = 4, " + big.best_ratio.str() +
         " at n = 9");
}

struct CheckEntry {
  const char* name;
  double limit_seconds;
  void (*run)(Check&, const PaperCheckOptions&);
};

const CheckEntry kChecks[] = {
    {"gross_substitute_lower_bound", 1.0, check_gross_substitute_lower_bound},
    {"modular_tightness", 1.0, check_modular_tightness},
    {"curvature_lower_bound", 30.0, check_curvature_lower_bound},
    {"gamma_lower_bound", 1.0, check_gamma_lower_bound},
    {"coverage_tight", 60.0, check_coverage_tight},
    {"deterministic_bound_sweep", 300.0, check_deterministic_bound_sweep},
    {"randomized_bound_sweep", 300.0, check_randomized_bound_sweep},
    {"universal_invariants", 300.0, check_universal_invariants},
    {"equal_totals", 120.0, check_equal_totals},
    {"incremental_unbounded", 60.0, check_incremental_unbounded},
};

}  // namespace

const std::vector<std::string>& paper_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const CheckEntry& entry : kChecks) out.push_back(entry.name);
    return out;
  }();
  return names;
}

PaperReport verify_paper(const PaperCheckOptions& options) {
  if (!options.only.empty()) {
    bool known = false;
    for (const CheckEntry& entry : kChecks) known = known || options.only == entry.name;
    if (!known) fail(ErrorKind::Input, "unknown check \"" + options.only + "\"");
  }

  PaperReport report;
  report.all_passed = true;
  for (const CheckEntry& entry : kChecks) {
    if (!options.only.empty() && options.only != entry.name) continue;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.run(check, options);
    } catch (const Error& e) {
      check.expect(false, std::string("error: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    PaperCheck result;
    result.name = entry.name;
    result.passed = check.ok();
    result.seconds = elapsed.count();
    result.limit_seconds = entry.limit_seconds;
    result.lines = check.take_lines();
    report.all_passed = report.all_passed && result.passed;
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace incdec
