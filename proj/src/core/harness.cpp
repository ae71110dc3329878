#include "core/harness.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"
#include "core/instances.hpp"

namespace incdec {

namespace {

ValueOrInf row_ratio(const Value& alg, const Value& opt) {
  if (alg.is_positive()) return ValueOrInf(opt / alg);
  if (opt.is_positive()) return ValueOrInf::infinity();
  return ValueOrInf(Value(1));
}

void check_ordering(const Objective& objective, const Ordering& ordering) {
  const int n = objective.n();
  if (ordering.n() != n) {
    fail(ErrorKind::Input, "ordering has " + std::to_string(ordering.n()) +
                               " positions, objective has n = " + std::to_string(n));
  }
  if (ordering.prefix(n) != full_mask(n)) {
    fail(ErrorKind::Input, "ordering is not a permutation of the ground set");
  }
}

RatioReport build_report(const Objective& objective, const OptProfile& opt,
                         const std::vector<Value>& alg_values) {
  const int n = objective.n();
  if (opt.n() != n) {
    fail(ErrorKind::Input, "optimum profile has n = " + std::to_string(opt.n()) +
                               ", objective has n = " + std::to_string(n));
  }
  RatioReport report;
  report.rho = ValueOrInf(Value(0));
  for (int k = 1; k <= n; ++k) {
    RatioRow row;
    row.k = k;
    row.alg_value = alg_values[k - 1];
    row.opt_value = opt.by_size[k].value;
    row.opt_witness = opt.by_size[k].witness;
    if (row.alg_value > row.opt_value) {
      fail(ErrorKind::Input, "prefix value exceeds the optimum at k = " + std::to_string(k) +
                                 "; profile does not match the objective");
    }
    if (row.alg_value.is_zero()) report.any_zero_denominator = true;
    row.ratio = row_ratio(row.alg_value, row.opt_value);
    if (report.rho < row.ratio) report.rho = row.ratio;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

RatioReport competitive_ratio(const Objective& objective, const Ordering& ordering,
                              const OptProfile& opt) {
  check_ordering(objective, ordering);
  std::vector<Value> alg_values;
  for (int k = 1; k <= objective.n(); ++k) alg_values.push_back(objective.eval(ordering.prefix(k)));
  return build_report(objective, opt, alg_values);
}

RatioReport expected_competitive_ratio(const Objective& objective, const RandomizedPair& pair,
                                       const OptProfile& opt) {
  check_ordering(objective, pair.order_h);
  check_ordering(objective, pair.order_g_reversed);
  std::vector<Value> alg_values;
  const Value half(1, 2);
  for (int k = 1; k <= objective.n(); ++k) {
    alg_values.push_back(
        (objective.eval(pair.order_h.prefix(k)) + objective.eval(pair.order_g_reversed.prefix(k))) *
        half);
  }
  return build_report(objective, opt, alg_values);
}

namespace {

struct TraceView {
  int n = 0;
  std::vector<Subset> prefix_sets;  // H_0..H_n
  std::vector<Subset> suffix_sets;  // G_0..G_n
  std::vector<int> chosen;          // e*_1..e*_n, index 0-based step
  std::vector<Value> phi;           // phi_1..phi_n
  std::vector<Value> phi_prefix;    // phi_prefix[m] = sum of phi_1..phi_m
};

TraceView check_trace(const DoubleGreedyTrace& trace, const Oracle& g, const Oracle& h) {
  const int n = h.n();
  if (static_cast<int>(trace.steps.size()) != n) {
    fail(ErrorKind::Input, "trace has " + std::to_string(trace.steps.size()) +
                               " steps for a ground set of size " + std::to_string(n));
  }
  TraceView view;
  view.n = n;
  view.prefix_sets.push_back(0);
  view.suffix_sets.push_back(0);
  view.phi_prefix.push_back(Value(0));
  for (int i = 1; i <= n; ++i) {
    const TraceStep& step = trace.steps[i - 1];
    const Subset ph = view.prefix_sets.back();
    const Subset pg = view.suffix_sets.back();
    if (step.chosen < 0 || step.chosen >= n || contains(ph | pg, step.chosen)) {
      fail(ErrorKind::Input, "trace step " + std::to_string(i) + " repeats or exceeds the ground set");
    }
    const Value h_marg = h.marginal(step.chosen, ph);
    const Value g_marg = g.marginal(step.chosen, pg);
    const bool shape_ok =
        step.side == 'H'
            ? (step.prefix_set == (ph | bit(step.chosen)) && step.suffix_set == pg)
            : (step.suffix_set == (pg | bit(step.chosen)) && step.prefix_set == ph);
    const bool side_possible = step.side == 'H' ? g_marg <= h_marg : h_marg <= g_marg;
    if (!shape_ok || step.iteration != i || h_marg != step.h_marginal ||
        g_marg != step.g_marginal || step.phi != max(h_marg, g_marg) || !side_possible) {
      fail(ErrorKind::Input, "trace step " + std::to_string(i) + " does not match the oracles");
    }
    view.prefix_sets.push_back(step.prefix_set);
    view.suffix_sets.push_back(step.suffix_set);
    view.chosen.push_back(step.chosen);
    view.phi.push_back(step.phi);
    view.phi_prefix.push_back(view.phi_prefix.back() + step.phi);
  }
  return view;
}

}  // namespace

std::vector<CheckResult> verify_trace_invariants(const DoubleGreedyTrace& trace, const Oracle& g,
                                                 const Oracle& h, const Value& curvature_c,
                                                 const Value& gamma, bool both_submodular,
                                                 int sweep_cap) {
  if (!g.ground().same_as(h.ground())) {
    fail(ErrorKind::Input, "trace check requires identical ground sets");
  }
  if (!g.eval(0).is_zero() || !h.eval(0).is_zero()) {
    fail(ErrorKind::Precondition, "trace checks require normalized inputs");
  }
  const TraceView view = check_trace(trace, g, h);
  const int n = view.n;
  const CombinedObjective f = CombinedObjective::combine(g, h, /*normalize=*/false);
  std::vector<CheckResult> results;

  {
    CheckResult check{"trace_lower_bound", true, ""};
    for (int k = 1; k <= n; ++k) {
      if (f.eval(view.prefix_sets[k]) < view.phi_prefix[k]) {
        check.passed = false;
        check.detail = "prefix value below the increment sum at step " + std::to_string(k);
        break;
      }
    }
    if (check.passed) check.detail = "prefix value dominates the increment sum at every step";
    results.push_back(std::move(check));
  }

  if (both_submodular) {
    CheckResult check{"value_chain", true, ""};
    for (int i = 1; i <= n && check.passed; ++i) {
      if (f.eval(view.prefix_sets[i]) < f.eval(view.prefix_sets[i - 1])) {
        check.passed = false;
        check.detail = "prefix chain decreases at step " + std::to_string(i);
      }
      const Subset outer_prev = complement(n, view.suffix_sets[i - 1]);
      const Subset outer = complement(n, view.suffix_sets[i]);
      if (check.passed && f.eval(outer) < f.eval(outer_prev)) {
        check.passed = false;
        check.detail = "suffix-complement chain decreases at step " + std::to_string(i);
      }
    }
    if (check.passed && f.eval(view.prefix_sets[0]) != g.eval(full_mask(n))) {
      check.passed = false;
      check.detail = "chain start differs from the g total";
    }
    if (check.passed && f.eval(complement(n, view.suffix_sets[0])) != h.eval(full_mask(n))) {
      check.passed = false;
      check.detail = "chain end differs from the h total";
    }
    if (check.passed) check.detail = "monotone up the prefixes, down the suffix complements";
    results.push_back(std::move(check));
  }

  if (n > sweep_cap) {
    fail(ErrorKind::Capacity, "for-all-subsets trace checks capped at n = " +
                                  std::to_string(sweep_cap) + ", got n = " + std::to_string(n));
  }

  {
    // For every S with |S| = m and S not fully taken after m steps, the next
    // increment is bounded below by the scaled gap between gamma*h(S) and the
    // increments so far (all-steps term weighted c, in-S term weighted 1-c).
    CheckResult check{"per_step_bound", true, ""};
    for (Subset s = 0; s <= full_mask(n) && check.passed; ++s) {
      const int m = card(s);
      if (m >= n) continue;
      const Subset taken = view.prefix_sets[m] | view.suffix_sets[m];
      const int outside = card(s & ~taken);
      if (outside == 0) continue;  // vacuous: division by |S \ F_m|
      Value in_s_sum(0);
      for (int i = 1; i <= m; ++i) {
        if (contains(s, view.chosen[i - 1])) in_s_sum += view.phi[i - 1];
      }
      const Value target = gamma * h.eval(s);
      const Value share(1, outside);
      const Value lower = curvature_c * share * (target - view.phi_prefix[m]) +
                          (Value(1) - curvature_c) * share * (target - in_s_sum);
      if (view.phi[m] < lower) {
        check.passed = false;
        check.detail = "increment " + std::to_string(m + 1) + " below its bound";
      }
    }
    if (check.passed) check.detail = "every next increment clears its gap bound";
    results.push_back(std::move(check));
  }

  {
    // (1 - e^{-c})/c * gamma * h(S) <= sum of the first |S| increments. The
    // transcendental factor is evaluated in binary64 and relaxed downward by
    // 1e-9, which can only weaken the inequality.
    CheckResult check{"summed_bound", true, ""};
    const double c_d = curvature_c.to_double();
    const double factor_d = c_d == 0.0 ? 1.0 : -std::expm1(-c_d) / c_d;
    const Value factor = Value::from_double(std::max(0.0, factor_d - 1e-9));
    for (Subset s = 0; s <= full_mask(n) && check.passed; ++s) {
      const int k = card(s);
      if ((factor * gamma * h.eval(s)) > view.phi_prefix[k]) {
        check.passed = false;
        check.detail = "increment sum through step " + std::to_string(k) +
                       " misses the scaled target for " + subset_braced(h.ground(), s);
      }
    }
    if (check.passed) check.detail = "increment sums dominate the scaled targets for all subsets";
    results.push_back(std::move(check));
  }

  return results;
}

SymmetryResult verify_symmetry(const Oracle& g, const Oracle& h, Prec prec, const TieBreak& tie) {
  const DoubleGreedyResult forward = double_greedy(g, h, prec, tie);
  const DoubleGreedyResult mirrored = double_greedy(h, g, flipped(prec), tie);
  const int n = h.n();

  if (mirrored.ordering.positions != forward.ordering.reversed().positions) {
    return SymmetryResult{false, "mirrored run is not the exact reverse"};
  }
  for (int i = 0; i < n; ++i) {
    const TraceStep& a = forward.trace.steps[i];
    const TraceStep& b = mirrored.trace.steps[i];
    if (a.prefix_set != b.suffix_set || a.suffix_set != b.prefix_set) {
      return SymmetryResult{false,
                            "prefix/suffix sets not mirrored at step " + std::to_string(i + 1)};
    }
  }
  return SymmetryResult{true, "reversal and mirrored step sets verified"};
}

double BoundSpec::bound() const {
  const double c_d = c.to_double();
  const double gamma_d = gamma.to_double();
  switch (cls) {
    case BoundClass::General: {
      const double growth = c_d == 0.0 ? 1.0 : c_d * std::exp(c_d) / std::expm1(c_d);
      return (1.0 + growth) / gamma_d;
    }
    case BoundClass::Submodular:
      return 1.0 + std::exp(1.0) / std::expm1(1.0);
    case BoundClass::GrossSubstitute:
    case BoundClass::EqualTotals:
      return 2.0;
    case BoundClass::Randomized: {
      const double cg = c_d * gamma_d;
      return cg == 0.0 ? 2.0 / gamma_d : 2.0 * c_d * std::exp(cg) / std::expm1(cg);
    }
  }
  return 0.0;
}

std::string BoundSpec::name() const {
  switch (cls) {
    case BoundClass::General: return "general(c=" + c.str() + ",gamma=" + gamma.str() + ")";
    case BoundClass::Submodular: return "submodular";
    case BoundClass::GrossSubstitute: return "gross_substitute";
    case BoundClass::EqualTotals: return "equal_totals";
    case BoundClass::Randomized: return "randomized(c=" + c.str() + ",gamma=" + gamma.str() + ")";
  }
  return "";
}

BoundAttestation BoundAttestation::from_reports(const PropertyReport& g_report,
                                                const PropertyReport& h_report, const Oracle& g,
                                                const Oracle& h) {
  BoundAttestation a;
  a.g_monotone = g_report.structure.monotone;
  a.h_monotone = h_report.structure.monotone;
  a.g_submodular = g_report.structure.submodular;
  a.h_submodular = h_report.structure.submodular;
  a.g_gross_substitute = g_report.gross_substitute && g_report.gross_substitute->holds;
  a.h_gross_substitute = h_report.gross_substitute && h_report.gross_substitute->holds;
  a.g_total = g.eval(full_mask(g.n()));
  a.h_total = h.eval(full_mask(h.n()));
  return a;
}

BoundCheck verify_theorem_bound(const RatioReport& report, const BoundSpec& spec,
                                const BoundAttestation& att) {
  const bool monotone = att.g_monotone && att.h_monotone;
  const bool submodular = monotone && att.g_submodular && att.h_submodular;
  bool ok = false;
  switch (spec.cls) {
    case BoundClass::General:
    case BoundClass::Randomized: ok = monotone; break;
    case BoundClass::Submodular: ok = submodular; break;
    case BoundClass::GrossSubstitute:
      ok = monotone && att.g_gross_substitute && att.h_gross_substitute;
      break;
    case BoundClass::EqualTotals: ok = submodular && att.g_total == att.h_total; break;
  }
  if (!ok) {
    fail(ErrorKind::Precondition,
         "bound class " + spec.name() + " not attested for this instance");
  }

  BoundCheck check;
  check.bound_value = spec.bound();
  if (report.rho.is_infinite()) {
    check.infinite_rho = true;
    check.passed = false;
    check.slack = -std::numeric_limits<double>::infinity();
    return check;
  }
  if (!std::isfinite(check.bound_value)) {
    // gamma = 0 makes the general and randomized expressions diverge; any
    // finite rho is inside.
    check.passed = true;
    check.slack = std::numeric_limits<double>::infinity();
    return check;
  }
  check.passed = report.rho.finite() <= Value::from_double(check.bound_value + 1e-9);
  check.slack = check.bound_value - report.rho.finite().to_double();
  return check;
}

UnboundedDemo incremental_unbounded_demo(long n, const Value& epsilon) {
  if (n > 9) {
    fail(ErrorKind::Capacity, "exhaustive ordering demo capped at n = 9, got n = " +
                                  std::to_string(n));
  }
  std::map<std::string, Value> params;
  params.emplace("n", Value(n));
  params.emplace("epsilon", epsilon);
  const OracleInstance inst = instantiate(build_named_instance("incremental_unbounded", params));
  const Objective objective = inst.objective();
  const BestOrderingResult best = best_ordering(objective);
  const OptProfile opt = opt_profile(objective);
  UnboundedDemo demo;
  demo.best_ratio = best.ratio;
  demo.ordering = best.ordering;
  demo.report = competitive_ratio(objective, best.ordering, opt);
  return demo;
}

}  // namespace incdec
