#pragma once

#include <string>
#include <vector>

#include "core/algorithms.hpp"
#include "core/analyzers.hpp"

namespace incdec {

struct RatioRow {
  int k = 0;
  Value alg_value;
  Value opt_value;
  Subset opt_witness = 0;
  ValueOrInf ratio;
};

struct RatioReport {
  std::vector<RatioRow> rows;  // k = 1..n
  ValueOrInf rho;
  bool any_zero_denominator = false;
};

// Per-prefix value of the ordering against the optimum profile; row ratio is
// opt/alg, infinite when alg = 0 < opt, and 1 when both are 0.
RatioReport competitive_ratio(const Objective& objective, const Ordering& ordering,
                              const OptProfile& opt);

// Exact two-outcome expectation of the coin-flip strategy: per-k value is the
// average of the two prefix values.
RatioReport expected_competitive_ratio(const Objective& objective, const RandomizedPair& pair,
                                       const OptProfile& opt);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Executable forms of the per-run guarantees. curvature_c and gamma must
// cover both functions (largest curvature, smallest generic ratio). The
// value-chain check is only meaningful when both functions are submodular;
// pass the analyzer verdict in both_submodular. The two for-all-S sweeps are
// capacity-limited by sweep_cap.
std::vector<CheckResult> verify_trace_invariants(const DoubleGreedyTrace& trace, const Oracle& g,
                                                 const Oracle& h, const Value& curvature_c,
                                                 const Value& gamma, bool both_submodular,
                                                 int sweep_cap = 10);

struct SymmetryResult {
  bool passed = false;
  std::string detail;
};

// Runs the algorithm twice, with g and h swapped and the tie comparison
// flipped, and checks that the second ordering is the exact reverse with
// mirrored prefix/suffix sets at every step.
SymmetryResult verify_symmetry(const Oracle& g, const Oracle& h, Prec prec, const TieBreak& tie);

enum class BoundClass { General, Submodular, GrossSubstitute, EqualTotals, Randomized };

struct BoundSpec {
  BoundClass cls = BoundClass::Submodular;
  Value c;      // General / Randomized only
  Value gamma;  // General / Randomized only

  double bound() const;  // binary64; exact inputs, transcendental output
  std::string name() const;
};

// Analyzer verdicts the caller attests for the instance the report came
// from; a bound whose class precondition is not attested is refused.
struct BoundAttestation {
  bool g_monotone = false, h_monotone = false;
  bool g_submodular = false, h_submodular = false;
  bool g_gross_substitute = false, h_gross_substitute = false;
  Value g_total;  // g(E), normalized view
  Value h_total;

  static BoundAttestation from_reports(const PropertyReport& g_report,
                                       const PropertyReport& h_report, const Oracle& g,
                                       const Oracle& h);
};

struct BoundCheck {
  bool passed = false;
  bool infinite_rho = false;
  double bound_value = 0.0;
  double slack = 0.0;  // bound - rho
};

// Pass iff rho <= bound + 1e-9; the relaxation only ever loosens the check.
BoundCheck verify_theorem_bound(const RatioReport& report, const BoundSpec& spec,
                                const BoundAttestation& attestation);

struct UnboundedDemo {
  ValueOrInf best_ratio;
  Ordering ordering;
  RatioReport report;
};

// Exhaustive best incremental ordering for the single-function instance with
// a distinguished all-or-nothing element; the ratio grows with n.
UnboundedDemo incremental_unbounded_demo(long n, const Value& epsilon);

}  // namespace incdec
