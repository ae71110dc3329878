#include "core/analyzers.hpp"

#include <tuple>

#include "core/errors.hpp"

namespace incdec {

namespace {

using Table = std::vector<Value>;

Table materialize(const Oracle& oracle, int cap, const char* what) {
  if (oracle.n() > cap) {
    fail(ErrorKind::Capacity, std::string(what) + " capped at n = " + std::to_string(cap) +
                                  ", got n = " + std::to_string(oracle.n()) +
                                  " (raise the cap to override)");
  }
  return oracle.full_table(cap);
}

Value marg(const Table& table, int e, Subset s) {
  return table[s | bit(e)] - table[s];
}

StructureReport structure_impl(const Table& table, int n) {
  StructureReport report;
  report.monotone = true;
  report.submodular = true;
  report.modular = true;
  const Subset all = full_mask(n);

  for (Subset s = 0; s <= all && report.monotone; ++s) {
    for (int e = 0; e < n; ++e) {
      if (contains(s, e)) continue;
      if (table[s | bit(e)] < table[s]) {
        report.monotone = false;
        report.monotone_witness = MonotoneWitness{s, e};
        break;
      }
    }
  }

  // Local characterization: marginals of e may not grow when any single
  // element is added to the base. Equality everywhere means modular.
  for (Subset s = 0; s <= all; ++s) {
    for (int e = 0; e < n; ++e) {
      if (contains(s, e)) continue;
      const Value lhs = marg(table, e, s);
      for (int x = 0; x < n; ++x) {
        if (x == e || contains(s, x)) continue;
        const Value rhs = marg(table, e, s | bit(x));
        if (lhs != rhs) report.modular = false;
        if (lhs < rhs && report.submodular) {
          report.submodular = false;
          report.submodular_witness = SubmodularWitness{s, e, x};
        }
      }
    }
  }
  return report;
}

void require_monotone(const StructureReport& structure, const char* what) {
  if (!structure.monotone) {
    fail(ErrorKind::Precondition, std::string(what) + " requires a monotone function");
  }
}

// Shared scan for curvature and the generic submodularity ratio: both
// minimize a marginal quotient over element e and nested sets
// A subset-of T subset-of E-minus-e. `curvature_mode` selects which side
// must be positive and which way the quotient goes.
ExtremalRatio nested_ratio_scan(const Table& table, int n, bool curvature_mode) {
  Value best(1);
  std::optional<NestedPairWitness> witness;
  bool any = false;

  for (int e = 0; e < n; ++e) {
    const Subset rest = full_mask(n) & ~bit(e);
    // All marginals of e at bases avoiding e, packed by base mask.
    std::vector<Value> marg_e(static_cast<std::size_t>(full_mask(n)) + 1, Value(0));
    for (Subset a = 0; a <= full_mask(n); ++a) {
      if (!contains(a, e)) marg_e[a] = marg(table, e, a);
    }
    for (Subset a = rest;; a = (a - 1) & rest) {
      const Subset free = rest & ~a;
      for (Subset d = free;; d = (d - 1) & free) {
        const Subset t = a | d;
        const Value& at_inner = marg_e[a];
        const Value& at_outer = marg_e[t];
        const Value& denom = curvature_mode ? at_inner : at_outer;
        if (denom.is_positive()) {
          const Value ratio = curvature_mode ? at_outer / at_inner : at_inner / at_outer;
          const auto tuple = std::make_tuple(e, a, t);
          const bool better =
              !any || ratio < best ||
              (ratio == best && witness &&
               tuple < std::make_tuple(witness->element, witness->inner, witness->outer));
          if (better) {
            best = ratio;
            witness = NestedPairWitness{e, a, t};
            any = true;
          }
        }
        if (d == 0) break;
      }
      if (a == 0) break;
    }
  }

  if (!any) return ExtremalRatio{Value(1), std::nullopt};  // min over empty set
  return ExtremalRatio{best, witness};
}

ExtremalRatio curvature_impl(const Table& table, int n) {
  ExtremalRatio scan = nested_ratio_scan(table, n, /*curvature_mode=*/true);
  if (!scan.witness) return ExtremalRatio{Value(0), std::nullopt};
  return ExtremalRatio{Value(1) - scan.value, scan.witness};
}

ExtremalRatio generic_ratio_impl(const Table& table, int n) {
  return nested_ratio_scan(table, n, /*curvature_mode=*/false);
}

SubmodularityRatio submod_ratio_impl(const Table& table, int n) {
  Value best(1);
  std::optional<SetPairWitness> witness;
  bool any = false;
  const Subset all = full_mask(n);

  for (Subset a = 0; a <= all; ++a) {
    for (Subset b = 0; b <= all; ++b) {
      const Value joint = table[a | b] - table[a];
      if (!joint.is_positive()) continue;
      Value split(0);
      for (int e : subset_elements(b & ~a)) split += marg(table, e, a);
      const Value ratio = split / joint;
      const bool better = !any || ratio < best ||
                          (ratio == best && witness &&
                           std::make_tuple(a, b) < std::make_tuple(witness->base, witness->bundle));
      if (better) {
        best = ratio;
        witness = SetPairWitness{a, b};
        any = true;
      }
    }
  }
  if (!any) return SubmodularityRatio{Value(1), std::nullopt};
  return SubmodularityRatio{best, witness};
}

GrossSubstituteResult gs_impl(const Table& table, int n, const StructureReport& structure) {
  GrossSubstituteResult result;
  if (!structure.submodular) {
    result.holds = false;
    result.submodular_violation = structure.submodular_witness;
    return result;
  }

  // For disjoint A, B the exchange condition holds iff the maximum of
  // f(b|A) + f(B-b|A) over b in B is attained at least twice; a unique
  // maximizer is exactly the b without an exchange partner.
  const Subset all = full_mask(n);
  for (Subset a = 0; a <= all; ++a) {
    const Subset free = all & ~a;
    for (Subset b = free;; b = (b - 1) & free) {
      if (card(b) >= 2) {
        bool have_best = false;
        Value best_val(0);
        int best_elem = -1;
        bool tie = false;
        for (int e : subset_elements(b)) {
          Value val = marg(table, e, a) + (table[a | (b & ~bit(e))] - table[a]);
          if (!have_best || best_val < val) {
            best_val = std::move(val);
            best_elem = e;
            tie = false;
            have_best = true;
          } else if (val == best_val) {
            tie = true;
          }
        }
        if (!tie) {
          result.holds = false;
          result.exchange_violation = ExchangeWitness{a, b, best_elem};
          return result;
        }
      }
      if (b == 0) break;
    }
  }
  result.holds = true;
  return result;
}

}  // namespace

StructureReport structure_check(const Oracle& oracle, const AnalyzerCaps& caps) {
  return structure_impl(materialize(oracle, caps.triple_cap, "structure check"), oracle.n());
}

ExtremalRatio curvature(const Oracle& oracle, const AnalyzerCaps& caps) {
  const Table table = materialize(oracle, caps.triple_cap, "curvature");
  require_monotone(structure_impl(table, oracle.n()), "curvature");
  return curvature_impl(table, oracle.n());
}

ExtremalRatio generic_submodularity_ratio(const Oracle& oracle, const AnalyzerCaps& caps) {
  const Table table = materialize(oracle, caps.triple_cap, "generic submodularity ratio");
  require_monotone(structure_impl(table, oracle.n()), "generic submodularity ratio");
  return generic_ratio_impl(table, oracle.n());
}

SubmodularityRatio submodularity_ratio(const Oracle& oracle, const AnalyzerCaps& caps) {
  const Table table = materialize(oracle, caps.pair_cap, "submodularity ratio");
  require_monotone(structure_impl(table, oracle.n()), "submodularity ratio");
  return submod_ratio_impl(table, oracle.n());
}

GrossSubstituteResult gross_substitute_check(const Oracle& oracle, const AnalyzerCaps& caps) {
  const Table table = materialize(oracle, caps.triple_cap, "gross substitute check");
  const StructureReport structure = structure_impl(table, oracle.n());
  require_monotone(structure, "gross substitute check");
  return gs_impl(table, oracle.n(), structure);
}

PropertyReport analyze(const Oracle& oracle, const AnalyzerCaps& caps) {
  const Table table = materialize(oracle, caps.triple_cap, "analyzer");
  const int n = oracle.n();
  PropertyReport report;
  report.structure = structure_impl(table, n);
  if (!report.structure.monotone) return report;
  report.curvature = curvature_impl(table, n);
  report.generic_submodularity_ratio = generic_ratio_impl(table, n);
  if (n <= caps.pair_cap) report.submodularity_ratio = submod_ratio_impl(table, n);
  report.gross_substitute = gs_impl(table, n, report.structure);
  return report;
}

}  // namespace incdec
