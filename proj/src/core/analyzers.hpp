#pragma once

#include <optional>
#include <vector>

#include "core/set_function.hpp"

namespace incdec {

// Enumeration caps: the nested-subset analyzers cost O(3^n * n), the
// set-pair analyzer costs O(4^n * n).
struct AnalyzerCaps {
  int triple_cap = 12;
  int pair_cap = 10;
};

struct MonotoneWitness {
  Subset base;  // f(base + element) < f(base)
  int element;
};

struct SubmodularWitness {
  Subset base;  // f(element | base) < f(element | base + other)
  int element;
  int other;
};

// Pair A subset-of T avoiding the element; both curvature and the generic
// submodularity ratio minimize over these.
struct NestedPairWitness {
  int element;
  Subset inner;
  Subset outer;
};

struct SetPairWitness {
  Subset base;    // A
  Subset bundle;  // B
};

struct ExchangeWitness {
  Subset base;    // A
  Subset bundle;  // B, disjoint from A, |B| >= 2
  int element;    // the b with no valid exchange partner
};

struct StructureReport {
  bool monotone = false;
  std::optional<MonotoneWitness> monotone_witness;
  bool submodular = false;
  std::optional<SubmodularWitness> submodular_witness;
  bool modular = false;
};

struct ExtremalRatio {
  Value value;
  std::optional<NestedPairWitness> witness;  // empty when no pair qualifies
};

struct SubmodularityRatio {
  Value value;
  std::optional<SetPairWitness> witness;
};

struct GrossSubstituteResult {
  bool holds = false;
  std::optional<SubmodularWitness> submodular_violation;
  std::optional<ExchangeWitness> exchange_violation;
};

struct PropertyReport {
  StructureReport structure;
  // Present only for monotone inputs; submodularity_ratio additionally
  // requires n within the pair cap.
  std::optional<ExtremalRatio> curvature;
  std::optional<ExtremalRatio> generic_submodularity_ratio;
  std::optional<SubmodularityRatio> submodularity_ratio;
  std::optional<GrossSubstituteResult> gross_substitute;
};

StructureReport structure_check(const Oracle& oracle, const AnalyzerCaps& caps = {});
ExtremalRatio curvature(const Oracle& oracle, const AnalyzerCaps& caps = {});
ExtremalRatio generic_submodularity_ratio(const Oracle& oracle, const AnalyzerCaps& caps = {});
SubmodularityRatio submodularity_ratio(const Oracle& oracle, const AnalyzerCaps& caps = {});
GrossSubstituteResult gross_substitute_check(const Oracle& oracle, const AnalyzerCaps& caps = {});

// One pass sharing a single materialized table across all checks.
PropertyReport analyze(const Oracle& oracle, const AnalyzerCaps& caps = {});

}  // namespace incdec
