#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/ground.hpp"
#include "core/set_function.hpp"
#include "core/value.hpp"

namespace incdec {

// A declarative instance: either a g/h pair or a single function f evaluated
// in incremental mode.
struct Instance {
  GroundSet ground;
  std::optional<SetFunctionSpec> g;
  std::optional<SetFunctionSpec> h;
  std::optional<SetFunctionSpec> f;
  bool raw = false;  // skip normalization when instantiating

  bool incremental() const { return f.has_value(); }
};

// Resolved, evaluation-ready form.
struct OracleInstance {
  GroundSet ground;
  std::optional<Oracle> g;
  std::optional<Oracle> h;
  std::optional<Oracle> f;

  bool incremental() const { return f.has_value(); }
  CombinedObjective combined() const;  // input error in incremental mode
  Objective objective() const;
};

OracleInstance instantiate(const Instance& instance, bool normalize = true);

// Catalog ids: curvature_lb(n, c), gamma_lb(gamma), gross_substitute_lb,
// modular_remark, coverage_tight(k), incremental_unbounded(n, epsilon).
const std::vector<std::string>& named_instance_ids();

Instance build_named_instance(const std::string& id, const std::map<std::string, Value>& params);

}  // namespace incdec
