#include "core/instances.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace incdec {

CombinedObjective OracleInstance::combined() const {
  if (incremental()) fail(ErrorKind::Input, "incremental instance has no g/h pair");
  // Handles are already normalized (or deliberately raw); keep them as-is.
  return CombinedObjective::combine(*g, *h, /*normalize=*/false);
}

Objective OracleInstance::objective() const {
  if (incremental()) return Objective(*f);
  return Objective(combined());
}

OracleInstance instantiate(const Instance& instance, bool normalize) {
  const bool norm = normalize && !instance.raw;
  OracleInstance out;
  out.ground = instance.ground;
  if (instance.incremental()) {
    out.f = Oracle(instance.ground, *instance.f, norm);
    return out;
  }
  if (!instance.g || !instance.h) {
    fail(ErrorKind::Input, "instance needs either both g and h or a single f");
  }
  out.g = Oracle(instance.ground, *instance.g, norm);
  out.h = Oracle(instance.ground, *instance.h, norm);
  return out;
}

namespace {

Value get_param(const std::map<std::string, Value>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) fail(ErrorKind::Input, "missing instance parameter \"" + key + "\"");
  return it->second;
}

long get_int_param(const std::map<std::string, Value>& params, const std::string& key,
                   long lo, long hi) {
  Value v = get_param(params, key);
  if (!v.is_integer()) fail(ErrorKind::Input, "parameter \"" + key + "\" must be an integer");
  long x = v.to_long();
  if (x < lo || x > hi) {
    fail(ErrorKind::Input, "parameter \"" + key + "\" = " + std::to_string(x) +
                               " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x;
}

void reject_unknown_params(const std::map<std::string, Value>& params,
                           std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find_if(known.begin(), known.end(),
                     [&](const char* k) { return key == k; }) == known.end()) {
      fail(ErrorKind::Input, "unknown instance parameter \"" + key + "\"");
    }
  }
}

// g = h; element 0 plays the distinguished role e*. Value of S is
// n-1 + (1-c)|S \ {e*}| when e* is in S and |S| otherwise.
Instance curvature_lb(const std::map<std::string, Value>& params) {
  reject_unknown_params(params, {"n", "c"});
  const long n = get_int_param(params, "n", 2, 16);
  const Value c = get_param(params, "c");
  if (c.is_negative() || Value(1) < c) fail(ErrorKind::Input, "parameter \"c\" must be in [0, 1]");

  TableSpec table;
  table.values.reserve(std::size_t{1} << n);
  for (Subset s = 0; s <= full_mask(static_cast<int>(n)); ++s) {
    if (contains(s, 0)) {
      const long rest = card(s) - 1;
      table.values.push_back(Value(n - 1) + (Value(1) - c) * Value(rest));
    } else {
      table.values.push_back(Value(card(s)));
    }
  }
  Instance out;
  out.ground = GroundSet(static_cast<int>(n));
  out.g = table;
  out.h = table;
  return out;
}

// Three elements a,b,c with g = h; the a,c marginals grow by a factor 1/gamma
// once the other one is present.
Instance gamma_lb(const std::map<std::string, Value>& params) {
  reject_unknown_params(params, {"gamma"});
  const Value gamma = get_param(params, "gamma");
  if (!gamma.is_positive() || Value(1) < gamma) {
    fail(ErrorKind::Input, "parameter \"gamma\" must be in (0, 1]");
  }
  const Value inv = Value(1) / gamma;

  // Mask order: a=bit0, b=bit1, c=bit2.
  TableSpec table;
  table.values = {
      Value(0),         // {}
      Value(1),         // {a}
      Value(1),         // {b}
      Value(2),         // {a,b}
      Value(1),         // {c}
      Value(1) + inv,   // {a,c}
      Value(2),         // {b,c}
      Value(2) + inv,   // {a,b,c}
  };
  Instance out;
  out.ground = GroundSet(3, {"a", "b", "c"});
  out.g = table;
  out.h = table;
  return out;
}

Instance gross_substitute_lb(const std::map<std::string, Value>& params) {
  reject_unknown_params(params, {});
  TableSpec h;
  h.values = {
      Value(0),  // {}
      Value(1),  // {a}
      Value(2),  // {b}
      Value(3),  // {a,b}
      Value(2),  // {c}
      Value(3),  // {a,c}
      Value(2),  // {b,c}
      Value(3),  // {a,b,c}
  };
  TableSpec g;
  g.values = {
      Value(0),  // {}
      Value(2),  // {a}
      Value(1),  // {b}
      Value(3),  // {a,b}
      Value(2),  // {c}
      Value(2),  // {a,c}
      Value(3),  // {b,c}
      Value(3),  // {a,b,c}
  };
  Instance out;
  out.ground = GroundSet(3, {"a", "b", "c"});
  out.g = g;
  out.h = h;
  return out;
}

Instance modular_remark(const std::map<std::string, Value>& params) {
  reject_unknown_params(params, {});
  Instance out;
  out.ground = GroundSet(2, {"a", "b"});
  out.g = ModularSpec{{Value(1), Value(0)}, Value(0)};
  out.h = ModularSpec{{Value(1), Value(1)}, Value(0)};
  return out;
}

// Ground set A_1..A_k, B_1..B_k over the universe of k-tuples with entries
// 1..k. A_i fixes the last coordinate to i, B_i fixes coordinate i to k
// (so A_k and B_k cover the same tuples). h counts covered tuples; g is
// modular with g({B_i}) = (k-1)^(i-1) k^(k-i) and g({A_i}) = 0.
Instance coverage_tight(const std::map<std::string, Value>& params) {
  reject_unknown_params(params, {"k"});
  const long k = get_int_param(params, "k", 2, 6);

  std::int64_t universe = 1;
  for (long i = 0; i < k; ++i) universe *= k;

  // Tuple (x_1..x_k), entries in 1..k, encoded as sum (x_j - 1) k^(j-1).
  std::vector<std::vector<std::int64_t>> sets(2 * k);
  for (std::int64_t t = 0; t < universe; ++t) {
    std::int64_t rem = t;
    for (long j = 0; j < k; ++j) {
      const long coord = static_cast<long>(rem % k) + 1;
      rem /= k;
      if (j == k - 1) sets[coord - 1].push_back(t);  // A_coord
      if (coord == k) sets[k + j].push_back(t);      // B_{j+1}
    }
  }

  std::vector<std::string> labels;
  for (long i = 1; i <= k; ++i) labels.push_back("A" + std::to_string(i));
  for (long i = 1; i <= k; ++i) labels.push_back("B" + std::to_string(i));

  ModularSpec g;
  g.weights.assign(2 * k, Value(0));
  for (long i = 1; i <= k; ++i) {
    g.weights[k + i - 1] =
        Value::ipow(k - 1, static_cast<unsigned long>(i - 1)) *
        Value::ipow(k, static_cast<unsigned long>(k - i));
  }

  Instance out;
  out.ground = GroundSet(static_cast<int>(2 * k), labels);
  out.g = g;
  out.h = CoverageSpec{universe, std::move(sets)};
  return out;
}

// Single non-monotone function: 1 once e* (= element 0) is present, |S| *
// epsilon otherwise. Only meaningful in incremental mode.
Instance incremental_unbounded(const std::map<std::string, Value>& params) {
  reject_unknown_params(params, {"n", "epsilon"});
  const long n = get_int_param(params, "n", 2, 16);
  const Value eps = get_param(params, "epsilon");
  if (!eps.is_positive() || Value(1) <= eps) {
    fail(ErrorKind::Input, "parameter \"epsilon\" must be in (0, 1)");
  }
  TableSpec table;
  table.values.reserve(std::size_t{1} << n);
  for (Subset s = 0; s <= full_mask(static_cast<int>(n)); ++s) {
    table.values.push_back(contains(s, 0) ? Value(1) : Value(card(s)) * eps);
  }
  Instance out;
  out.ground = GroundSet(static_cast<int>(n));
  out.f = table;
  return out;
}

}  // namespace

const std::vector<std::string>& named_instance_ids() {
  static const std::vector<std::string> ids = {
      "curvature_lb",       "gamma_lb",       "gross_substitute_lb",
      "modular_remark",     "coverage_tight", "incremental_unbounded",
  };
  return ids;
}

Instance build_named_instance(const std::string& id, const std::map<std::string, Value>& params) {
  if (id == "curvature_lb") return curvature_lb(params);
  if (id == "gamma_lb") return gamma_lb(params);
  if (id == "gross_substitute_lb") return gross_substitute_lb(params);
  if (id == "modular_remark") return modular_remark(params);
  if (id == "coverage_tight") return coverage_tight(params);
  if (id == "incremental_unbounded") return incremental_unbounded(params);
  fail(ErrorKind::Input, "unknown named instance id \"" + id + "\"");
}

}  // namespace incdec
