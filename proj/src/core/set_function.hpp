#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "core/ground.hpp"
#include "core/value.hpp"

namespace incdec {

inline constexpr std::int64_t kMaxCoverageUniverse = 10'000'000;

// Full value table indexed by subset mask; length exactly 2^n.
struct TableSpec {
  std::vector<Value> values;
};

// offset + sum of member weights.
struct ModularSpec {
  std::vector<Value> weights;
  Value offset;
};

// Element i covers sets[i] within a universe of the given size; the value of
// a subset is the cardinality of the union of its members' sets.
struct CoverageSpec {
  std::int64_t universe_size = 0;
  std::vector<std::vector<std::int64_t>> sets;
};

// Reference into the named-instance catalog; resolved before evaluation.
// component selects which function of the built instance to use ("g", "h" or
// "f"); parsing fills it from the slot the spec appears in.
struct NamedSpec {
  std::string id;
  std::map<std::string, Value> params;
  std::string component;
};

using SetFunctionSpec = std::variant<TableSpec, ModularSpec, CoverageSpec, NamedSpec>;

SetFunctionSpec zero_spec(const GroundSet& ground);

// Shifts every value by -f(empty); idempotent. Named specs are resolved
// first.
SetFunctionSpec normalize_zero_at_empty(const GroundSet& ground, const SetFunctionSpec& spec);

// Memoized evaluator for one set function. Copies share the spec and the
// memo; evaluation is pure and safe to call from several threads.
class Oracle {
 public:
  Oracle(GroundSet ground, SetFunctionSpec spec, bool normalized = false);

  const GroundSet& ground() const;
  int n() const;
  bool normalized() const;
  const SetFunctionSpec& spec() const;  // resolved (never Named)

  // Normalized handles report raw(S) - raw(empty); eval(empty) == 0 then.
  Value eval(Subset s) const;
  Value eval_raw(Subset s) const;
  Value marginal(int e, Subset s) const;           // eval(S+e) - eval(S); 0 when e in S
  Value marginal_set(Subset t, Subset s) const;    // eval(T|S)

  Oracle with_normalization(bool normalized) const;

  // All 2^n normalized-view values; capacity error above the given cap.
  std::vector<Value> full_table(int cap = 20) const;

 private:
  struct State;
  std::shared_ptr<const State> state_;
  bool normalized_ = false;
};

// f(S) = h(S) + g(E \ S) over a shared ground set. combine() normalizes both
// sides by default and records that on the handles.
struct CombinedObjective {
  Oracle g;
  Oracle h;

  static CombinedObjective combine(const Oracle& g, const Oracle& h, bool normalize = true);

  const GroundSet& ground() const { return h.ground(); }
  int n() const { return h.n(); }
  Value eval(Subset s) const;
};

// Either a combined g/h objective or a single function evaluated directly
// (the incremental special case).
class Objective {
 public:
  explicit Objective(CombinedObjective f) : f_(std::move(f)) {}
  explicit Objective(Oracle single) : f_(std::move(single)) {}

  bool incremental() const { return std::holds_alternative<Oracle>(f_); }
  const GroundSet& ground() const;
  int n() const { return ground().n; }
  Value eval(Subset s) const;
  const CombinedObjective& combined() const;
  const Oracle& single() const;

 private:
  std::variant<CombinedObjective, Oracle> f_;
};

}  // namespace incdec
