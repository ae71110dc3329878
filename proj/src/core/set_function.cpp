#include "core/set_function.hpp"

#include <algorithm>
#include <bit>

#include "core/errors.hpp"
#include "core/instances.hpp"

namespace incdec {

namespace {

void validate_spec(const GroundSet& ground, const SetFunctionSpec& spec) {
  const int n = ground.n;
  if (const auto* table = std::get_if<TableSpec>(&spec)) {
    const std::size_t want = std::size_t{1} << n;
    if (table->values.size() != want) {
      fail(ErrorKind::Input, "table spec needs exactly 2^n = " + std::to_string(want) +
                                 " values, got " + std::to_string(table->values.size()));
    }
  } else if (const auto* mod = std::get_if<ModularSpec>(&spec)) {
    if (static_cast<int>(mod->weights.size()) != n) {
      fail(ErrorKind::Input, "modular spec needs n = " + std::to_string(n) + " weights, got " +
                                 std::to_string(mod->weights.size()));
    }
  } else if (const auto* cov = std::get_if<CoverageSpec>(&spec)) {
    if (cov->universe_size < 0 || cov->universe_size > kMaxCoverageUniverse) {
      fail(ErrorKind::Capacity, "coverage universe size " + std::to_string(cov->universe_size) +
                                    " outside [0, " + std::to_string(kMaxCoverageUniverse) + "]");
    }
    if (static_cast<int>(cov->sets.size()) != n) {
      fail(ErrorKind::Input, "coverage spec needs n = " + std::to_string(n) + " sets, got " +
                                 std::to_string(cov->sets.size()));
    }
    for (const auto& set : cov->sets) {
      for (std::int64_t ix : set) {
        if (ix < 0 || ix >= cov->universe_size) {
          fail(ErrorKind::Input, "coverage set index " + std::to_string(ix) +
                                     " outside universe of size " + std::to_string(cov->universe_size));
        }
      }
    }
  }
}

// Resolves a Named reference to the concrete spec of the requested component.
SetFunctionSpec resolve_named(const GroundSet& ground, const NamedSpec& named) {
  Instance built = build_named_instance(named.id, named.params);
  if (built.ground.n != ground.n) {
    fail(ErrorKind::Input, "named instance \"" + named.id + "\" has n = " +
                               std::to_string(built.ground.n) + ", ground set has n = " +
                               std::to_string(ground.n));
  }
  const std::string& component = named.component;
  if (component == "g" && built.g) return *built.g;
  if (component == "h" && built.h) return *built.h;
  if (component == "f" && built.f) return *built.f;
  fail(ErrorKind::Input, "named instance \"" + named.id + "\" has no component \"" + component + "\"");
}

}  // namespace

SetFunctionSpec zero_spec(const GroundSet& ground) {
  return ModularSpec{std::vector<Value>(ground.n, Value(0)), Value(0)};
}

struct Oracle::State {
  GroundSet ground;
  SetFunctionSpec spec;  // concrete
  Value empty_raw;

  // Coverage data: one bitset of universe words per element.
  std::vector<std::vector<std::uint64_t>> element_blocks;
  std::size_t n_words = 0;

  mutable std::mutex memo_mutex;
  mutable std::unordered_map<Subset, Value> memo;
  bool memoize = false;

  Value compute(Subset s) const {
    if (const auto* table = std::get_if<TableSpec>(&spec)) {
      return table->values[s];
    }
    if (const auto* mod = std::get_if<ModularSpec>(&spec)) {
      Value v = mod->offset;
      for (int e : subset_elements(s)) v += mod->weights[e];
      return v;
    }
    std::vector<std::uint64_t> acc(n_words, 0);
    for (int e : subset_elements(s)) {
      const auto& blocks = element_blocks[e];
      for (std::size_t w = 0; w < n_words; ++w) acc[w] |= blocks[w];
    }
    long covered = 0;
    for (std::uint64_t word : acc) covered += std::popcount(word);
    return Value(covered);
  }

  Value raw(Subset s) const {
    if (!memoize) return compute(s);
    {
      std::lock_guard<std::mutex> lock(memo_mutex);
      auto it = memo.find(s);
      if (it != memo.end()) return it->second;
    }
    Value v = compute(s);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(s, std::move(v)).first->second;
  }
};

Oracle::Oracle(GroundSet ground, SetFunctionSpec spec, bool normalized)
    : normalized_(normalized) {
  if (const auto* named = std::get_if<NamedSpec>(&spec)) {
    spec = resolve_named(ground, *named);
  }
  validate_spec(ground, spec);

  auto state = std::make_shared<State>();
  state->ground = std::move(ground);
  state->spec = std::move(spec);
  if (const auto* cov = std::get_if<CoverageSpec>(&state->spec)) {
    state->n_words = static_cast<std::size_t>((cov->universe_size + 63) / 64);
    state->element_blocks.assign(cov->sets.size(), std::vector<std::uint64_t>(state->n_words, 0));
    for (std::size_t e = 0; e < cov->sets.size(); ++e) {
      for (std::int64_t ix : cov->sets[e]) {
        state->element_blocks[e][ix / 64] |= std::uint64_t{1} << (ix % 64);
      }
    }
    // Table and modular evaluation are O(n) lookups; only unions are worth
    // remembering, and only while the key space stays small.
    state->memoize = state->ground.n <= 16;
  }
  state->empty_raw = state->compute(0);
  state_ = std::move(state);
}

const GroundSet& Oracle::ground() const { return state_->ground; }
int Oracle::n() const { return state_->ground.n; }
bool Oracle::normalized() const { return normalized_; }
const SetFunctionSpec& Oracle::spec() const { return state_->spec; }

Value Oracle::eval_raw(Subset s) const {
  check_subset(state_->ground, s);
  return state_->raw(s);
}

Value Oracle::eval(Subset s) const {
  Value v = eval_raw(s);
  if (normalized_) v -= state_->empty_raw;
  return v;
}

Value Oracle::marginal(int e, Subset s) const {
  if (e < 0 || e >= n()) fail(ErrorKind::Input, "element index out of range");
  check_subset(state_->ground, s);
  if (contains(s, e)) return Value(0);
  return eval_raw(s | bit(e)) - eval_raw(s);
}

Value Oracle::marginal_set(Subset t, Subset s) const {
  check_subset(state_->ground, t);
  check_subset(state_->ground, s);
  return eval_raw(t | s) - eval_raw(s);
}

Oracle Oracle::with_normalization(bool normalized) const {
  Oracle copy = *this;
  copy.normalized_ = normalized;
  return copy;
}

std::vector<Value> Oracle::full_table(int cap) const {
  if (n() > cap) {
    fail(ErrorKind::Capacity, "full table over n = " + std::to_string(n()) +
                                  " exceeds cap " + std::to_string(cap));
  }
  const Subset count = full_mask(n());
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  for (Subset s = 0; s <= count; ++s) out.push_back(eval(s));
  return out;
}

SetFunctionSpec normalize_zero_at_empty(const GroundSet& ground, const SetFunctionSpec& spec) {
  if (const auto* named = std::get_if<NamedSpec>(&spec)) {
    return normalize_zero_at_empty(ground, resolve_named(ground, *named));
  }
  validate_spec(ground, spec);
  if (const auto* table = std::get_if<TableSpec>(&spec)) {
    TableSpec out = *table;
    const Value shift = out.values[0];
    for (Value& v : out.values) v -= shift;
    return out;
  }
  if (const auto* mod = std::get_if<ModularSpec>(&spec)) {
    ModularSpec out = *mod;
    out.offset = Value(0);
    return out;
  }
  return spec;  // coverage is zero on the empty set already
}

CombinedObjective CombinedObjective::combine(const Oracle& g, const Oracle& h, bool normalize) {
  if (!g.ground().same_as(h.ground())) {
    fail(ErrorKind::Input, "combined objective requires identical ground sets");
  }
  if (normalize) return CombinedObjective{g.with_normalization(true), h.with_normalization(true)};
  return CombinedObjective{g, h};
}

Value CombinedObjective::eval(Subset s) const {
  check_subset(ground(), s);
  return h.eval(s) + g.eval(complement(n(), s));
}

const GroundSet& Objective::ground() const {
  if (incremental()) return std::get<Oracle>(f_).ground();
  return std::get<CombinedObjective>(f_).ground();
}

Value Objective::eval(Subset s) const {
  if (incremental()) return std::get<Oracle>(f_).eval(s);
  return std::get<CombinedObjective>(f_).eval(s);
}

const CombinedObjective& Objective::combined() const {
  if (incremental()) fail(ErrorKind::Input, "objective is incremental, no g/h pair");
  return std::get<CombinedObjective>(f_);
}

const Oracle& Objective::single() const {
  if (!incremental()) fail(ErrorKind::Input, "objective is a g/h pair, not a single function");
  return std::get<Oracle>(f_);
}

}  // namespace incdec
