#include "core/generators.hpp"

#include "core/errors.hpp"

namespace incdec {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

SetFunctionSpec random_monotone_table(Rng& rng, int n) {
  // Walk masks in increasing popcount order and add a nonnegative increment
  // on top of the largest one-element-removed value.
  const std::size_t size = std::size_t{1} << n;
  std::vector<Value> values(size, Value(0));
  for (Subset s = 1; s < size; ++s) {
    Value base(0);
    for (int e : subset_elements(s)) base = max(base, values[s & ~bit(e)]);
    values[s] = base + Value(static_cast<long>(rng.below(7)), 2);
  }
  return TableSpec{std::move(values)};
}

SetFunctionSpec random_modular(Rng& rng, int n) {
  ModularSpec spec;
  spec.offset = Value(0);
  for (int i = 0; i < n; ++i) {
    spec.weights.push_back(Value(static_cast<long>(rng.below(9)), 2));
  }
  return spec;
}

SetFunctionSpec random_coverage(Rng& rng, int n, int max_universe) {
  const std::int64_t universe = 4 + static_cast<std::int64_t>(rng.below(max_universe - 3));
  const std::uint64_t density = 1 + rng.below(3);  // membership chance density/4
  CoverageSpec spec;
  spec.universe_size = universe;
  spec.sets.resize(n);
  for (int e = 0; e < n; ++e) {
    for (std::int64_t ix = 0; ix < universe; ++ix) {
      if (rng.below(4) < density) spec.sets[e].push_back(ix);
    }
  }
  return spec;
}

SetFunctionSpec random_supermodular_table(Rng& rng, int n) {
  std::vector<Value> singles, pairs;
  for (int i = 0; i < n; ++i) singles.push_back(Value(static_cast<long>(rng.below(4))));
  for (int i = 0; i < n * n; ++i) pairs.push_back(Value(static_cast<long>(rng.below(3))));

  const std::size_t size = std::size_t{1} << n;
  std::vector<Value> values(size, Value(0));
  for (Subset s = 1; s < size; ++s) {
    Value v(0);
    const auto elems = subset_elements(s);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      v += singles[elems[i]];
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        v += pairs[elems[i] * n + elems[j]];
      }
    }
    values[s] = v;
  }
  return TableSpec{std::move(values)};
}

Instance random_coverage_pair(std::uint64_t seed, int n, int max_universe) {
  Rng rng(seed);
  Instance out;
  out.ground = GroundSet(n);
  out.g = random_coverage(rng, n, max_universe);
  out.h = random_coverage(rng, n, max_universe);
  return out;
}

Instance random_monotone_pair(std::uint64_t seed, int max_n) {
  Rng rng(seed);
  const int n = 2 + static_cast<int>(rng.below(max_n - 1));
  auto pick = [&](int kind) -> SetFunctionSpec {
    switch (kind) {
      case 0: return random_monotone_table(rng, n);
      case 1: return random_modular(rng, n);
      default: return random_coverage(rng, n, 24);
    }
  };
  const int g_kind = static_cast<int>(rng.below(3));
  const int h_kind = static_cast<int>(rng.below(3));
  Instance out;
  out.ground = GroundSet(n);
  out.g = pick(g_kind);
  out.h = pick(h_kind);
  return out;
}

Instance random_equal_totals_pair(std::uint64_t seed, int n, int max_universe) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Instance pair = random_coverage_pair(seed + (attempt << 32), n, max_universe);
    Oracle g(pair.ground, *pair.g);
    Oracle h(pair.ground, *pair.h);
    const Value g_total = g.eval(full_mask(n));
    const Value h_total = h.eval(full_mask(n));
    if (g_total.is_zero() || h_total.is_zero()) continue;

    const Value scale = h_total / g_total;
    TableSpec scaled;
    scaled.values.reserve(std::size_t{1} << n);
    for (Subset s = 0; s <= full_mask(n); ++s) scaled.values.push_back(g.eval(s) * scale);
    pair.g = std::move(scaled);
    return pair;
  }
}

}  // namespace incdec
