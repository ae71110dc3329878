#include "core/algorithms.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace incdec {

Subset Ordering::prefix(int k) const {
  Subset s = 0;
  for (int j = 0; j < k; ++j) s |= bit(positions[j]);
  return s;
}

Ordering Ordering::reversed() const {
  Ordering out = *this;
  std::reverse(out.positions.begin(), out.positions.end());
  return out;
}

Prec flipped(Prec prec) { return prec == Prec::Le ? Prec::Lt : Prec::Le; }

std::string prec_name(Prec prec) { return prec == Prec::Le ? "le" : "lt"; }

TieBreak TieBreak::by_priority(std::vector<int> ranking) {
  std::vector<int> sorted = ranking;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::Input, "tie-break priority repeats an element");
  }
  for (int e : sorted) {
    if (e < 0) fail(ErrorKind::Input, "tie-break priority has a negative element index");
  }
  return TieBreak{Kind::Priority, std::move(ranking)};
}

namespace {

// Partial rankings lose against any listed element and fall back to index
// order among themselves.
long priority_rank(const std::vector<int>& priority, int e) {
  auto it = std::find(priority.begin(), priority.end(), e);
  if (it != priority.end()) return it - priority.begin();
  return static_cast<long>(priority.size()) + e;
}

}  // namespace

bool TieBreak::prefers(int candidate, int incumbent) const {
  switch (kind) {
    case Kind::MinIndex:
      return candidate < incumbent;
    case Kind::MaxIndex:
      return candidate > incumbent;
    case Kind::Priority:
      return priority_rank(priority, candidate) < priority_rank(priority, incumbent);
  }
  return false;
}

std::string TieBreak::describe(const GroundSet& ground) const {
  switch (kind) {
    case Kind::MinIndex:
      return "min-index";
    case Kind::MaxIndex:
      return "max-index";
    case Kind::Priority: {
      std::string out = "priority:";
      for (std::size_t i = 0; i < priority.size(); ++i) {
        if (i) out += ",";
        out += ground.labels[priority[i]];
      }
      return out;
    }
  }
  return "";
}

Ordering greedy_order(const Oracle& oracle, const TieBreak& tie) {
  const int n = oracle.n();
  Ordering out;
  out.positions.reserve(n);
  Subset chosen = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    Value best_gain(0);
    for (int e = 0; e < n; ++e) {
      if (contains(chosen, e)) continue;
      Value gain = oracle.marginal(e, chosen);
      if (best < 0 || best_gain < gain || (gain == best_gain && tie.prefers(e, best))) {
        best = e;
        best_gain = std::move(gain);
      }
    }
    out.positions.push_back(best);
    chosen |= bit(best);
  }
  return out;
}

DoubleGreedyResult double_greedy(const Oracle& g, const Oracle& h, Prec prec,
                                 const TieBreak& tie, bool auto_normalize) {
  if (!g.ground().same_as(h.ground())) {
    fail(ErrorKind::Input, "double greedy requires identical ground sets");
  }
  Oracle g_use = g;
  Oracle h_use = h;
  if (!g_use.eval(0).is_zero() || !h_use.eval(0).is_zero()) {
    if (!auto_normalize) {
      fail(ErrorKind::Precondition,
           "double greedy requires normalized inputs (value 0 on the empty set); "
           "normalize first or pass auto_normalize");
    }
    g_use = g_use.with_normalization(true);
    h_use = h_use.with_normalization(true);
  }

  const int n = h_use.n();
  DoubleGreedyResult result;
  result.ordering.positions.assign(n, -1);

  Subset prefix_set = 0;  // grows from the front under h
  Subset suffix_set = 0;  // grows from the back under g
  for (int i = 1; i <= n; ++i) {
    const Subset taken = prefix_set | suffix_set;
    int best = -1;
    Value best_phi(0), best_h(0), best_g(0);
    for (int e = 0; e < n; ++e) {
      if (contains(taken, e)) continue;
      Value h_gain = h_use.marginal(e, prefix_set);
      Value g_gain = g_use.marginal(e, suffix_set);
      Value phi = max(h_gain, g_gain);
      if (best < 0 || best_phi < phi || (phi == best_phi && tie.prefers(e, best))) {
        best = e;
        best_phi = std::move(phi);
        best_h = std::move(h_gain);
        best_g = std::move(g_gain);
      }
    }

    const bool to_suffix = prec == Prec::Le ? best_h <= best_g : best_h < best_g;
    TraceStep step;
    step.iteration = i;
    step.chosen = best;
    step.phi = best_phi;
    step.h_marginal = best_h;
    step.g_marginal = best_g;
    if (to_suffix) {
      suffix_set |= bit(best);
      step.side = 'G';
      result.ordering.positions[n - card(suffix_set)] = best;
    } else {
      prefix_set |= bit(best);
      step.side = 'H';
      result.ordering.positions[card(prefix_set) - 1] = best;
    }
    step.prefix_set = prefix_set;
    step.suffix_set = suffix_set;
    result.trace.steps.push_back(std::move(step));
  }
  return result;
}

RandomizedPair randomized_pair(const Oracle& g, const Oracle& h, const TieBreak& tie) {
  if (!g.ground().same_as(h.ground())) {
    fail(ErrorKind::Input, "randomized pair requires identical ground sets");
  }
  return RandomizedPair{greedy_order(h, tie), greedy_order(g, tie).reversed()};
}

OptProfile opt_profile(const Objective& objective, int cap) {
  const int n = objective.n();
  if (n > cap) {
    fail(ErrorKind::Capacity, "optimum profile capped at n = " + std::to_string(cap) +
                                  ", got n = " + std::to_string(n) +
                                  " (raise the profile cap to override)");
  }
  OptProfile profile;
  profile.by_size.resize(n + 1);
  std::vector<bool> seen(n + 1, false);
  // Plain 2^n sweep; the per-size maxima fall out of one pass.
  for (Subset s = 0; s <= full_mask(n); ++s) {
    const int k = card(s);
    Value v = objective.eval(s);
    OptRow& row = profile.by_size[k];
    if (!seen[k] || row.value < v || (v == row.value && subset_seq_less(s, row.witness))) {
      row.value = std::move(v);
      row.witness = s;
      seen[k] = true;
    }
  }
  return profile;
}

namespace {

struct OrderSearch {
  const std::vector<Value>* table;
  const OptProfile* opt;
  int n = 0;
  ValueOrInf incumbent = ValueOrInf::infinity();
  bool have_incumbent = false;
  std::vector<int> current;
  std::vector<int> best;

  // Ratio of one prefix; OPT_k = alg = 0 counts as 1.
  ValueOrInf step_ratio(const Value& alg, const Value& opt_v) const {
    if (alg.is_positive()) return ValueOrInf(opt_v / alg);
    if (opt_v.is_positive()) return ValueOrInf::infinity();
    return ValueOrInf(Value(1));
  }

  void dfs(Subset prefix, int depth, const ValueOrInf& partial) {
    if (depth == n) {
      // Strict improvement keeps the first (sequence-smallest) minimizer.
      if (!have_incumbent || partial < incumbent) {
        incumbent = partial;
        best = current;
        have_incumbent = true;
      }
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (contains(prefix, e)) continue;
      const Subset next = prefix | bit(e);
      const int k = depth + 1;
      ValueOrInf r = step_ratio((*table)[next], opt->by_size[k].value);
      if (partial > r) r = partial;
      // Prefix maxima only grow, so nothing below can beat the incumbent.
      if (have_incumbent && r >= incumbent) continue;
      current.push_back(e);
      dfs(next, k, r);
      current.pop_back();
    }
  }
};

}  // namespace

BestOrderingResult best_ordering(const Objective& objective, int cap) {
  const int n = objective.n();
  if (n > cap) {
    fail(ErrorKind::Capacity, "exhaustive ordering search capped at n = " + std::to_string(cap) +
                                  ", got n = " + std::to_string(n) +
                                  " (raise the order cap to override)");
  }
  const OptProfile opt = opt_profile(objective, cap >= 20 ? cap : 20);

  std::vector<Value> table;
  table.reserve(std::size_t{1} << n);
  for (Subset s = 0; s <= full_mask(n); ++s) table.push_back(objective.eval(s));

  OrderSearch search;
  search.table = &table;
  search.opt = &opt;
  search.n = n;
  search.dfs(0, 0, ValueOrInf(Value(0)));
  return BestOrderingResult{Ordering{search.best}, search.incumbent};
}

}  // namespace incdec
