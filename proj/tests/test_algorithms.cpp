#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "test_helpers.hpp"

using namespace incdec;

namespace {

Oracle modular_oracle(const GroundSet& ground, std::vector<long> weights) {
  ModularSpec spec;
  for (long w : weights) spec.weights.push_back(Value(w));
  spec.offset = Value(0);
  return Oracle(ground, spec, true);
}

std::vector<int> positions(const Ordering& o) { return o.positions; }

}  // namespace

TEST_CASE("greedy order sorts modular weights descending") {
  const GroundSet ground(3);
  CHECK(positions(greedy_order(modular_oracle(ground, {3, 1, 2}))) == std::vector<int>{0, 2, 1});
}

TEST_CASE("greedy order ties fall to the tie-break") {
  const OracleInstance cover = reference::named("coverage_tight", {{"k", Value(3)}});
  // All six singleton marginals equal 9, so the first pick is pure tie-break.
  CHECK(greedy_order(*cover.h).positions[0] == 0);
  CHECK(greedy_order(*cover.h, TieBreak::max_index()).positions[0] == 5);

  const GroundSet ground(4);
  const Oracle zero(ground, zero_spec(ground), true);
  CHECK(positions(greedy_order(zero)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("double greedy walks the tight modular example to (a, b)") {
  const OracleInstance inst = reference::named("modular_remark");
  const DoubleGreedyResult run =
      double_greedy(*inst.g, *inst.h, Prec::Lt, TieBreak::by_priority({0}));
  CHECK(positions(run.ordering) == std::vector<int>{0, 1});
  CHECK(inst.combined().eval(run.ordering.prefix(1)) == Value(1));
  CHECK(run.trace.steps[0].side == 'H');
}

TEST_CASE("double greedy can be forced onto the B family of the tight coverage instance") {
  const OracleInstance inst = reference::named("coverage_tight", {{"k", Value(3)}});
  const DoubleGreedyResult run =
      double_greedy(*inst.g, *inst.h, Prec::Lt, TieBreak::by_priority({3, 4, 5}));
  Subset prefix_half = 0;
  for (int i = 0; i < 3; ++i) {
    CHECK(run.trace.steps[i].side == 'H');
    prefix_half |= bit(run.trace.steps[i].chosen);
  }
  CHECK(run.trace.steps[2].prefix_set == (bit(3) | bit(4) | bit(5)));
  CHECK(run.trace.steps[2].suffix_set == 0);
  CHECK(prefix_half == (bit(3) | bit(4) | bit(5)));
}

TEST_CASE("double greedy with a silent g reduces to the greedy order") {
  const GroundSet ground(3);
  const Oracle g(ground, zero_spec(ground), true);
  const Oracle h = modular_oracle(ground, {3, 1, 2});
  const DoubleGreedyResult run = double_greedy(g, h, Prec::Lt);
  CHECK(positions(run.ordering) == positions(greedy_order(h)));
  for (const TraceStep& step : run.trace.steps) CHECK(step.side == 'H');
}

TEST_CASE("double greedy rejects unnormalized input unless asked to fix it") {
  const GroundSet ground(2);
  const Oracle raw(ground, ModularSpec{{Value(1), Value(1)}, Value(5)});
  const Oracle fine(ground, zero_spec(ground), true);
  CHECK_THROWS_AS(double_greedy(raw, fine), Error);
  const DoubleGreedyResult run = double_greedy(raw, fine, Prec::Le, TieBreak::min_index(), true);
  CHECK(run.ordering.n() == 2);

  const GroundSet other(3);
  const Oracle stray(other, zero_spec(other), true);
  CHECK_THROWS_AS(double_greedy(stray, fine), Error);
}

TEST_CASE("trace records sides, marginals and placement per the rules") {
  for (std::uint64_t seed : {81ULL, 82ULL, 83ULL}) {
    const OracleInstance inst = instantiate(random_monotone_pair(seed, 7));
    const int n = inst.ground.n;
    for (Prec prec : {Prec::Le, Prec::Lt}) {
      const DoubleGreedyResult run = double_greedy(*inst.g, *inst.h, prec);
      Subset prefix_set = 0, suffix_set = 0;
      int prefix_count = 0, suffix_count = 0;
      for (int i = 0; i < n; ++i) {
        const TraceStep& step = run.trace.steps[i];
        const Value h_marg = inst.h->marginal(step.chosen, prefix_set);
        const Value g_marg = inst.g->marginal(step.chosen, suffix_set);
        CHECK(step.h_marginal == h_marg);
        CHECK(step.g_marginal == g_marg);
        CHECK(step.phi == max(h_marg, g_marg));
        CHECK_FALSE(step.phi.is_negative());
        const bool to_suffix = prec == Prec::Le ? h_marg <= g_marg : h_marg < g_marg;
        CHECK(step.side == (to_suffix ? 'G' : 'H'));
        if (to_suffix) {
          suffix_set |= bit(step.chosen);
          ++suffix_count;
          CHECK(run.ordering.positions[n - suffix_count] == step.chosen);
        } else {
          prefix_set |= bit(step.chosen);
          ++prefix_count;
          CHECK(run.ordering.positions[prefix_count - 1] == step.chosen);
        }
        CHECK(step.prefix_set == prefix_set);
        CHECK(step.suffix_set == suffix_set);
        CHECK((step.prefix_set & step.suffix_set) == 0);
        CHECK(card(step.prefix_set) + card(step.suffix_set) == i + 1);
      }
      // Prefixes of the output agree with the recorded snapshots while the
      // prefix side is still growing.
      for (int k = 1; k <= prefix_count; ++k) {
        bool matched = false;
        for (const TraceStep& step : run.trace.steps) {
          matched = matched || (card(step.prefix_set) == k && run.ordering.prefix(k) == step.prefix_set);
        }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("randomized pair") {
  const GroundSet ground(3);
  const Oracle g(ground, zero_spec(ground), true);
  const Oracle h = modular_oracle(ground, {3, 1, 2});
  const RandomizedPair silent = randomized_pair(g, h);
  CHECK(positions(silent.order_h) == std::vector<int>{0, 2, 1});
  CHECK(positions(silent.order_g_reversed) == std::vector<int>{2, 1, 0});

  const OracleInstance remark = reference::named("modular_remark");
  const RandomizedPair pair = randomized_pair(*remark.g, *remark.h);
  CHECK(positions(pair.order_h) == std::vector<int>{0, 1});
  CHECK(positions(pair.order_g_reversed) == std::vector<int>{1, 0});

  const OracleInstance gs = reference::named("gross_substitute_lb");
  const RandomizedPair gs_pair = randomized_pair(*gs.g, *gs.h);
  CHECK(positions(gs_pair.order_h) == std::vector<int>{1, 0, 2});        // (b, a, c)
  CHECK(positions(gs_pair.order_g_reversed) == std::vector<int>{2, 1, 0});  // reverse of (a, b, c)
}

TEST_CASE("optimum profile for the gross-substitute instance") {
  const OracleInstance gs = reference::named("gross_substitute_lb");
  const OptProfile opt = opt_profile(gs.objective());
  CHECK(opt.by_size[0].value == Value(3));  // empty prefix keeps all of g
  CHECK(opt.by_size[1].value == Value(5));
  CHECK(opt.by_size[1].witness == bit(2));  // {c}
  CHECK(opt.by_size[2].value == Value(5));
  CHECK(opt.by_size[2].witness == (bit(0) | bit(1)));  // {a,b}
  CHECK(opt.by_size[3].value == Value(3));
}

TEST_CASE("optimum profile matches an independent combination walk") {
  const std::vector<OracleInstance> instances = {
      reference::named("gross_substitute_lb"),
      reference::named("gamma_lb", {{"gamma", Value(1, 2)}}),
      reference::named("coverage_tight", {{"k", Value(3)}}),
      reference::named("coverage_tight", {{"k", Value(4)}}),
      instantiate(random_monotone_pair(91, 8)),
      instantiate(random_monotone_pair(92, 8)),
  };
  for (const OracleInstance& inst : instances) {
    const Objective f = inst.objective();
    const OptProfile fast = opt_profile(f);
    const std::vector<Value> slow = reference::opt_values_by_combinations(f);
    REQUIRE(fast.by_size.size() == slow.size());
    for (std::size_t k = 0; k < slow.size(); ++k) {
      CHECK(fast.by_size[k].value == slow[k]);
      CHECK(card(fast.by_size[k].witness) == static_cast<int>(k));
      CHECK(f.eval(fast.by_size[k].witness) == slow[k]);
    }
  }
}

TEST_CASE("optimum witnesses take the earliest element sequence") {
  const GroundSet ground(3);
  const Oracle g(ground, zero_spec(ground), true);
  const Oracle h = modular_oracle(ground, {1, 1, 1});
  const OptProfile opt = opt_profile(Objective(CombinedObjective::combine(g, h)));
  CHECK(opt.by_size[1].witness == bit(0));
  CHECK(opt.by_size[2].witness == (bit(0) | bit(1)));
}

TEST_CASE("best ordering on the catalog instances") {
  const OracleInstance gs = reference::named("gross_substitute_lb");
  const BestOrderingResult gs_best = best_ordering(gs.objective());
  CHECK(gs_best.ratio == ValueOrInf(Value(5, 4)));
  CHECK(positions(gs_best.ordering) == std::vector<int>{0, 1, 2});  // identity already attains it

  const OracleInstance gamma_half = reference::named("gamma_lb", {{"gamma", Value(1, 2)}});
  CHECK(best_ordering(gamma_half.objective()).ratio == ValueOrInf(Value(4, 3)));

  const GroundSet solo(1);
  const Oracle g(solo, zero_spec(solo), true);
  const Oracle h = modular_oracle(solo, {5});
  CHECK(best_ordering(Objective(CombinedObjective::combine(g, h))).ratio == ValueOrInf(Value(1)));
}

TEST_CASE("pruned search equals the full-factorial reference") {
  const std::vector<Objective> objectives = {
      reference::named("gross_substitute_lb").objective(),
      reference::named("gamma_lb", {{"gamma", Value(1, 3)}}).objective(),
      reference::named("modular_remark").objective(),
      instantiate(random_monotone_pair(101, 5)).objective(),
      instantiate(random_monotone_pair(102, 5)).objective(),
      instantiate(build_named_instance("incremental_unbounded",
                                       {{"n", Value(4)}, {"epsilon", Value(1, 2)}}))
          .objective(),
      instantiate(build_named_instance("incremental_unbounded",
                                       {{"n", Value(2)}, {"epsilon", Value(1, 2)}}))
          .objective(),
  };
  for (const Objective& f : objectives) {
    CHECK(best_ordering(f).ratio == reference::best_ratio_by_permutations(f));
  }
}

TEST_CASE("capacity guards") {
  const GroundSet big(10);
  const Oracle g(big, zero_spec(big), true);
  const Oracle h(big, zero_spec(big), true);
  const Objective f(CombinedObjective::combine(g, h));
  CHECK_THROWS_AS(best_ordering(f), Error);       // default ordering cap is 9
  CHECK_THROWS_AS(opt_profile(f, 9), Error);      // explicit lower cap
  CHECK(best_ordering(f, 10).ratio == ValueOrInf(Value(1)));
}
