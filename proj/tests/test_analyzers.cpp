#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/analyzers.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "test_helpers.hpp"

using namespace incdec;

TEST_CASE("structure check on the catalog instances") {
  const OracleInstance gs = reference::named("gross_substitute_lb");
  const StructureReport h_structure = structure_check(*gs.h);
  CHECK(h_structure.monotone);
  CHECK(h_structure.submodular);
  CHECK_FALSE(h_structure.modular);

  const OracleInstance modular = reference::named("modular_remark");
  CHECK(structure_check(*modular.g).modular);
  CHECK(structure_check(*modular.h).modular);
}

TEST_CASE("non-monotone witness for the all-or-nothing instance") {
  const OracleInstance inst = instantiate(build_named_instance(
      "incremental_unbounded", {{"n", Value(4)}, {"epsilon", Value(1, 2)}}));
  const StructureReport structure = structure_check(*inst.f);
  CHECK_FALSE(structure.monotone);
  REQUIRE(structure.monotone_witness);
  // Unique violation: adding the distinguished element to the other three.
  CHECK(structure.monotone_witness->base == 0b1110);
  CHECK(structure.monotone_witness->element == 0);
  const Value before = inst.f->eval(structure.monotone_witness->base);
  const Value after =
      inst.f->eval(structure.monotone_witness->base | bit(structure.monotone_witness->element));
  CHECK(after < before);
}

TEST_CASE("curvature on the catalog instances") {
  const OracleInstance lb = reference::named("curvature_lb", {{"n", Value(6)}, {"c", Value(1, 2)}});
  CHECK(curvature(*lb.h).value == Value(1, 2));

  const OracleInstance modular = reference::named("modular_remark");
  CHECK(curvature(*modular.h).value == Value(0));

  // The tight coverage family shares a duplicated column, so one marginal
  // vanishes entirely and the curvature maxes out.
  const OracleInstance cover = reference::named("coverage_tight", {{"k", Value(3)}});
  const ExtremalRatio c = curvature(*cover.h);
  CHECK(c.value == reference::curvature_direct(*cover.h));
}

TEST_CASE("generic submodularity ratio on the catalog instances") {
  const OracleInstance lb = reference::named("gamma_lb", {{"gamma", Value(1, 2)}});
  CHECK(generic_submodularity_ratio(*lb.h).value == Value(1, 2));

  const OracleInstance cover = reference::named("coverage_tight", {{"k", Value(3)}});
  CHECK(generic_submodularity_ratio(*cover.h).value == Value(1));  // submodular

  const OracleInstance gs = reference::named("gross_substitute_lb");
  CHECK(generic_submodularity_ratio(*gs.h).value == Value(1));
}

TEST_CASE("nested-pair scan agrees with the raw definitions") {
  // Supermodular-leaning and mixed monotone tables, both routes.
  for (std::uint64_t seed : {31ULL, 32ULL, 33ULL}) {
    Rng rng(seed);
    const GroundSet ground(5);
    const Oracle super(ground, random_supermodular_table(rng, 5));
    CHECK(generic_submodularity_ratio(super).value == reference::gamma_direct(super));
    CHECK(curvature(super).value == reference::curvature_direct(super));

    Rng rng2(seed ^ 0xff);
    const Oracle mono(ground, random_monotone_table(rng2, 5));
    CHECK(generic_submodularity_ratio(mono).value == reference::gamma_direct(mono));
    CHECK(curvature(mono).value == reference::curvature_direct(mono));
  }
}

TEST_CASE("submodularity ratio") {
  const OracleInstance modular = reference::named("modular_remark");
  CHECK(submodularity_ratio(*modular.h).value == Value(1));

  const OracleInstance gamma_half = reference::named("gamma_lb", {{"gamma", Value(1, 2)}});
  const SubmodularityRatio ratio = submodularity_ratio(*gamma_half.h);
  CHECK(ratio.value >= Value(1, 2));
  CHECK(ratio.value == Value(2, 3));  // minimized by the two outer elements over the empty base

  const OracleInstance cover = reference::named("coverage_tight", {{"k", Value(3)}});
  CHECK(submodularity_ratio(*cover.h).value >= Value(1));
}

TEST_CASE("ratio ranges and ordering on monotone inputs") {
  for (std::uint64_t seed : {41ULL, 42ULL, 43ULL, 44ULL, 45ULL}) {
    const OracleInstance inst = instantiate(random_monotone_pair(seed, 7));
    for (const Oracle* oracle : {&*inst.g, &*inst.h}) {
      const PropertyReport report = analyze(*oracle);
      REQUIRE(report.curvature);
      REQUIRE(report.generic_submodularity_ratio);
      REQUIRE(report.submodularity_ratio);
      CHECK(Value(0) <= report.curvature->value);
      CHECK(report.curvature->value <= Value(1));
      // Monotone functions can sit at the gamma = 0 extreme (a marginal that
      // is zero early and positive later); submodular ones are pinned at 1.
      CHECK(Value(0) <= report.generic_submodularity_ratio->value);
      CHECK(report.generic_submodularity_ratio->value <= Value(1));
      if (report.structure.submodular) {
        CHECK(report.generic_submodularity_ratio->value == Value(1));
      }
      CHECK(report.generic_submodularity_ratio->value <= report.submodularity_ratio->value);
    }
  }
}

TEST_CASE("gross substitute check") {
  const OracleInstance gs = reference::named("gross_substitute_lb");
  CHECK(gross_substitute_check(*gs.h).holds);
  CHECK(gross_substitute_check(*gs.g).holds);

  const OracleInstance modular = reference::named("modular_remark");
  CHECK(gross_substitute_check(*modular.g).holds);

  const OracleInstance gamma_half = reference::named("gamma_lb", {{"gamma", Value(1, 2)}});
  const GrossSubstituteResult result = gross_substitute_check(*gamma_half.h);
  CHECK_FALSE(result.holds);
  REQUIRE(result.submodular_violation);  // fails already at decreasing marginals
  const auto& w = *result.submodular_violation;
  CHECK(gamma_half.h->marginal(w.element, w.base) <
        gamma_half.h->marginal(w.element, w.base | bit(w.other)));
}

TEST_CASE("gross substitute implies submodular on analyzable inputs") {
  for (std::uint64_t seed : {51ULL, 52ULL, 53ULL}) {
    const OracleInstance inst = instantiate(random_coverage_pair(seed, 6, 24));
    for (const Oracle* oracle : {&*inst.g, &*inst.h}) {
      const PropertyReport report = analyze(*oracle);
      if (report.gross_substitute && report.gross_substitute->holds) {
        CHECK(report.structure.submodular);
        CHECK(reference::submodular_by_pairs(*oracle));
      }
    }
  }
}

TEST_CASE("local submodularity matches the set-pair form") {
  for (std::uint64_t seed : {61ULL, 62ULL, 63ULL, 64ULL}) {
    Rng rng(seed);
    const GroundSet ground(5);
    const Oracle table(ground, random_monotone_table(rng, 5));
    CHECK(structure_check(table).submodular == reference::submodular_by_pairs(table));
  }
}

TEST_CASE("witnesses reproduce their reported extremal value") {
  const OracleInstance gamma_half = reference::named("gamma_lb", {{"gamma", Value(1, 2)}});
  const ExtremalRatio gamma = generic_submodularity_ratio(*gamma_half.h);
  REQUIRE(gamma.witness);
  const auto& w = *gamma.witness;
  CHECK(gamma_half.h->marginal(w.element, w.inner) /
            gamma_half.h->marginal(w.element, w.outer) ==
        gamma.value);

  const OracleInstance lb = reference::named("curvature_lb", {{"n", Value(5)}, {"c", Value(1, 3)}});
  const ExtremalRatio c = curvature(*lb.h);
  REQUIRE(c.witness);
  CHECK(Value(1) - lb.h->marginal(c.witness->element, c.witness->outer) /
                       lb.h->marginal(c.witness->element, c.witness->inner) ==
        c.value);

  const SubmodularityRatio hat = submodularity_ratio(*gamma_half.h);
  REQUIRE(hat.witness);
  Value split(0);
  for (int e : subset_elements(hat.witness->bundle & ~hat.witness->base)) {
    split += gamma_half.h->marginal(e, hat.witness->base);
  }
  CHECK(split / gamma_half.h->marginal_set(hat.witness->bundle, hat.witness->base) == hat.value);
}

TEST_CASE("zero function conventions") {
  const GroundSet ground(4);
  const Oracle zero(ground, zero_spec(ground));
  const PropertyReport report = analyze(zero);
  CHECK(report.structure.monotone);
  CHECK(report.structure.submodular);
  CHECK(report.structure.modular);
  CHECK(report.curvature->value == Value(0));
  CHECK_FALSE(report.curvature->witness.has_value());
  CHECK(report.generic_submodularity_ratio->value == Value(1));
  CHECK(report.submodularity_ratio->value == Value(1));
  CHECK(report.gross_substitute->holds);
}

TEST_CASE("caps and preconditions") {
  const GroundSet big(13);
  const Oracle oversized(big, zero_spec(big));
  CHECK_THROWS_AS(structure_check(oversized), Error);
  CHECK_THROWS_AS(curvature(oversized), Error);
  AnalyzerCaps raised;
  raised.triple_cap = 13;
  CHECK(structure_check(oversized, raised).monotone);

  const GroundSet eleven(11);
  const Oracle over_pair_cap(eleven, zero_spec(eleven));
  CHECK_THROWS_AS(submodularity_ratio(over_pair_cap), Error);

  const OracleInstance nonmono = instantiate(build_named_instance(
      "incremental_unbounded", {{"n", Value(4)}, {"epsilon", Value(1, 2)}}));
  CHECK_THROWS_AS(curvature(*nonmono.f), Error);
  CHECK_THROWS_AS(generic_submodularity_ratio(*nonmono.f), Error);
  CHECK_THROWS_AS(gross_substitute_check(*nonmono.f), Error);

  const PropertyReport report = analyze(*nonmono.f);
  CHECK_FALSE(report.structure.monotone);
  CHECK_FALSE(report.curvature.has_value());
  CHECK_FALSE(report.gross_substitute.has_value());
}

TEST_CASE("analyzer output is reproducible") {
  Rng rng(71);
  const GroundSet ground(6);
  const Oracle oracle(ground, random_monotone_table(rng, 6));
  const PropertyReport first = analyze(oracle);
  const PropertyReport second = analyze(oracle);
  CHECK(first.curvature->value == second.curvature->value);
  CHECK(first.curvature->witness->element == second.curvature->witness->element);
  CHECK(first.curvature->witness->inner == second.curvature->witness->inner);
  CHECK(first.curvature->witness->outer == second.curvature->witness->outer);
  CHECK(first.generic_submodularity_ratio->value == second.generic_submodularity_ratio->value);
}
