#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <thread>

#include "core/errors.hpp"
#include "test_helpers.hpp"

using namespace incdec;

namespace {

Subset by_labels(const GroundSet& ground, std::initializer_list<const char*> labels) {
  Subset s = 0;
  for (const char* l : labels) s |= bit(ground.index_of(l));
  return s;
}

}  // namespace

TEST_CASE("modular evaluation") {
  const GroundSet ground(2, {"a", "b"});
  const Oracle oracle(ground, ModularSpec{{Value(1), Value(0)}, Value(0)});
  CHECK(oracle.eval(by_labels(ground, {"b"})) == Value(0));
  CHECK(oracle.eval(by_labels(ground, {"a"})) == Value(1));
  CHECK(oracle.eval(by_labels(ground, {"a", "b"})) == Value(1));
}

TEST_CASE("normalized handles evaluate to zero on the empty set") {
  const GroundSet ground(3);
  const Oracle raw(ground, ModularSpec{{Value(1), Value(2), Value(3)}, Value(7)});
  CHECK(raw.eval(0) == Value(7));
  const Oracle normalized = raw.with_normalization(true);
  CHECK(normalized.eval(0) == Value(0));
  CHECK(normalized.eval(full_mask(3)) == Value(6));
  CHECK(normalized.eval_raw(0) == Value(7));
}

TEST_CASE("coverage counts the union, and the tight instance covers 19 at the B family") {
  const OracleInstance inst = reference::named("coverage_tight", {{"k", Value(3)}});
  const Subset b_family = by_labels(inst.ground, {"B1", "B2", "B3"});
  CHECK(inst.h->eval(b_family) == Value(19));  // 27 - 8 by direct union count
  CHECK(inst.h->eval(full_mask(6)) == Value(27));
  CHECK(inst.h->eval(by_labels(inst.ground, {"A1", "A2", "A3"})) == Value(27));
  CHECK(inst.h->eval(by_labels(inst.ground, {"A1"})) == Value(9));
}

TEST_CASE("evaluation is memo-consistent and rejects stray bits") {
  const OracleInstance inst = reference::named("coverage_tight", {{"k", Value(2)}});
  const Value first = inst.h->eval(5);
  CHECK(inst.h->eval(5) == first);
  CHECK_THROWS_AS(inst.h->eval(Subset{1} << 20), Error);
}

TEST_CASE("marginals") {
  const OracleInstance curvature_inst =
      reference::named("curvature_lb", {{"n", Value(6)}, {"c", Value(1, 2)}});
  CHECK(curvature_inst.h->marginal(0, 0) == Value(5));  // distinguished element on empty base

  const OracleInstance gs = reference::named("gross_substitute_lb");
  const int a = gs.ground.index_of("a");
  CHECK(gs.h->marginal(a, by_labels(gs.ground, {"b", "c"})) == Value(1));
  CHECK(gs.h->marginal(a, by_labels(gs.ground, {"a", "b"})) == Value(0));  // already present

  SUBCASE("set marginals") {
    CHECK(gs.h->marginal_set(0, by_labels(gs.ground, {"b"})) == Value(0));       // T empty
    CHECK(gs.h->marginal_set(by_labels(gs.ground, {"b"}), by_labels(gs.ground, {"b"})) ==
          Value(0));  // T = S
    CHECK(gs.h->marginal_set(by_labels(gs.ground, {"b", "c"}), by_labels(gs.ground, {"a"})) ==
          Value(2));
  }
}

TEST_CASE("normalize_zero_at_empty") {
  const GroundSet ground(2);
  SUBCASE("modular offset drops") {
    const SetFunctionSpec out =
        normalize_zero_at_empty(ground, ModularSpec{{Value(1), Value(2)}, Value(5)});
    const Oracle oracle(ground, out);
    CHECK(oracle.eval(0) == Value(0));
    CHECK(oracle.eval(3) == Value(3));
  }
  SUBCASE("idempotent") {
    const SetFunctionSpec once =
        normalize_zero_at_empty(ground, TableSpec{{Value(2), Value(3), Value(2), Value(4)}});
    const SetFunctionSpec twice = normalize_zero_at_empty(ground, once);
    CHECK(Oracle(ground, once).full_table() == Oracle(ground, twice).full_table());
  }
  SUBCASE("table shifts by the empty value") {
    const SetFunctionSpec out =
        normalize_zero_at_empty(ground, TableSpec{{Value(2), Value(3), Value(2), Value(4)}});
    const Oracle oracle(ground, out);
    CHECK(oracle.eval(0) == Value(0));
    CHECK(oracle.eval(1) == Value(1));
  }
}

TEST_CASE("combined objective") {
  const OracleInstance gs = reference::named("gross_substitute_lb");
  const CombinedObjective f = gs.combined();
  CHECK(f.eval(by_labels(gs.ground, {"c"})) == Value(5));
  CHECK(f.eval(0) == gs.g->eval(full_mask(3)));  // empty prefix carries the whole g side

  const OracleInstance gamma = reference::named("gamma_lb", {{"gamma", Value(1, 2)}});
  CHECK(gamma.combined().eval(by_labels(gamma.ground, {"b"})) == Value(4));

  SUBCASE("endpoints after normalization") {
    CHECK(f.eval(0) == gs.g->eval(full_mask(3)));
    CHECK(f.eval(full_mask(3)) == gs.h->eval(full_mask(3)));
  }
  SUBCASE("ground mismatch is rejected") {
    const GroundSet other(3);
    const Oracle stray(other, zero_spec(other));
    CHECK_THROWS_AS(CombinedObjective::combine(stray, *gs.h), Error);
  }
}

TEST_CASE("spec validation") {
  const GroundSet ground(3);
  CHECK_THROWS_AS(Oracle(ground, TableSpec{{Value(0), Value(1)}}), Error);  // 2 values, need 8
  CHECK_THROWS_AS(Oracle(ground, ModularSpec{{Value(1)}, Value(0)}), Error);
  CHECK_THROWS_AS(Oracle(ground, CoverageSpec{4, {{0}, {5}, {1}}}), Error);  // index 5 outside
  CHECK_THROWS_AS(Oracle(ground, NamedSpec{"no_such_instance", {}, "h"}), Error);
  CHECK_THROWS_AS(Oracle(ground, NamedSpec{"modular_remark", {}, "h"}), Error);  // n mismatch
}

TEST_CASE("oracle evaluation is stable under concurrent readers") {
  const OracleInstance inst = reference::named("coverage_tight", {{"k", Value(3)}});
  const Oracle& h = *inst.h;
  std::vector<Value> expected;
  for (Subset s = 0; s <= full_mask(6); ++s) expected.push_back(h.eval(s));

  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w]() {
      for (Subset s = w; s <= full_mask(6); s += 4) {
        if (h.eval(s) != expected[s]) ok = false;
      }
    });
  }
  for (auto& worker : workers) worker.join();
  CHECK(ok.load());
}
