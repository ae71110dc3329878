#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/errors.hpp"
#include "core/value.hpp"

using namespace incdec;

TEST_CASE("construction reduces to lowest terms") {
  CHECK(Value(2, 4).str() == "1/2");
  CHECK(Value(-2, 4).str() == "-1/2");
  CHECK(Value(6, 3).str() == "2");
  CHECK(Value(0, 7).str() == "0");
  CHECK(Value(5, -5).str() == "-1");
  CHECK_THROWS_AS(Value(1, 0), Error);
}

TEST_CASE("parsing accepts integers and p/q") {
  CHECK(Value::parse("5") == Value(5));
  CHECK(Value::parse("-12") == Value(-12));
  CHECK(Value::parse("5/4") == Value(5, 4));
  CHECK(Value::parse("10/8") == Value(5, 4));
  CHECK(Value::parse("+3/9") == Value(1, 3));
  CHECK_THROWS_AS(Value::parse(""), Error);
  CHECK_THROWS_AS(Value::parse("1/0"), Error);
  CHECK_THROWS_AS(Value::parse("x"), Error);
  CHECK_THROWS_AS(Value::parse("1/-2"), Error);
  CHECK_THROWS_AS(Value::parse("1.5"), Error);
}

TEST_CASE("arithmetic stays exact") {
  const Value third(1, 3);
  CHECK(third + third + third == Value(1));
  CHECK(Value(1, 6) + Value(1, 10) == Value(4, 15));
  CHECK(Value(2, 3) * Value(9, 4) == Value(3, 2));
  CHECK(Value(1) / Value(1, 2) == Value(2));
  CHECK(-Value(3, 7) == Value(-3, 7));
  CHECK_THROWS_AS(Value(1) / Value(0), Error);

  Value acc(0);
  for (int i = 0; i < 100; ++i) acc += Value(1, 100);
  CHECK(acc == Value(1));
}

TEST_CASE("comparisons and min/max") {
  CHECK(Value(5, 4) < Value(4, 3));
  CHECK(Value(2) >= Value(2));
  CHECK(max(Value(5, 4), Value(4, 3)) == Value(4, 3));
  CHECK(min(Value(5, 4), Value(4, 3)) == Value(5, 4));
}

TEST_CASE("double conversions") {
  CHECK(Value::from_double(0.5) == Value(1, 2));
  CHECK(Value::from_double(2.0 + 1e-9) > Value(2));
  CHECK(Value(5, 4).to_double() == doctest::Approx(1.25));
  CHECK_THROWS_AS(Value::from_double(1.0 / 0.0), Error);
}

TEST_CASE("integer powers and integer access") {
  CHECK(Value::ipow(3, 3) == Value(27));
  CHECK(Value::ipow(2, 0) == Value(1));
  CHECK(Value::ipow(5, 5) == Value(3125));
  CHECK(Value(27).to_long() == 27);
  CHECK_THROWS_AS(Value(1, 2).to_long(), Error);
}

TEST_CASE("value-or-infinite ordering and rendering") {
  const ValueOrInf two{Value(2)}, five_fourth{Value(5, 4)};
  const ValueOrInf inf = ValueOrInf::infinity();
  CHECK(five_fourth < two);
  CHECK(two < inf);
  CHECK(inf == ValueOrInf::infinity());
  CHECK_FALSE(inf < inf);
  CHECK(inf.str() == "inf");
  CHECK(five_fourth.str() == "5/4");
  CHECK_THROWS_AS(inf.finite(), Error);
}
