#include <catch2/catch_amalgamated.hpp>

#include "coho/halfint.hpp"

using coho::HalfInt;

TEST_CASE("half-integers store doubled values exactly") {
  const HalfInt three(3);
  CHECK(three.doubled() == 6);
  CHECK(three.is_integer());
  CHECK(three.as_integer() == 3);

  const HalfInt half = HalfInt::from_doubled(1);
  CHECK(!half.is_integer());
  CHECK_THROWS_AS(half.as_integer(), coho::domain_error);
  CHECK(coho::to_string(half) == "1/2");
  CHECK(coho::to_string(HalfInt::from_doubled(-7)) == "-7/2");
  CHECK(coho::to_string(HalfInt(-2)) == "-2");
}

TEST_CASE("half-integer arithmetic") {
  const HalfInt a = HalfInt::from_doubled(3);  // 3/2
  const HalfInt b = HalfInt::from_doubled(-1); // -1/2
  CHECK((a + b).doubled() == 2);
  CHECK((a - b).doubled() == 4);
  CHECK((-a).doubled() == -3);
  CHECK((2 * a).doubled() == 6);
  CHECK((a + b).is_integer());
  CHECK(a > b);
  CHECK(HalfInt(1) == HalfInt::from_doubled(2));

  // ordering on doubled values is the value ordering
  for (long long x = -8; x <= 8; ++x)
    for (long long y = -8; y <= 8; ++y)
      CHECK((HalfInt::from_doubled(x) < HalfInt::from_doubled(y)) == (x < y));
}

TEST_CASE("vector helpers round-trip through doubled form") {
  const coho::HalfIntVector v{HalfInt::from_doubled(5), HalfInt(2), HalfInt::from_doubled(-1)};
  const auto d = coho::doubled(v);
  CHECK(d == std::vector<long long>{5, 4, -1});
  CHECK(coho::from_doubled(d) == v);
}
