#include <doctest.h>

#include <cmath>

#include "surprise/errors.hpp"
#include "surprise/lottery.hpp"

using namespace surprise;

TEST_CASE("expected value") {
  CHECK(expected_value(Lottery({{1.0, 1.0}})) == 1.0);
  CHECK(expected_value(Lottery({{0.0, 0.9}, {5.0, 0.1}})) == doctest::Approx(0.5));
  CHECK(expected_value(Lottery({{0.0, 0.01}, {1.0, 0.89}, {5.0, 0.1}})) ==
        doctest::Approx(1.39).epsilon(1e-14));
}

TEST_CASE("flat surprise") {
  const auto linear = SurpriseSpec::power(1.5, 1.0);
  for (double c : {-3.0, 0.0, 7.5}) {
    CHECK(surprise_flat(Lottery({{c, 1.0}}), SurpriseSpec::power(2.0, 3.0)) == 0.0);
  }
  for (double r : {1.1, 1.5, 2.0, 4.0}) {
    CHECK(std::abs(surprise_flat(Lottery({{2.0, 0.5}, {0.0, 0.5}}),
                                 SurpriseSpec::power(r, 1.0))) < 1e-15);
  }
  const double value = surprise_flat(Lottery({{4.0, 0.25}, {0.0, 0.75}}), linear);
  CHECK(std::abs(value - (0.25 * std::pow(3.0, 1.5) - 0.75)) < 1e-15);
  CHECK(std::abs(value - 0.549038105676658) < 1e-12);
}

TEST_CASE("lottery validation") {
  CHECK_THROWS_AS(Lottery({}), ValidationError);
  CHECK_THROWS_AS(Lottery({{1.0, 0.5}}), ValidationError);
  CHECK_THROWS_AS(Lottery({{1.0, 1.2}, {2.0, -0.2}}), ValidationError);
  CHECK_THROWS_AS(Lottery({{NAN, 1.0}}), ValidationError);
  CHECK_NOTHROW(Lottery({{1.0, 0.5}, {2.0, 0.5 + 5e-10}}));
  CHECK_THROWS_AS(Lottery({{1.0, 0.5}, {2.0, 0.5 + 5e-9}}), ValidationError);
}
