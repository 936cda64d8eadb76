#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <stdexcept>

#include "oracle.hpp"
#include "test_util.hpp"

using namespace clausen::oracle;
using clausen::testing::kPi;
using clausen::testing::kTwoPi;

TEST_CASE("oracle_cl2 reference values") {
  CHECK(std::abs(oracle_cl2(kPi)) <= 1e-14);
  // Catalan's constant, 0.91596559417721901505460351493238411...
  CHECK(std::abs(oracle_cl2(kPi / 2.0) - boost::math::constants::catalan<double>()) <= 1e-14);
  CHECK(std::abs(oracle_cl2(kPi / 2.0) - 0.91596559417721901505) <= 1e-14);
  for (double x : clausen::testing::uniform_points(0.01, kTwoPi - 0.01, 20, 5)) {
    CHECK(std::abs(oracle_cl2(x) + oracle_cl2(kTwoPi - x)) <= 1e-13);
  }
  CHECK_THROWS_AS(oracle_cl2(0.0), std::domain_error);
  CHECK_THROWS_AS(oracle_cl2(kTwoPi), std::domain_error);
}

TEST_CASE("oracle_sum reference values") {
  const double zeta3 = boost::math::zeta(3.0);
  const auto at_zero = oracle_sum(Trig::Cos, 3, 0.0);
  CHECK(at_zero.tail_bound == doctest::Approx(2e-14).epsilon(1e-6));
  CHECK(std::abs(at_zero.value - zeta3) <= 2e-14 + 1e-15);
  CHECK(std::abs(oracle_sum(Trig::Sin, 4, kPi).value) <= 1e-15);
  CHECK(std::abs(oracle_sum(Trig::Cos, 3, kPi).value + 0.75 * zeta3) <= 2e-14);

  CHECK_THROWS_AS(oracle_sum(Trig::Sin, 2, 1.0), std::domain_error);
  CHECK_THROWS_AS(oracle_sum(Trig::Sin, 3, -0.1), std::domain_error);
}

TEST_CASE("oracle_sums matches oracle_sum per order") {
  const OracleConfig cfg{200'000, 1e-15};
  const auto all = oracle_sums(3, 8, 1.3, cfg);
  for (int j = 3; j <= 8; ++j) {
    const auto i = static_cast<std::size_t>(j - 3);
    CHECK(std::abs(all.sin[i] - oracle_sum(Trig::Sin, j, 1.3, cfg).value) <= 1e-15);
    CHECK(std::abs(all.cos[i] - oracle_sum(Trig::Cos, j, 1.3, cfg).value) <= 1e-15);
  }
}

TEST_CASE("oracles are consistent through integration") {
  // C_3(b) - C_3(a) = -int_a^b Cl_2
  for (double a : {0.3, 1.7, 3.1, 4.6}) {
    const double b = a + 1.0;
    CAPTURE(a);
    const double integral = boost::math::quadrature::gauss<double, 30>::integrate(
        [](double t) { return oracle_cl2(t); }, a, b);
    const double diff = oracle_sum(Trig::Cos, 3, b).value - oracle_sum(Trig::Cos, 3, a).value;
    CHECK(std::abs(diff + integral) <= 1e-12);
  }
}

TEST_CASE("doubling the term count stays within the tail bound") {
  for (double x : {0.0, 0.7, 2.5}) {
    const auto base = oracle_sum(Trig::Cos, 4, x, {500'000, 1e-15});
    const auto doubled = oracle_sum(Trig::Cos, 4, x, {1'000'000, 1e-15});
    CHECK(std::abs(doubled.value - base.value) <= 2.0 * base.tail_bound);
  }
}

TEST_CASE("OracleConfig validation") {
  CHECK_THROWS_AS((OracleConfig{1000, 1e-15}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((OracleConfig{5'000'000, 1e-9}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((OracleConfig{5'000'000, 1e-17}.validate()), std::invalid_argument);
  CHECK_NOTHROW(OracleConfig{}.validate());
}
