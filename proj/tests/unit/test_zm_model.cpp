#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "oracles/oracles.hpp"
#include "zmt/error.hpp"
#include "zmt/zm_model.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using zmt::ZMParams;

TEST_CASE("parameters and probabilities") {
  const auto p = ZMParams::make(0.5, 0.0);
  CHECK(p.alpha * p.theta == 1.0);
  CHECK_THAT(p.c, WithinRel(6.0 / (std::numbers::pi * std::numbers::pi), 1e-12));
  CHECK_THAT(zm_probability(p, 1), WithinRel(0.607927101854, 1e-10));
  CHECK_THAT(zm_probability(p, 2) / zm_probability(p, 1), WithinRel(0.25, 1e-14));

  const auto p1 = ZMParams::make(0.5, 1.0);
  CHECK_THAT(zm_probability(p1, 1), WithinRel(0.25 / oracle::hurwitz(2.0, 2.0), 1e-12));
  CHECK_THAT(p1.c, WithinRel(1.0 / oracle::hurwitz(2.0, 2.0), 1e-12));

  CHECK_THROWS_AS(ZMParams::make(1.0, 0.0), zmt::Error);
  CHECK_THROWS_AS(ZMParams::make(0.5, -1.0), zmt::Error);
}

TEST_CASE("probabilities sum to one") {
  for (double th : {0.3, 0.5, 0.8}) {
    for (double q : {-0.5, 0.0, 5.0}) {
      const auto p = ZMParams::make(th, q);
      double head = 0.0;
      for (std::int64_t i = 1; i <= 100000; ++i) head += zm_probability(p, i);
      const double tail = p.c * oracle::hurwitz(p.alpha, 100001.0 + q);
      CHECK_THAT(head + tail, WithinAbs(1.0, 1e-10));
      CHECK(zm_probability(p, 7) > zm_probability(p, 8));
    }
  }
}

// The tail replaces 1 - (1 - p)^k by 1 - exp(-kp); for k = 1 or 2 that costs
// about c^2 M^(1 - 2 alpha) / (2 (2 alpha - 1)), roughly 1e-6 here.
TEST_CASE("expected distinct at small k") {
  const auto p = ZMParams::make(0.8, 3.0);
  CHECK(zmt::expected_distinct(p, 0) == 0.0);
  CHECK_THAT(zmt::expected_distinct(p, 1), WithinAbs(1.0, 5e-6));
  // r(2) = 2 - sum p_i^2 exactly.
  double s2 = 0.0;
  for (std::int64_t i = 1; i <= 2000000; ++i) s2 += std::pow(zm_probability(p, i), 2);
  CHECK_THAT(zmt::expected_distinct(p, 2), WithinAbs(2.0 - s2, 1e-5));
}

TEST_CASE("expected distinct matches the brute-force series") {
  for (double th : {0.4, 0.8}) {
    for (double q : {0.0, 5.0}) {
      const auto p = ZMParams::make(th, q);
      for (std::int64_t k : {10, 1000, 10000}) {
        const double brute = oracle::brute_expected_distinct(th, q, k, 2'000'000);
        INFO("theta " << th << " q " << q << " k " << k);
        CHECK_THAT(zmt::expected_distinct(p, k), WithinRel(brute, 1e-4));
      }
    }
  }
}

TEST_CASE("expected distinct is nondecreasing and concave") {
  for (double th : {0.3, 0.5, 0.8}) {
    for (double q : {-0.5, 0.0, 5.0, 20.0}) {
      const auto curve = zmt::expected_distinct_curve(ZMParams::make(th, q), 3000);
      for (std::size_t k = 1; k < curve.size(); ++k) {
        REQUIRE(curve[k] >= curve[k - 1]);
        if (k + 1 < curve.size()) {
          REQUIRE(curve[k + 1] - curve[k] <= curve[k] - curve[k - 1] + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("expected distinct follows the asymptotic curve") {
  for (double th : {0.4, 0.6, 0.8}) {
    for (double q : {0.0, 5.0, 20.0}) {
      const auto p = ZMParams::make(th, q);
      const double n = 1e4;
      const double approx = std::pow(p.c * n, th) * boost::math::tgamma(1.0 - th) - q;
      CHECK(std::abs(zmt::expected_distinct(p, 10000) - approx) < 2.0);
    }
  }
}

TEST_CASE("shift fit round trip") {
  const auto p = ZMParams::make(0.8, 5.0);
  const std::int64_t n = 2000;
  const auto rn = std::llround(zmt::expected_distinct(p, n));
  const auto fit = zmt::fit_shift(0.8, n, rn);
  CHECK(std::abs(fit.q - 5.0) < 0.15);
  CHECK(std::abs(fit.residual) < 0.01);
}

TEST_CASE("shift fit on published inputs") {
  const auto fit = zmt::fit_shift(0.7911, 98, 77);
  CHECK_THAT(fit.q, WithinAbs(5.1473, 0.02));
  CHECK(std::abs(fit.residual) < 0.01);
  const auto xl = zmt::fit_shift(0.95, 111, 80);
  CHECK_THAT(xl.q, WithinAbs(-0.8142, 0.02));
}

TEST_CASE("shift fit bracket failure carries residuals") {
  // All-distinct text: r(n) < n for every q in the bracket.
  try {
    const auto fit = zmt::fit_shift(0.95, 100, 100);
    CHECK(std::isfinite(fit.q));
  } catch (const zmt::ShiftOutOfRange& e) {
    CHECK(e.kind() == zmt::ErrorKind::kShiftOutOfRange);
    CHECK(std::isfinite(e.residual_low()));
    CHECK(std::isfinite(e.residual_high()));
    CHECK(std::signbit(e.residual_low()) == std::signbit(e.residual_high()));
  }
  CHECK_THROWS_AS(zmt::fit_shift(0.95, 100, 100), zmt::ShiftOutOfRange);
  CHECK_THROWS_AS(zmt::fit_shift(0.5, 100, 0), zmt::Error);
}
