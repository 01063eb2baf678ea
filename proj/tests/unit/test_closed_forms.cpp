#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles/oracles.hpp"
#include "zmt/closed_forms.hpp"
#include "zmt/error.hpp"
#include "zmt/spectral.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
namespace cf = zmt::closed_forms;

TEST_CASE("hypergeometric series at elementary points") {
  // 0F1-type identities through 1F2 with a = b1: 1F2(a; a, 1/2; -x^2/4) = cos x.
  for (double x : {0.1, 1.0, 3.0, 10.0}) {
    CHECK_THAT(cf::hyp1f2(0.7, 0.7, 0.5, -x * x / 4), WithinAbs(std::cos(x), 1e-14));
    CHECK_THAT(cf::hyp1f2(0.3, 0.3, 1.5, -x * x / 4) * x, WithinAbs(std::sin(x), 1e-14));
  }
  CHECK(cf::hyp2f3(1, 1, 1, 1, 1, 0.0) == 1.0);
}

TEST_CASE("a and b integrals against quadrature") {
  for (double th : {0.3, 0.5, 0.9}) {
    for (int k : {1, 4, 10}) {
      for (double x : {0.5, 1.0, 1.5, 2.0}) {
        auto pw = [th](double t) { return std::pow(t, th); };
        INFO("theta " << th << " k " << k << " x " << x);
        CHECK_THAT(cf::a_integral(th, k, x), WithinAbs(oracle::qawo(pw, 0, x, k, true), 1e-10));
        CHECK_THAT(cf::b_integral(th, k, x), WithinAbs(oracle::qawo(pw, 0, x, k, false), 1e-10));
      }
    }
  }
}

TEST_CASE("series and quadrature building blocks agree for small indices") {
  for (double th : {0.3, 0.5, 0.8}) {
    const auto bb = zmt::building_blocks(th, 10);
    for (int k = 1; k <= cf::kMaxIndex; ++k) {
      const auto s = cf::blocks(th, k);
      INFO("theta " << th << " k " << k);
      CHECK_THAT(s.A, WithinAbs(bb.A[k], 1e-8));
      CHECK_THAT(s.B, WithinAbs(bb.B[k], 1e-8));
      CHECK_THAT(s.C, WithinAbs(bb.C[k], 1e-8));
      CHECK_THAT(s.D, WithinAbs(bb.D[k], 1e-8));
      CHECK_THAT(s.F, WithinAbs(bb.F[k], 1e-8));
      CHECK_THAT(s.G, WithinAbs(bb.G[k], 1e-8));
      CHECK_THAT(s.H, WithinAbs(bb.H[k], 1e-8));
    }
  }
  CHECK_THROWS_AS(cf::blocks(0.5, 0), zmt::Error);
  CHECK_THROWS_AS(cf::blocks(0.5, 11), zmt::Error);
}
