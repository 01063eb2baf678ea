#include "zmt/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "zmt/error.hpp"

namespace zmt {
namespace {

// B_{2j} / (2j)! for j = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 10000;

void check_gamma_args(double s, double u) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorKind::kDomain, "incomplete gamma: s must be positive, got " +
                                        std::to_string(s));
  }
  if (!(u >= 0.0) || std::isnan(u)) {
    throw Error(ErrorKind::kDomain, "incomplete gamma: u must be non-negative, got " +
                                        std::to_string(u));
  }
}

// gamma(s, u) by the power series, for u < s + 1.
double lower_series(double s, double u) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= u / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      return sum * std::exp(s * std::log(u) - u);
    }
  }
  throw Error(ErrorKind::kNumerical, "incomplete gamma series did not converge");
}

// Gamma(s, u) by the modified Lentz continued fraction, for u >= s + 1.
double upper_fraction(double s, double u) {
  constexpr double kTiny = 1e-300;
  double b = u + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return h * std::exp(s * std::log(u) - u);
    }
  }
  throw Error(ErrorKind::kNumerical, "incomplete gamma continued fraction did not converge");
}

}  // namespace

double hurwitz_zeta(double alpha, double x) {
  if (!(alpha > 1.0 + 1e-9)) {
    throw Error(ErrorKind::kDivergentZeta,
                "divergent zeta: alpha must exceed 1, got " + std::to_string(alpha));
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::kDomain, "hurwitz zeta: x must be positive, got " +
                                        std::to_string(x));
  }
  // Shift the argument until the Euler-Maclaurin series is safely asymptotic.
  const double a_min = std::max(15.0, alpha);
  double sum = 0.0;
  double a = x;
  while (a < a_min) {
    sum += std::pow(a, -alpha);
    a += 1.0;
  }
  const double a_pow = std::pow(a, -alpha);
  double tail = a * a_pow / (alpha - 1.0) + 0.5 * a_pow;

  // Rising factorial alpha (alpha+1) ... (alpha+2j-2) times a^(-alpha-2j+1).
  double rising = alpha;
  double power = a_pow / a;
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double term = kBernoulliOverFactorial[j] * rising * power;
    tail += term;
    if (std::abs(term) < kEps * std::abs(tail)) break;
    const double m = 2.0 * static_cast<double>(j + 1);
    rising *= (alpha + m - 1.0) * (alpha + m);
    power /= a * a;
  }
  return sum + tail;
}

double lower_incomplete_gamma(double s, double u) {
  check_gamma_args(s, u);
  if (u == 0.0) return 0.0;
  if (u < s + 1.0) return lower_series(s, u);
  if (std::isinf(u)) return std::tgamma(s);
  return std::tgamma(s) - upper_fraction(s, u);
}

double upper_incomplete_gamma(double s, double u) {
  check_gamma_args(s, u);
  if (std::isinf(u)) return 0.0;
  if (u < s + 1.0) return std::tgamma(s) - lower_series(s, u);
  return upper_fraction(s, u);
}

}  // namespace zmt
