#include "zmt/zm_model.hpp"

#include <cmath>
#include <string>

#include "zmt/error.hpp"
#include "zmt/special_functions.hpp"

namespace zmt {

ZMParams ZMParams::make(double theta, double q) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorKind::kDomain, "theta must lie in (0, 1), got " + std::to_string(theta));
  }
  if (!(q > -1.0) || !std::isfinite(q)) {
    throw Error(ErrorKind::kDomain, "q must exceed -1, got " + std::to_string(q));
  }
  ZMParams p;
  p.theta = theta;
  p.q = q;
  p.alpha = 1.0 / theta;
  p.c = 1.0 / hurwitz_zeta(p.alpha, q + 1.0);
  return p;
}

double zm_probability(const ZMParams& params, std::int64_t i) {
  if (i < 1) throw Error(ErrorKind::kDomain, "word rank must be >= 1");
  return params.c * std::pow(static_cast<double>(i) + params.q, -params.alpha);
}

ExpectedDistinct::ExpectedDistinct(const ZMParams& params, int head_terms) : params_(params) {
  if (head_terms < 1) throw Error(ErrorKind::kConfiguration, "head_terms must be >= 1");
  log1m_p_.resize(static_cast<std::size_t>(head_terms));
  for (int i = 1; i <= head_terms; ++i) {
    log1m_p_[static_cast<std::size_t>(i - 1)] = std::log1p(-zm_probability(params, i));
  }
  tail_start_ = head_terms + 0.5 + params.q;
  tail_rate_ = params.c * std::pow(tail_start_, -params.alpha);
  gamma_s_ = 1.0 - params.theta;
}

double ExpectedDistinct::operator()(std::int64_t k) const {
  if (k < 0) throw Error(ErrorKind::kDomain, "k must be non-negative");
  if (k == 0) return 0.0;
  const auto kd = static_cast<double>(k);
  double head = 0.0;
  for (double l : log1m_p_) head -= std::expm1(kd * l);
  const double upper = kd * tail_rate_;
  const double tail = std::pow(kd * params_.c, params_.theta) *
                          lower_incomplete_gamma(gamma_s_, upper) +
                      tail_start_ * std::expm1(-upper);
  return head + tail;
}

double expected_distinct(const ZMParams& params, std::int64_t k, int head_terms) {
  return ExpectedDistinct(params, head_terms)(k);
}

std::vector<double> expected_distinct_curve(const ZMParams& params, std::int64_t n,
                                            int head_terms) {
  if (n < 0) throw Error(ErrorKind::kDomain, "n must be non-negative");
  const ExpectedDistinct r(params, head_terms);
  std::vector<double> curve(static_cast<std::size_t>(n + 1));
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k <= n; ++k) {
    curve[static_cast<std::size_t>(k)] = r(k);
  }
  return curve;
}

namespace reference {

std::vector<double> expected_distinct_curve(const ZMParams& params, std::int64_t n,
                                            int head_terms) {
  std::vector<double> curve;
  curve.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) {
    curve.push_back(expected_distinct(params, k, head_terms));
  }
  return curve;
}

}  // namespace reference

ShiftFit fit_shift(double theta_hat, std::int64_t n, std::int64_t distinct, int head_terms) {
  if (!(theta_hat > 0.0 && theta_hat < 1.0)) {
    throw Error(ErrorKind::kDomain, "theta_hat must lie in (0, 1)");
  }
  if (distinct < 1 || distinct > n) {
    throw Error(ErrorKind::kDomain, "need 1 <= R_n <= n");
  }
  auto residual = [&](double q) {
    return expected_distinct(ZMParams::make(theta_hat, q), n, head_terms) -
           static_cast<double>(distinct);
  };

  double lo = kShiftLow;
  double hi = kShiftHigh;
  double g_lo = residual(lo);
  const double g_hi = residual(hi);
  if (!std::isfinite(g_lo) || !std::isfinite(g_hi) || std::signbit(g_lo) == std::signbit(g_hi)) {
    throw ShiftOutOfRange(g_lo, g_hi);
  }
  for (int it = 0; it < kShiftIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = residual(mid);
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  ShiftFit fit;
  fit.q = 0.5 * (lo + hi);
  fit.residual = residual(fit.q);
  return fit;
}

}  // namespace zmt
