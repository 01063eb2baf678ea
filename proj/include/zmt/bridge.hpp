#pragma once

#include <span>
#include <vector>

#include "zmt/estimation.hpp"
#include "zmt/occupancy.hpp"
#include "zmt/zm_model.hpp"

namespace zmt {

enum class BridgeKind {
  kPowerCurve,    // R_k - (k/n)^theta R_n, pinned at both ends by construction
  kExpectedCurve  // R_k - r(k) with r from the fitted Zipf-Mandelbrot law
};

// Values a_0..a_n of a normalised deviation process at t = k/n; the path on
// [0, 1] is their linear interpolant.
struct BridgePath {
  std::vector<double> values;
  BridgeKind kind = BridgeKind::kPowerCurve;

  std::int64_t n() const noexcept { return static_cast<std::int64_t>(values.size()) - 1; }
};

// a_k = (R_k - (k/n)^theta R_n) / sqrt(R_n).
BridgePath empirical_bridge(const WordTrajectory& traj, double theta);
inline BridgePath empirical_bridge(const WordTrajectory& traj, const ThetaEstimate& theta) {
  return empirical_bridge(traj, theta.value);
}

// a_k = (R_k - r(k)) / sqrt(R_n).
BridgePath empirical_text_bridge(const WordTrajectory& traj, const ZMParams& fitted,
                                 int head_terms = kDefaultHeadTerms);

// Exact integral of the squared piecewise-linear path:
// (1/(3n)) sum_{k=1}^{n-1} a_k (2 a_k + a_{k+1}) when a_0 = a_n = 0. A
// nonzero endpoint (the fitted text bridge leaves a tiny residual at k = n)
// is included through the per-segment form (h/3)(a^2 + ab + b^2).
double omega_square(const BridgePath& path);
double omega_square(std::span<const double> values);

}  // namespace zmt
