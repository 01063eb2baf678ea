#include "zmt/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zmt/error.hpp"
#include "zmt/quadrature.hpp"

namespace zmt {
namespace {

constexpr int kDensityNodes = 10;

double log_plus(std::int64_t x) {
  return x > 1 ? std::log(static_cast<double>(x)) : 0.0;
}

void check_length(const WordTrajectory& traj) {
  if (traj.n() < 2) throw Error(ErrorKind::kTextTooShort, "text too short");
}

// int_lo^hi f(t) dt by composite Gauss-Legendre on `cells` equal cells.
double integrate_smooth(const std::function<double(double)>& f, double lo, double hi,
                        int cells) {
  const auto& rule = gauss_legendre(kDensityNodes);
  const double width = (hi - lo) / cells;
  double sum = 0.0;
  for (int c = 0; c < cells; ++c) {
    sum += rule.integrate(f, lo + c * width, lo + (c + 1) * width);
  }
  return sum;
}

}  // namespace

ThetaEstimate clamp_theta(double raw, const ThetaBounds& bounds) {
  if (!(bounds.floor > 0.0 && bounds.floor <= bounds.cap && bounds.cap < 1.0)) {
    throw Error(ErrorKind::kConfiguration, "theta bounds must satisfy 0 < floor <= cap < 1");
  }
  ThetaEstimate est;
  est.raw = raw;
  est.value = std::clamp(raw, bounds.floor, bounds.cap);
  est.clamped = est.value != raw;
  return est;
}

ThetaEstimate estimate_theta(const WordTrajectory& traj, const ThetaBounds& bounds) {
  check_length(traj);
  const auto n = traj.n();
  const auto half = traj.r[static_cast<std::size_t>(n / 2)];
  const double raw =
      std::log2(static_cast<double>(traj.distinct()) / static_cast<double>(half));
  return clamp_theta(raw, bounds);
}

AFunctional AFunctional::half_step() { return two_point(0.5); }

AFunctional AFunctional::two_point(double t0) {
  if (!(t0 > 0.0 && t0 < 1.0)) throw Error(ErrorKind::kConfiguration, "atom must be in (0,1)");
  const double w = 1.0 / std::log(1.0 / t0);
  AFunctional a;
  a.atoms = {{t0, -w}, {1.0, w}};
  return a;
}

void validate(const AFunctional& a, double tol) {
  double mass = 0.0;
  double log_moment = 0.0;
  for (const auto& atom : a.atoms) {
    if (!(atom.t > 0.0 && atom.t <= 1.0)) {
      throw Error(ErrorKind::kConfiguration, "A-functional atoms must lie in (0, 1]");
    }
    mass += atom.weight;
    log_moment += atom.weight * std::log(atom.t);
  }
  if (a.density) {
    if (!(a.density_begin > 0.0 && a.density_begin < 1.0)) {
      throw Error(ErrorKind::kConfiguration, "density must vanish near 0");
    }
    mass += integrate_smooth(a.density, a.density_begin, 1.0, 64);
    log_moment += integrate_smooth([&](double t) { return a.density(t) * std::log(t); },
                                   a.density_begin, 1.0, 64);
  }
  if (std::abs(log_moment - 1.0) > tol || std::abs(mass) > tol) {
    throw Error(ErrorKind::kConfiguration,
                "A-functional violates int log t dA = 1, A(1) = 0 (log moment " +
                    std::to_string(log_moment) + ", mass " + std::to_string(mass) + ")");
  }
}

ThetaEstimate estimate_theta_general(const WordTrajectory& traj, const AFunctional& a,
                                     const ThetaBounds& bounds) {
  check_length(traj);
  validate(a);
  const auto n = traj.n();
  auto r_at = [&](double t) {
    const auto k = static_cast<std::int64_t>(std::floor(t * static_cast<double>(n)));
    return traj.r[static_cast<std::size_t>(std::clamp<std::int64_t>(k, 0, n))];
  };

  double raw = 0.0;
  for (const auto& atom : a.atoms) raw += atom.weight * log_plus(r_at(atom.t));

  if (a.density) {
    // log+ R_[nt] is constant on [k/n, (k+1)/n); integrate the density per piece.
    const auto& rule = gauss_legendre(kDensityNodes);
    const auto nd = static_cast<double>(n);
    auto k = static_cast<std::int64_t>(std::floor(a.density_begin * nd));
    for (; k < n; ++k) {
      const double lo = std::max(a.density_begin, static_cast<double>(k) / nd);
      const double hi = static_cast<double>(k + 1) / nd;
      if (hi <= lo) continue;
      raw += log_plus(traj.r[static_cast<std::size_t>(k)]) * rule.integrate(a.density, lo, hi);
    }
  }
  return clamp_theta(raw, bounds);
}

}  // namespace zmt
