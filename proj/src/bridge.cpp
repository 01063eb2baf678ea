#include "zmt/bridge.hpp"

#include <cmath>

#include "zmt/error.hpp"

namespace zmt {
namespace {

void check_bridge_input(const WordTrajectory& traj) {
  if (traj.n() < 2) throw Error(ErrorKind::kTextTooShort, "text too short");
  if (traj.distinct() < 1) throw Error(ErrorKind::kDomain, "R_n must be positive");
}

}  // namespace

BridgePath empirical_bridge(const WordTrajectory& traj, double theta) {
  check_bridge_input(traj);
  const auto n = traj.n();
  const auto rn = static_cast<double>(traj.distinct());
  const double scale = 1.0 / std::sqrt(rn);
  BridgePath path;
  path.kind = BridgeKind::kPowerCurve;
  path.values.resize(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) {
    const double power = std::pow(static_cast<double>(k) / static_cast<double>(n), theta);
    path.values[static_cast<std::size_t>(k)] =
        (static_cast<double>(traj.r[static_cast<std::size_t>(k)]) - power * rn) * scale;
  }
  path.values.front() = 0.0;
  path.values.back() = 0.0;
  return path;
}

BridgePath empirical_text_bridge(const WordTrajectory& traj, const ZMParams& fitted,
                                 int head_terms) {
  check_bridge_input(traj);
  const auto n = traj.n();
  const auto expected = expected_distinct_curve(fitted, n, head_terms);
  const double scale = 1.0 / std::sqrt(static_cast<double>(traj.distinct()));
  BridgePath path;
  path.kind = BridgeKind::kExpectedCurve;
  path.values.resize(static_cast<std::size_t>(n + 1));
  for (std::size_t k = 0; k < path.values.size(); ++k) {
    path.values[k] = (static_cast<double>(traj.r[k]) - expected[k]) * scale;
  }
  return path;
}

double omega_square(std::span<const double> a) {
  if (a.size() < 3) throw Error(ErrorKind::kTextTooShort, "bridge needs n >= 2");
  const std::size_t n = a.size() - 1;
  double sum = 0.0;
  for (std::size_t k = 1; k < n; ++k) sum += a[k] * (2.0 * a[k] + a[k + 1]);
  // Endpoint terms vanish for a pinned path.
  sum += a[0] * (a[0] + a[1]) + a[n] * a[n];
  return sum / (3.0 * static_cast<double>(n));
}

double omega_square(const BridgePath& path) { return omega_square(path.values); }

}  // namespace zmt
