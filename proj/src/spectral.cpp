#include "zmt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "zmt/error.hpp"
#include "zmt/quadrature.hpp"

namespace zmt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr int kPrimaryOrder = 16;
constexpr int kCheckOrder = 10;

// t^theta log t, continuous at 0.
double pow_log(double t, double theta) {
  return t > 0.0 ? std::pow(t, theta) * std::log(t) : 0.0;
}

double sin_pi(double x) { return std::sin(kPi * x); }
double cos_pi(double x) { return std::cos(kPi * x); }
double parity(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

void check_config(double theta, int basis_size) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorKind::kDomain, "kernel theta must lie in (0, 1)");
  }
  if (basis_size < 1) throw Error(ErrorKind::kConfiguration, "basis_size must be >= 1");
}

// Per-node integrand factors that do not depend on the frequency.
struct UnitPanel {
  Panel panel;
  std::vector<double> pow_t;       // t^th
  std::vector<double> pow_t1;      // t^(th+1)
  std::vector<double> pow_log_t;   // t^th log t
  std::vector<double> k_half;      // K(t, 1/2)
};

struct UpperPanel {
  Panel panel;
  std::vector<double> pow_t;       // t^th
  std::vector<double> pow_t_2mt;   // t^th (2 - t)
};

UnitPanel make_unit_panel(double theta, int cells, int order) {
  UnitPanel u;
  u.panel = composite_panel(0.0, 1.0, cells, order, /*graded_left=*/true);
  const auto m = u.panel.size();
  u.pow_t.resize(m);
  u.pow_t1.resize(m);
  u.pow_log_t.resize(m);
  u.k_half.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = u.panel.t[i];
    u.pow_t[i] = std::pow(t, theta);
    u.pow_t1[i] = u.pow_t[i] * t;
    u.pow_log_t[i] = u.pow_t[i] * std::log(t);
    u.k_half[i] = kernel_K(t, 0.5, theta);
  }
  return u;
}

UpperPanel make_upper_panel(double theta, int cells, int order) {
  UpperPanel u;
  u.panel = composite_panel(1.0, 2.0, cells, order);
  const auto m = u.panel.size();
  u.pow_t.resize(m);
  u.pow_t_2mt.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = u.panel.t[i];
    u.pow_t[i] = std::pow(t, theta);
    u.pow_t_2mt[i] = u.pow_t[i] * (2.0 - t);
  }
  return u;
}

struct Frequency {
  double A = 0, B = 0, C = 0, D = 0, G = 0, H = 0;
};

Frequency integrate_frequency(int k, bool full, const UnitPanel& lo, const UpperPanel& hi) {
  Frequency f;
  const auto kd = static_cast<double>(k);
  for (std::size_t i = 0; i < lo.panel.size(); ++i) {
    const double x = kd * lo.panel.t[i];
    const double w = lo.panel.w[i];
    const double s = sin_pi(x);
    f.A += w * lo.pow_t[i] * s;
    if (full) {
      f.C += w * lo.pow_t1[i] * cos_pi(x);
      f.G += w * lo.pow_log_t[i] * s;
      f.H += w * lo.k_half[i] * s;
    }
  }
  if (full) {
    for (std::size_t i = 0; i < hi.panel.size(); ++i) {
      const double x = kd * hi.panel.t[i];
      const double w = hi.panel.w[i];
      f.B += w * hi.pow_t[i] * sin_pi(x);
      f.D += w * hi.pow_t_2mt[i] * cos_pi(x);
    }
  }
  return f;
}

double max_abs_diff(const Frequency& a, const Frequency& b) {
  return std::max({std::abs(a.A - b.A), std::abs(a.B - b.B), std::abs(a.C - b.C),
                   std::abs(a.D - b.D), std::abs(a.G - b.G), std::abs(a.H - b.H)});
}

BuildingBlocks allocate_blocks(double theta, int basis_size) {
  BuildingBlocks bb;
  bb.theta = theta;
  bb.basis_size = basis_size;
  const auto n = static_cast<std::size_t>(basis_size) + 1;
  bb.A.assign(2 * n - 1, 0.0);
  bb.B.assign(n, 0.0);
  bb.C.assign(n, 0.0);
  bb.D.assign(n, 0.0);
  bb.F.assign(n, 0.0);
  bb.G.assign(n, 0.0);
  bb.H.assign(n, 0.0);
  return bb;
}

void store(BuildingBlocks& bb, int k, const Frequency& f) {
  const auto idx = static_cast<std::size_t>(k);
  bb.A[idx] = f.A;
  if (k <= bb.basis_size) {
    bb.B[idx] = f.B;
    bb.C[idx] = f.C;
    bb.D[idx] = f.D;
    bb.G[idx] = f.G;
    bb.H[idx] = f.H;
    bb.F[idx] = parity(k) * f.B + (parity(k) - 1.0) / (kPi * k);
  }
}

}  // namespace

double kernel_K(double s, double t, double theta) {
  return std::pow(s + t, theta) - std::max(std::pow(s, theta), std::pow(t, theta));
}

double kernel_K0(double s, double t, double theta) {
  const double st = std::pow(s, theta);
  const double tt = std::pow(t, theta);
  return kernel_K(s, t, theta) - st * kernel_K(1.0, t, theta) - tt * kernel_K(s, 1.0, theta) +
         st * tt * kernel_K(1.0, 1.0, theta);
}

double kernel_Khat(double s, double t, double theta) {
  const double two_th = std::pow(2.0, theta);
  const double k11 = kernel_K(1.0, 1.0, theta);
  const double k1h = kernel_K(1.0, 0.5, theta);
  const double khh = kernel_K(0.5, 0.5, theta);
  const double cross = (k11 - two_th * k1h) / kLn2;
  const double var = (k11 - 2.0 * two_th * k1h + two_th * two_th * khh) / (kLn2 * kLn2);

  const double st = std::pow(s, theta);
  const double tt = std::pow(t, theta);
  const double sl = pow_log(s, theta);
  const double tl = pow_log(t, theta);
  const double cov_s = (kernel_K(s, 1.0, theta) - two_th * kernel_K(s, 0.5, theta)) / kLn2;
  const double cov_t = (kernel_K(t, 1.0, theta) - two_th * kernel_K(t, 0.5, theta)) / kLn2;
  return kernel_K0(s, t, theta) - tl * cov_s - sl * cov_t + (sl * tt + st * tl) * cross +
         sl * tl * var;
}

BuildingBlocks building_blocks(double theta, int basis_size) {
  check_config(theta, basis_size);
  const int top = 2 * basis_size;
  // Cell width 1/(2 top) on [0,1] and 1/(2N) on [1,2]: a quarter period of
  // the fastest sine integrated on each interval.
  const auto unit = make_unit_panel(theta, 2 * top, kPrimaryOrder);
  const auto upper = make_upper_panel(theta, 2 * basis_size, kPrimaryOrder);
  const auto unit_check = make_unit_panel(theta, 2 * top, kCheckOrder);
  const auto upper_check = make_upper_panel(theta, 2 * basis_size, kCheckOrder);

  BuildingBlocks bb = allocate_blocks(theta, basis_size);
  std::vector<double> errors(static_cast<std::size_t>(top) + 1, 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (int k = 1; k <= top; ++k) {
    const bool full = k <= basis_size;
    const auto primary = integrate_frequency(k, full, unit, upper);
    const auto check = integrate_frequency(k, full, unit_check, upper_check);
    store(bb, k, primary);
    errors[static_cast<std::size_t>(k)] = max_abs_diff(primary, check);
  }
  const auto worst = std::max_element(errors.begin(), errors.end());
  bb.error_estimate = *worst;
  if (bb.error_estimate > kBlockTolerance) {
    throw Error(ErrorKind::kNumerical,
                "building-block quadrature did not converge at index " +
                    std::to_string(worst - errors.begin()) + " (error estimate " +
                    std::to_string(bb.error_estimate) + ")");
  }
  return bb;
}

double galerkin_J(const BuildingBlocks& bb, int i, int j) {
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  if (i == j) {
    return (bb.A[ui] - bb.B[ui]) / (2.0 * kPi * i) - 0.5 * (bb.C[ui] + bb.D[ui]);
  }
  const double num = i * bb.A[uj] - j * bb.A[ui] - parity(i + j) * (i * bb.B[uj] - j * bb.B[ui]);
  return num / (kPi * static_cast<double>(i * i - j * j));
}

double galerkin_entry(const BuildingBlocks& bb, int i, int j) {
  const double theta = bb.theta;
  const double two_th = std::pow(2.0, theta);
  const double k11 = kernel_K(1.0, 1.0, theta);
  const double k1h = kernel_K(1.0, 0.5, theta);
  const double khh = kernel_K(0.5, 0.5, theta);
  const double cross = (k11 - two_th * k1h) / kLn2;
  const double var = (k11 - 2.0 * two_th * k1h + two_th * two_th * khh) / (kLn2 * kLn2);

  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  const double Ai = bb.A[ui], Aj = bb.A[uj];
  const double Fi = bb.F[ui], Fj = bb.F[uj];
  const double Gi = bb.G[ui], Gj = bb.G[uj];
  const double Hi = bb.H[ui], Hj = bb.H[uj];

  return galerkin_J(bb, i, j) - (Ai - bb.E(i, j)) / (kPi * j) - (Aj - bb.E(j, i)) / (kPi * i) -
         Ai * Fj - Aj * Fi + k11 * Ai * Aj - Gj * (Fi - two_th * Hi) / kLn2 -
         Gi * (Fj - two_th * Hj) / kLn2 + (Ai * Gj + Aj * Gi) * cross + Gi * Gj * var;
}

Eigen::MatrixXd q_matrix(const BuildingBlocks& bb) {
  const int n = bb.basis_size;
  Eigen::MatrixXd q(n, n);
#pragma omp parallel for schedule(static)
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) q(i - 1, j - 1) = galerkin_entry(bb, i, j);
  }
  return q;
}

Eigen::MatrixXd q_matrix(const KernelConfig& config) {
  return q_matrix(building_blocks(config.theta, config.basis_size));
}

double SpectralDecomposition::trace() const {
  double sum = 0.0;
  for (double v : nu) sum += v;
  return sum;
}

SpectralDecomposition eigen_decompose(const Eigen::MatrixXd& q, double theta) {
  if (q.rows() != q.cols() || q.rows() == 0) {
    throw Error(ErrorKind::kDomain, "Galerkin matrix must be square and non-empty");
  }
  const Eigen::MatrixXd op = 2.0 * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumerical, "symmetric eigen-solver failed");
  }
  const auto n = op.rows();
  SpectralDecomposition spec;
  spec.theta = theta;
  spec.basis_size = static_cast<int>(n);
  spec.nu.resize(static_cast<std::size_t>(n));
  spec.vectors.resize(n, n);
  // Eigen returns ascending eigenvalues.
  for (Eigen::Index k = 0; k < n; ++k) {
    spec.nu[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    spec.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  for (double v : spec.nu) {
    if (v > kEigenvalueCutoff) spec.lambda.push_back(1.0 / v);
  }
  return spec;
}

SpectralDecomposition spectral_decomposition(const KernelConfig& config) {
  return eigen_decompose(q_matrix(config), config.theta);
}

double SpectralCache::rounded_theta(double theta) { return std::round(theta * 1e6) / 1e6; }

std::shared_ptr<const SpectralDecomposition> SpectralCache::get(double theta, int basis_size) {
  const Key key{std::llround(theta * 1e6), basis_size};
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  const double rounded = static_cast<double>(key.first) / 1e6;
  auto computed = std::make_shared<const SpectralDecomposition>(
      spectral_decomposition(KernelConfig{rounded, basis_size}));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, std::move(computed));
  return it->second;
}

std::size_t SpectralCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

namespace reference {

BuildingBlocks building_blocks(double theta, int basis_size) {
  check_config(theta, basis_size);
  BuildingBlocks bb = allocate_blocks(theta, basis_size);
  for (int k = 1; k <= 2 * basis_size; ++k) {
    Frequency f;
    f.A = integrate_oscillatory(
        [&](double t) { return std::pow(t, theta) * sin_pi(k * t); }, 0.0, 1.0, k,
        kPrimaryOrder, true);
    if (k <= basis_size) {
      f.B = integrate_oscillatory(
          [&](double t) { return std::pow(t, theta) * sin_pi(k * t); }, 1.0, 2.0, k);
      f.C = integrate_oscillatory(
          [&](double t) { return std::pow(t, theta + 1.0) * cos_pi(k * t); }, 0.0, 1.0, k,
          kPrimaryOrder, true);
      f.D = integrate_oscillatory(
          [&](double t) { return std::pow(t, theta) * (2.0 - t) * cos_pi(k * t); }, 1.0, 2.0,
          k);
      f.G = integrate_oscillatory(
          [&](double t) { return pow_log(t, theta) * sin_pi(k * t); }, 0.0, 1.0, k,
          kPrimaryOrder, true);
      // K(t, 1/2) has a kink at t = 1/2.
      auto h = [&](double t) { return kernel_K(t, 0.5, theta) * sin_pi(k * t); };
      f.H = integrate_oscillatory(h, 0.0, 0.5, k, kPrimaryOrder, true) +
            integrate_oscillatory(h, 0.5, 1.0, k);
    }
    store(bb, k, f);
  }
  return bb;
}

Eigen::MatrixXd q_matrix(const BuildingBlocks& bb) {
  const int n = bb.basis_size;
  Eigen::MatrixXd q(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) q(i - 1, j - 1) = galerkin_entry(bb, i, j);
  }
  return q;
}

}  // namespace reference

}  // namespace zmt
