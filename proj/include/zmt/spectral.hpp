#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zmt {

inline constexpr int kDefaultBasisSize = 100;
inline constexpr double kEigenvalueCutoff = 1e-8;

// Covariance of the limiting distinct-word process.
double kernel_K(double s, double t, double theta);
// Covariance of its bridge pinned by the true theta.
double kernel_K0(double s, double t, double theta);
// Covariance of the limit when theta is replaced by log2(R_n / R_[n/2]).
double kernel_Khat(double s, double t, double theta);

struct KernelConfig {
  double theta = 0.5;
  int basis_size = kDefaultBasisSize;
};

// One-dimensional integrals from which every Galerkin entry is assembled.
// Vectors are indexed by frequency; index 0 is unused (A_0 = 0).
//   A_k = int_0^1 t^th sin(pi k t)          k = 1..2N
//   B_k = int_1^2 t^th sin(pi k t)          k = 1..N
//   C_k = int_0^1 t^(th+1) cos(pi k t)
//   D_k = int_1^2 t^th (2 - t) cos(pi k t)
//   F_k = int_0^1 K(t, 1) sin(pi k t)       = (-1)^k B_k + ((-1)^k - 1)/(pi k)
//   G_k = int_0^1 t^th log t sin(pi k t)
//   H_k = int_0^1 K(t, 1/2) sin(pi k t)
struct BuildingBlocks {
  double theta = 0.5;
  int basis_size = 0;
  std::vector<double> A, B, C, D, F, G, H;
  double error_estimate = 0.0;  // max |primary - check rule| over all blocks

  // A with the odd extension A_{-k} = -A_k.
  double A_signed(int k) const { return k >= 0 ? A[static_cast<std::size_t>(k)]
                                               : -A[static_cast<std::size_t>(-k)]; }
  // E_ij = int_0^1 t^th sin(pi i t) cos(pi j t) = (A_{i+j} + A_{i-j}) / 2.
  double E(int i, int j) const { return 0.5 * (A_signed(i + j) + A_signed(i - j)); }
};

inline constexpr double kBlockTolerance = 1e-10;

// Composite Gauss-Legendre on cells no wider than a quarter period of the
// fastest frequency, graded towards t = 0. Parallel over frequencies. Throws
// Error(kNumerical) naming the index when a lower-order check rule disagrees
// by more than kBlockTolerance.
BuildingBlocks building_blocks(double theta, int basis_size);

// J_ij = int int (s + t)^th sin(pi i s) sin(pi j t) from the blocks.
double galerkin_J(const BuildingBlocks& bb, int i, int j);
// q_ij = int int Khat(s, t) sin(pi i s) sin(pi j t), 1-based indices.
double galerkin_entry(const BuildingBlocks& bb, int i, int j);

Eigen::MatrixXd q_matrix(const BuildingBlocks& bb);
Eigen::MatrixXd q_matrix(const KernelConfig& config);

// Kernel eigenvalues. The sine functions in q_ij are not normalised
// (int sin^2 = 1/2), so the operator in the orthonormal basis sqrt(2) sin is 2Q.
struct SpectralDecomposition {
  double theta = 0.5;
  int basis_size = 0;
  std::vector<double> nu;      // eigenvalues of 2Q, descending
  std::vector<double> lambda;  // 1 / nu for nu > kEigenvalueCutoff, ascending
  Eigen::MatrixXd vectors;     // column k pairs with nu[k], in the sine basis

  double trace() const;
};

SpectralDecomposition eigen_decompose(const Eigen::MatrixXd& q, double theta);
SpectralDecomposition spectral_decomposition(const KernelConfig& config);

// Thread-safe memo of decompositions keyed by theta rounded to 1e-6 and the
// basis size. The decomposition is computed at the rounded theta so the
// result does not depend on which caller got there first.
class SpectralCache {
 public:
  std::shared_ptr<const SpectralDecomposition> get(double theta,
                                                   int basis_size = kDefaultBasisSize);
  std::size_t size() const;

  static double rounded_theta(double theta);

 private:
  using Key = std::pair<std::int64_t, int>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const SpectralDecomposition>> entries_;
};

namespace reference {

// Serial blocks integrated index by index with cells aligned to each
// frequency's own zeros and extrema. Independent of the shared-panel path.
BuildingBlocks building_blocks(double theta, int basis_size);

Eigen::MatrixXd q_matrix(const BuildingBlocks& bb);

}  // namespace reference

}  // namespace zmt
