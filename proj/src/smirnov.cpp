#include "zmt/smirnov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zmt/error.hpp"
#include "zmt/quadrature.hpp"

namespace zmt {
namespace {

constexpr double kRangeSlack = 1e-6;
// Relative slack before a larger successor term counts as non-monotone.
constexpr double kMonotoneSlack = 1e-9;

CdfResult finish(double raw, int terms, bool non_monotone) {
  CdfResult r;
  r.raw = raw;
  r.terms = terms;
  r.non_monotone = non_monotone;
  r.value = std::clamp(raw, 0.0, 1.0);
  r.out_of_range = raw < -kRangeSlack || raw > 1.0 + kRangeSlack;
  if (non_monotone) {
    r.warnings.emplace_back("Smirnov interval integrals are not monotonically decreasing");
  }
  if (r.out_of_range) {
    r.warnings.emplace_back("Smirnov series left [0, 1] before clipping");
  }
  return r;
}

}  // namespace

NullCalibration parse_calibration(const std::string& name) {
  if (name == "paper") return NullCalibration::kPaper;
  if (name == "asymptotic") return NullCalibration::kAsymptotic;
  throw Error(ErrorKind::kConfiguration,
              "unknown calibration '" + name + "' (expected paper or asymptotic)");
}

const char* to_string(NullCalibration calibration) noexcept {
  return calibration == NullCalibration::kPaper ? "paper" : "asymptotic";
}

SmirnovDistribution::SmirnovDistribution(const SpectralDecomposition& spec,
                                         NullCalibration calibration)
    : SmirnovDistribution([&] {
        auto l = spec.lambda;
        if (calibration == NullCalibration::kPaper) {
          for (double& v : l) v *= 2.0;
        }
        return l;
      }()) {}

SmirnovDistribution::SmirnovDistribution(std::vector<double> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.size() < 2) {
    throw Error(ErrorKind::kDegenerateSpectrum,
                "degenerate spectrum: the Smirnov formula needs at least two eigenvalues");
  }
  for (std::size_t j = 0; j < lambda_.size(); ++j) {
    if (!(lambda_[j] > 0.0) || !std::isfinite(lambda_[j]) ||
        (j > 0 && !(lambda_[j] > lambda_[j - 1]))) {
      throw Error(ErrorKind::kDegenerateSpectrum,
                  "degenerate spectrum: lambda must be positive and strictly increasing");
    }
    mean_ += 1.0 / lambda_[j];
  }

  const auto& rule = gauss_legendre(kSmirnovNodes);
  const double half_pi = 0.5 * std::numbers::pi;
  const std::size_t m = lambda_.size();
  // A trailing unpaired eigenvalue would open a semi-infinite interval whose
  // contribution is below e^{-l x / 2} for l beyond the retained spectrum.
  for (std::size_t k = 0; k + 1 < m; k += 2) {
    const double a = lambda_[k];
    const double b = lambda_[k + 1];
    const double root_ab = std::sqrt(a * b);
    Interval iv;
    iv.at.reserve(rule.nodes.size());
    iv.weight.reserve(rule.nodes.size());
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double u = half_pi * 0.5 * (rule.nodes[g] + 1.0);
      const double s = std::sin(u);
      const double l = a + (b - a) * s * s;
      double log_others = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == k || j == k + 1) continue;
        log_others += std::log(std::abs(1.0 - l / lambda_[j]));
      }
      // dl / (l sqrt(-D)) = 2 sqrt(ab) / (l sqrt(prod_others)) du
      const double w = 0.5 * half_pi * rule.weights[g] * 2.0 * root_ab / l *
                       std::exp(-0.5 * log_others) / std::numbers::pi;
      if (!std::isfinite(w) || !std::isfinite(l)) {
        throw Error(ErrorKind::kNumerical, "non-finite Smirnov integrand");
      }
      iv.at.push_back(l);
      iv.weight.push_back(w);
    }
    intervals_.push_back(std::move(iv));
  }
}

double SmirnovDistribution::term(const Interval& iv, double x) const {
  double sum = 0.0;
  for (std::size_t g = 0; g < iv.at.size(); ++g) sum += iv.weight[g] * std::exp(-0.5 * iv.at[g] * x);
  return sum;
}

CdfResult SmirnovDistribution::survival(double x) const {
  if (!(x >= 0.0)) throw Error(ErrorKind::kDomain, "Smirnov argument must be non-negative");
  double sum = 0.0;
  double previous = 0.0;
  bool non_monotone = false;
  int used = 0;
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    const double t = term(intervals_[k], x);
    if (k > 0 && t > previous * (1.0 + kMonotoneSlack)) non_monotone = true;
    sum += (k % 2 == 0) ? t : -t;
    ++used;
    previous = t;
    if (t < kSmirnovTermTolerance) break;
  }
  return finish(sum, used, non_monotone);
}

CdfResult SmirnovDistribution::cdf(double x) const {
  auto s = survival(x);
  return finish(1.0 - s.raw, s.terms, s.non_monotone);
}

CdfResult cdf_w2_detailed(const SpectralDecomposition& spec, double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::kDomain, "cdf_w2 requires x > 0");
  return SmirnovDistribution(spec, NullCalibration::kAsymptotic).cdf(x);
}

double cdf_w2(const SpectralDecomposition& spec, double x) {
  return cdf_w2_detailed(spec, x).value;
}

CdfResult p_value_detailed(const SpectralDecomposition& spec, double omega2,
                           NullCalibration calibration) {
  if (!(omega2 >= 0.0)) throw Error(ErrorKind::kDomain, "omega2 must be non-negative");
  SmirnovDistribution dist(spec, calibration);
  if (omega2 == 0.0) return finish(1.0, 0, false);
  return dist.survival(omega2);
}

double p_value(const SpectralDecomposition& spec, double omega2, NullCalibration calibration) {
  return p_value_detailed(spec, omega2, calibration).value;
}

}  // namespace zmt
