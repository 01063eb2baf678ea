#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zmt/pipeline.hpp"
#include "zmt/rng.hpp"
#include "zmt/smirnov.hpp"
#include "zmt/spectral.hpp"
#include "zmt/zm_model.hpp"

namespace zmt {

struct SimConfig {
  ZMParams params = ZMParams::make(0.5, 0.0);
  std::int64_t n = 1000;
  int reps = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

// Cumulative head table size limit.
inline constexpr std::int64_t kSamplerHeadCap = std::int64_t{1} << 20;
inline constexpr double kSamplerHeadResidual = 1e-12;
// Labels at or above this value are reserved for words too rare to index.
inline constexpr std::uint64_t kFreshLabelBase = std::uint64_t{1} << 62;

// Exact sampler for the Zipf-Mandelbrot law. Ranks up to the head cap are
// drawn by binary search in a cumulative table; the remaining mass is drawn
// by rejection-inversion against the convex envelope (x + q)^(-alpha), so no
// probability is truncated.
class ZMSampler {
 public:
  explicit ZMSampler(const ZMParams& params, std::int64_t head_cap = kSamplerHeadCap);

  // Rank i >= 1. Ranks beyond 2^62 (and the measure-zero overflow case) get
  // a fresh label from `fresh`, which the caller keeps per text.
  std::uint64_t draw(Rng& rng, std::uint64_t& fresh) const;

  std::int64_t head_size() const noexcept { return static_cast<std::int64_t>(cdf_.size()); }
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  std::uint64_t draw_tail(Rng& rng, std::uint64_t& fresh) const;

  ZMParams params_;
  std::vector<double> cdf_;  // P(rank <= i + 1), normalised by the total
  double tail_mass_ = 0.0;
  double envelope_lo_ = 0.0;  // Hint(k0 - 1/2)
};

// n iid ranks for the stream (seed, rep).
std::vector<std::uint64_t> sample_text(const SimConfig& cfg, std::uint64_t rep = 0);
std::vector<std::uint64_t> sample_text(const ZMSampler& sampler, std::int64_t n, Rng& rng);

// Sorted samples of a quadratic form with a query for the empirical CDF.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  double operator()(double x) const;
  double mean() const noexcept { return mean_; }
  double std_error() const noexcept { return std_error_; }
  const std::vector<double>& samples() const noexcept { return samples_; }

 private:
  std::vector<double> samples_;
  double mean_ = 0.0;
  double std_error_ = 0.0;
};

inline constexpr int kQuadraticChunk = 4096;

// reps draws of sum_k eta_k^2 / lambda_k over spec.lambda (scaled by 2 under
// the paper calibration). Chunks of kQuadraticChunk draws use independent
// streams, so the result is the same for any thread count.
EmpiricalCdf mc_quadratic_form(const SpectralDecomposition& spec, std::int64_t reps,
                               std::uint64_t seed,
                               NullCalibration calibration = NullCalibration::kAsymptotic);

// Largest |F(x) - F_emp(x)| over the sample points, both one-sided limits.
template <typename Cdf>
double ks_distance(const EmpiricalCdf& emp, const Cdf& cdf) {
  const auto& s = emp.samples();
  const double m = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i + 1) / m),
                  std::abs(f - static_cast<double>(i) / m)});
  }
  return d;
}

enum class Alternative {
  kNone,                   // plain ZM sample
  kSelfConcatenation,      // first half repeated
  kDisjointConcatenation,  // two halves from disjoint dictionaries
};

Alternative parse_alternative(const std::string& name);
const char* to_string(Alternative alt) noexcept;

// Tokens for replicate `rep` under the alternative; the length is cfg.n.
std::vector<std::uint64_t> sample_alternative(const SimConfig& cfg, Alternative alt,
                                              std::uint64_t rep);
std::vector<std::uint64_t> sample_alternative(const ZMSampler& sampler, const SimConfig& cfg,
                                              Alternative alt, std::uint64_t rep);

struct ExperimentResult {
  std::vector<TestReport> reports;  // one per replicate, in replicate order
  std::vector<double> p_values;     // successful replicates only, in order
  int failures = 0;
};

// Full pipeline on cfg.reps simulated texts. Replicates run in parallel and
// share the spectral cache; replicate r always uses stream (seed, r).
ExperimentResult null_pvalue_experiment(const SimConfig& cfg, Alternative alt,
                                        const AnalysisConfig& analysis, SpectralCache& cache);

namespace reference {

EmpiricalCdf mc_quadratic_form(const SpectralDecomposition& spec, std::int64_t reps,
                               std::uint64_t seed,
                               NullCalibration calibration = NullCalibration::kAsymptotic);

ExperimentResult null_pvalue_experiment(const SimConfig& cfg, Alternative alt,
                                        const AnalysisConfig& analysis, SpectralCache& cache);

}  // namespace reference

// One-sample Kolmogorov-Smirnov test against U(0, 1).
struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
};
KsResult ks_uniform(std::span<const double> values);

double median(std::vector<double> values);

}  // namespace zmt
