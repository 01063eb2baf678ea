#include "zmt/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zmt/error.hpp"
#include "zmt/occupancy.hpp"
#include "zmt/special_functions.hpp"

namespace zmt {

void SimConfig::validate() const {
  if (n < 1) throw Error(ErrorKind::kConfiguration, "simulation n must be >= 1");
  if (reps < 1) throw Error(ErrorKind::kConfiguration, "simulation reps must be >= 1");
  ZMParams::make(params.theta, params.q);
}

ZMSampler::ZMSampler(const ZMParams& params, std::int64_t head_cap)
    : params_(ZMParams::make(params.theta, params.q)) {
  if (head_cap < 1) throw Error(ErrorKind::kConfiguration, "sampler head cap must be >= 1");
  double cum = 0.0;
  for (std::int64_t i = 1; i <= head_cap; ++i) {
    cum += zm_probability(params_, i);
    cdf_.push_back(cum);
    if (cum > 1.0 - kSamplerHeadResidual) break;
  }
  const auto head = static_cast<double>(cdf_.size());
  tail_mass_ = params_.c * hurwitz_zeta(params_.alpha, head + 1.0 + params_.q);
  const double k0 = head + 1.0;
  envelope_lo_ = std::pow(k0 - 0.5 + params_.q, 1.0 - params_.alpha) / (1.0 - params_.alpha);
}

std::uint64_t ZMSampler::draw_tail(Rng& rng, std::uint64_t& fresh) const {
  const double a = params_.alpha;
  const double q = params_.q;
  const double k0 = static_cast<double>(cdf_.size()) + 1.0;
  const auto hint = [&](double x) { return std::pow(x + q, 1.0 - a) / (1.0 - a); };
  constexpr double kLabelLimit = 0x1.0p62;
  for (;;) {
    const double u = envelope_lo_ * rng.uniform_pos();
    const double x = std::pow(u * (1.0 - a), 1.0 / (1.0 - a)) - q;
    if (!std::isfinite(x) || x + 0.5 >= kLabelLimit) return fresh++;
    const double k = std::max(k0, std::floor(x + 0.5));
    if (u >= hint(k + 0.5) - std::pow(k + q, -a)) return static_cast<std::uint64_t>(k);
  }
}

std::uint64_t ZMSampler::draw(Rng& rng, std::uint64_t& fresh) const {
  const double head = cdf_.back();
  const double u = rng.uniform() * (head + tail_mass_);
  if (u < head) {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                                              std::ssize(cdf_) - 1)) +
           1;
  }
  return draw_tail(rng, fresh);
}

std::vector<std::uint64_t> sample_text(const ZMSampler& sampler, std::int64_t n, Rng& rng) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
  std::uint64_t fresh = kFreshLabelBase;
  for (auto& w : out) w = sampler.draw(rng, fresh);
  return out;
}

std::vector<std::uint64_t> sample_text(const SimConfig& cfg, std::uint64_t rep) {
  cfg.validate();
  const ZMSampler sampler(cfg.params);
  Rng rng(cfg.seed, rep);
  return sample_text(sampler, cfg.n, rng);
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : samples_(std::move(samples)) {
  std::sort(samples_.begin(), samples_.end());
  const double m = static_cast<double>(samples_.size());
  if (samples_.empty()) return;
  mean_ = std::accumulate(samples_.begin(), samples_.end(), 0.0) / m;
  double ss = 0.0;
  for (double s : samples_) ss += (s - mean_) * (s - mean_);
  if (samples_.size() > 1) std_error_ = std::sqrt(ss / (m - 1.0) / m);
}

double EmpiricalCdf::operator()(double x) const {
  if (samples_.empty()) return 0.0;
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

namespace {

std::vector<double> form_weights(const SpectralDecomposition& spec, NullCalibration calibration) {
  if (spec.lambda.empty()) {
    throw Error(ErrorKind::kDegenerateSpectrum, "degenerate spectrum: no positive eigenvalues");
  }
  const double scale = calibration == NullCalibration::kPaper ? 0.5 : 1.0;
  std::vector<double> w;
  w.reserve(spec.lambda.size());
  for (double l : spec.lambda) w.push_back(scale / l);
  return w;
}

void fill_chunk(const std::vector<double>& w, std::uint64_t seed, std::int64_t chunk,
                std::int64_t reps, std::vector<double>& out) {
  Rng rng(seed, static_cast<std::uint64_t>(chunk));
  const std::int64_t begin = chunk * kQuadraticChunk;
  const std::int64_t end = std::min(reps, begin + kQuadraticChunk);
  for (std::int64_t r = begin; r < end; ++r) {
    double s = 0.0;
    for (double wk : w) {
      const double eta = rng.normal();
      s += wk * eta * eta;
    }
    out[static_cast<std::size_t>(r)] = s;
  }
}

std::int64_t chunk_count(std::int64_t reps) { return (reps + kQuadraticChunk - 1) / kQuadraticChunk; }

void check_reps(std::int64_t reps) {
  if (reps < 1) throw Error(ErrorKind::kConfiguration, "reps must be >= 1");
}

TestReport run_replicate(const ZMSampler& sampler, const SimConfig& cfg, Alternative alt,
                         std::uint64_t rep, const AnalysisConfig& analysis, SpectralCache& cache) {
  const auto labels = sample_alternative(sampler, cfg, alt, rep);
  const auto traj = distinct_word_trajectory(labels);
  const std::string id = "rep" + std::to_string(rep);
  try {
    return analyze_trajectory(traj, id, analysis, cache).report;
  } catch (const Error& e) {
    TestReport r;
    r.source_id = id;
    r.n = traj.n();
    r.distinct = traj.distinct();
    r.diagnostics.reason = e.what();
    return r;
  }
}

ExperimentResult collect(std::vector<TestReport> reports) {
  ExperimentResult out;
  for (const auto& r : reports) {
    if (r.p_value) {
      out.p_values.push_back(*r.p_value);
    } else {
      ++out.failures;
    }
  }
  out.reports = std::move(reports);
  return out;
}

}  // namespace

EmpiricalCdf mc_quadratic_form(const SpectralDecomposition& spec, std::int64_t reps,
                               std::uint64_t seed, NullCalibration calibration) {
  check_reps(reps);
  const auto w = form_weights(spec, calibration);
  std::vector<double> out(static_cast<std::size_t>(reps));
  const std::int64_t chunks = chunk_count(reps);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) fill_chunk(w, seed, c, reps, out);
  return EmpiricalCdf(std::move(out));
}

Alternative parse_alternative(const std::string& name) {
  if (name == "none" || name == "null") return Alternative::kNone;
  if (name == "self-concat") return Alternative::kSelfConcatenation;
  if (name == "disjoint-concat") return Alternative::kDisjointConcatenation;
  throw Error(ErrorKind::kConfiguration,
              "unknown alternative '" + name + "' (expected none, self-concat or disjoint-concat)");
}

const char* to_string(Alternative alt) noexcept {
  switch (alt) {
    case Alternative::kNone: return "none";
    case Alternative::kSelfConcatenation: return "self-concat";
    case Alternative::kDisjointConcatenation: return "disjoint-concat";
  }
  return "unknown";
}

std::vector<std::uint64_t> sample_alternative(const SimConfig& cfg, Alternative alt,
                                              std::uint64_t rep) {
  cfg.validate();
  return sample_alternative(ZMSampler(cfg.params), cfg, alt, rep);
}

std::vector<std::uint64_t> sample_alternative(const ZMSampler& sampler, const SimConfig& cfg,
                                              Alternative alt, std::uint64_t rep) {
  Rng rng(cfg.seed, rep);
  const std::int64_t half = cfg.n / 2;
  switch (alt) {
    case Alternative::kNone:
      return sample_text(sampler, cfg.n, rng);
    case Alternative::kSelfConcatenation: {
      auto first = sample_text(sampler, cfg.n - half, rng);
      std::vector<std::uint64_t> out = first;
      out.insert(out.end(), first.begin(), first.begin() + half);
      return out;
    }
    case Alternative::kDisjointConcatenation: {
      auto out = sample_text(sampler, cfg.n - half, rng);
      auto second = sample_text(sampler, half, rng);
      constexpr std::uint64_t kSecondDictionary = std::uint64_t{1} << 63;
      for (auto w : second) out.push_back(w | kSecondDictionary);
      return out;
    }
  }
  return {};
}

ExperimentResult null_pvalue_experiment(const SimConfig& cfg, Alternative alt,
                                        const AnalysisConfig& analysis, SpectralCache& cache) {
  cfg.validate();
  const ZMSampler sampler(cfg.params);
  std::vector<TestReport> reports(static_cast<std::size_t>(cfg.reps));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.reps; ++r) {
    reports[static_cast<std::size_t>(r)] =
        run_replicate(sampler, cfg, alt, static_cast<std::uint64_t>(r), analysis, cache);
  }
  return collect(std::move(reports));
}

namespace reference {

EmpiricalCdf mc_quadratic_form(const SpectralDecomposition& spec, std::int64_t reps,
                               std::uint64_t seed, NullCalibration calibration) {
  check_reps(reps);
  const auto w = form_weights(spec, calibration);
  std::vector<double> out(static_cast<std::size_t>(reps));
  for (std::int64_t c = 0; c < chunk_count(reps); ++c) fill_chunk(w, seed, c, reps, out);
  return EmpiricalCdf(std::move(out));
}

ExperimentResult null_pvalue_experiment(const SimConfig& cfg, Alternative alt,
                                        const AnalysisConfig& analysis, SpectralCache& cache) {
  cfg.validate();
  const ZMSampler sampler(cfg.params);
  std::vector<TestReport> reports;
  for (int r = 0; r < cfg.reps; ++r) {
    reports.push_back(run_replicate(sampler, cfg, alt, static_cast<std::uint64_t>(r), analysis, cache));
  }
  return collect(std::move(reports));
}

}  // namespace reference

KsResult ks_uniform(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::kDomain, "KS test needs at least one value");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double m = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = std::clamp(v[i], 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / m - x, x - static_cast<double>(i) / m});
  }
  // Kolmogorov limit law with the usual finite-sample scaling.
  const double root = std::sqrt(m);
  const double lam = (root + 0.12 + 0.11 / root) * d;
  double p = 0.0;
  if (lam < 0.2) {
    p = 1.0;
  } else {
    for (int j = 1; j <= 100; ++j) {
      const double term = std::exp(-2.0 * j * j * lam * lam);
      p += (j % 2 == 1 ? 2.0 : -2.0) * term;
      if (term < 1e-16) break;
    }
  }
  return {d, std::clamp(p, 0.0, 1.0)};
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorKind::kDomain, "median of an empty sample");
  const auto mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

}  // namespace zmt
