#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zmt/bridge.hpp"
#include "zmt/estimation.hpp"
#include "zmt/occupancy.hpp"
#include "zmt/smirnov.hpp"
#include "zmt/spectral.hpp"
#include "zmt/text_ingest.hpp"

namespace zmt {

struct AnalysisConfig {
  ThetaBounds bounds;
  int head_terms = kDefaultHeadTerms;
  int basis_size = kDefaultBasisSize;
  NullCalibration calibration = NullCalibration::kPaper;
  // Replaces the estimate from the trajectory when set (still clamped).
  std::optional<double> theta_override;
  bool keep_bridge = false;
};

// Extensions beyond the published table columns.
struct Diagnostics {
  double singleton_ratio = 0.0;
  double theta_raw = 0.0;
  bool clamped = false;
  std::optional<double> fit_residual;
  std::string reason;  // why q-hat / omega2 / p are missing
  std::vector<std::string> warnings;
};

// One row of the goodness-of-fit table: n, R_n, theta-hat, q-hat, omega2, p.
struct TestReport {
  std::string source_id;
  std::int64_t n = 0;
  std::int64_t distinct = 0;
  double theta_hat = 0.0;
  std::optional<double> q_hat;
  std::optional<double> omega2;
  std::optional<double> p_value;
  Diagnostics diagnostics;

  bool fit_failed() const noexcept { return !p_value.has_value(); }
};

struct Analysis {
  TestReport report;
  std::optional<BridgePath> bridge;
};

// trajectory -> theta-hat -> q-hat -> text bridge -> omega2 -> spectrum -> p.
// A failed q-hat fit or spectral step leaves the optional fields empty and
// records the reason; estimation errors (text too short) are thrown. The
// spectrum is taken from `cache` at theta-hat rounded to 1e-6.
Analysis analyze_trajectory(const WordTrajectory& traj, std::string source_id,
                            const AnalysisConfig& config, SpectralCache& cache);

Analysis analyze_tokens(const TokenSequence& tokens, const AnalysisConfig& config,
                        SpectralCache& cache);

Analysis analyze_text(std::string_view utf8, const TokenizerOptions& tokenizer,
                      std::string source_id, const AnalysisConfig& config, SpectralCache& cache);

}  // namespace zmt
