#include "zmt/pipeline.hpp"

#include "zmt/error.hpp"
#include "zmt/zm_model.hpp"

namespace zmt {

Analysis analyze_trajectory(const WordTrajectory& traj, std::string source_id,
                            const AnalysisConfig& config, SpectralCache& cache) {
  if (traj.n() < 2) throw Error(ErrorKind::kTextTooShort, "text too short: need at least two tokens");
  const ThetaEstimate theta = config.theta_override
                                  ? clamp_theta(*config.theta_override, config.bounds)
                                  : estimate_theta(traj, config.bounds);

  Analysis out;
  TestReport& rep = out.report;
  rep.source_id = std::move(source_id);
  rep.n = traj.n();
  rep.distinct = traj.distinct();
  rep.theta_hat = theta.value;
  rep.diagnostics.theta_raw = theta.raw;
  rep.diagnostics.clamped = theta.clamped;
  rep.diagnostics.singleton_ratio = singleton_ratio(traj);

  try {
    const ShiftFit fit = fit_shift(theta.value, traj.n(), traj.distinct(), config.head_terms);
    rep.q_hat = fit.q;
    rep.diagnostics.fit_residual = fit.residual;
    const auto params = ZMParams::make(theta.value, fit.q);
    BridgePath path = empirical_text_bridge(traj, params, config.head_terms);
    rep.omega2 = omega_square(path);
    if (config.keep_bridge) out.bridge = std::move(path);
  } catch (const ShiftOutOfRange& e) {
    rep.diagnostics.reason = e.what();
    return out;
  }

  try {
    const auto spec = cache.get(theta.value, config.basis_size);
    const CdfResult p = p_value_detailed(*spec, *rep.omega2, config.calibration);
    rep.p_value = p.value;
    for (const auto& w : p.warnings) rep.diagnostics.warnings.push_back(w);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNumerical && e.kind() != ErrorKind::kDegenerateSpectrum) throw;
    rep.diagnostics.reason = e.what();
  }
  return out;
}

Analysis analyze_tokens(const TokenSequence& tokens, const AnalysisConfig& config,
                        SpectralCache& cache) {
  return analyze_trajectory(distinct_word_trajectory(tokens), tokens.source_id, config, cache);
}

Analysis analyze_text(std::string_view utf8, const TokenizerOptions& tokenizer,
                      std::string source_id, const AnalysisConfig& config, SpectralCache& cache) {
  return analyze_tokens(tokenize(utf8, tokenizer, std::move(source_id)), config, cache);
}

}  // namespace zmt
