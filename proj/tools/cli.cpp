#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zmt/error.hpp"
#include "zmt/pipeline.hpp"
#include "zmt/report.hpp"
#include "zmt/rng.hpp"
#include "zmt/simulate.hpp"
#include "zmt/smirnov.hpp"
#include "zmt/spectral.hpp"

namespace zmt::cli {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string mode = "words";
  bool keep_hyphens = false;
  double theta_cap = 0.95;
  double theta_floor = 0.05;
  int m_trunc = kDefaultHeadTerms;
  int basis_size = kDefaultBasisSize;
  std::uint64_t seed = 1;
  std::string format = "tsv";
  std::string emit_path;
  std::string trajectory_path;
  std::string calibration = "paper";

  TokenizerOptions tokenizer() const {
    TokenizerOptions t;
    t.mode = parse_token_mode(mode);
    t.keep_hyphens = keep_hyphens;
    return t;
  }

  AnalysisConfig analysis() const {
    if (!(theta_floor > 0.0 && theta_floor < theta_cap && theta_cap < 1.0)) {
      throw Error(ErrorKind::kConfiguration, "need 0 < theta-floor < theta-cap < 1");
    }
    if (m_trunc < 1) throw Error(ErrorKind::kConfiguration, "m-trunc must be >= 1");
    if (basis_size < 2) throw Error(ErrorKind::kConfiguration, "basis-size must be >= 2");
    AnalysisConfig a;
    a.bounds = {theta_floor, theta_cap};
    a.head_terms = m_trunc;
    a.basis_size = basis_size;
    a.calibration = parse_calibration(calibration);
    return a;
  }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--mode", cfg.mode, "Tokenizer: words or han_chars")->capture_default_str();
  cmd->add_flag("--keep-hyphens", cfg.keep_hyphens, "Keep hyphens between letters");
  cmd->add_option("--theta-cap", cfg.theta_cap, "Upper clamp for theta-hat")->capture_default_str();
  cmd->add_option("--theta-floor", cfg.theta_floor, "Lower clamp for theta-hat")
      ->capture_default_str();
  cmd->add_option("--m-trunc", cfg.m_trunc, "Exact head terms in r(k)")->capture_default_str();
  cmd->add_option("--basis-size", cfg.basis_size, "Sine basis size")->capture_default_str();
  cmd->add_option("--format", cfg.format, "tsv or json")->capture_default_str();
  cmd->add_option("--calibration", cfg.calibration, "Null calibration: paper or asymptotic")
      ->capture_default_str();
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  return out;
}

int cmd_analyze(const std::string& file, const RunConfig& cfg, std::optional<double> theta,
                std::ostream& out) {
  AnalysisConfig a = cfg.analysis();
  a.theta_override = theta;
  a.keep_bridge = !cfg.emit_path.empty();
  SpectralCache cache;
  const std::string id = file == "-" ? "stdin" : fs::path(file).filename().string();
  const auto traj = distinct_word_trajectory(tokenize(read_input(file), cfg.tokenizer(), id));
  const auto result = analyze_trajectory(traj, id, a, cache);
  if (!cfg.trajectory_path.empty()) {
    auto csv = open_output(cfg.trajectory_path);
    csv << "k,R_k\n";
    for (std::size_t k = 0; k < traj.r.size(); ++k) csv << k << ',' << traj.r[k] << '\n';
  }
  const TestReport reports[] = {result.report};
  write_reports(out, reports, parse_output_format(cfg.format));
  if (result.bridge) {
    auto csv = open_output(cfg.emit_path);
    write_bridge_csv(csv, *result.bridge);
  }
  return result.report.fit_failed() ? kExitFitFailure : kExitOk;
}

int cmd_batch(const std::string& dir, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::kIo, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (files.empty()) throw Error(ErrorKind::kIo, "no files in " + dir);
  std::sort(files.begin(), files.end(),
            [](const fs::path& x, const fs::path& y) { return x.filename() < y.filename(); });

  const AnalysisConfig a = cfg.analysis();
  const TokenizerOptions tok = cfg.tokenizer();
  SpectralCache cache;
  std::vector<TestReport> rows(files.size());
  std::vector<char> failed(files.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(files.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const std::string id = files[idx].filename().string();
    try {
      rows[idx] = analyze_text(read_input(files[idx].string()), tok, id, a, cache).report;
      failed[idx] = rows[idx].fit_failed();
    } catch (const std::exception& e) {
      rows[idx].source_id = id;
      rows[idx].diagnostics.reason = e.what();
      failed[idx] = 1;
    }
  }
  write_reports(out, rows, parse_output_format(cfg.format));
  const auto failures = std::count(failed.begin(), failed.end(), 1);
  if (failures > 0) err << failures << " of " << files.size() << " files failed\n";
  return failures == count ? kExitError : kExitOk;
}

struct SimulateArgs {
  double theta = 0.8;
  double q = 3.0;
  std::int64_t n = 2000;
  int reps = 100;
  std::string alternative = "none";
};

int cmd_simulate(const SimulateArgs& s, const RunConfig& cfg, std::ostream& out) {
  SimConfig sim;
  sim.params = ZMParams::make(s.theta, s.q);
  sim.n = s.n;
  sim.reps = s.reps;
  sim.seed = cfg.seed;
  const auto alt = parse_alternative(s.alternative);
  SpectralCache cache;
  const auto result = null_pvalue_experiment(sim, alt, cfg.analysis(), cache);

  if (parse_output_format(cfg.format) == OutputFormat::kJson) {
    write_reports(out, result.reports, OutputFormat::kJson);
  } else {
    out << "# rng: " << kRngAlgorithm << '\n';
    out << "# theta=" << s.theta << " q=" << s.q << " n=" << s.n << " reps=" << s.reps
        << " seed=" << cfg.seed << " alternative=" << to_string(alt)
        << " calibration=" << cfg.calibration << '\n';
    write_reports(out, result.reports, OutputFormat::kTsv);
    out << "# failures\t" << result.failures << '\n';
    if (!result.p_values.empty()) {
      const auto ks = ks_uniform(result.p_values);
      out << "# median_p\t" << median(result.p_values) << '\n';
      out << "# ks_uniform_D\t" << ks.statistic << "\n# ks_uniform_p\t" << ks.p_value << '\n';
    }
  }
  return result.p_values.empty() ? kExitFitFailure : kExitOk;
}

int cmd_kernel(double theta, const RunConfig& cfg, std::ostream& out) {
  const auto spec = spectral_decomposition(KernelConfig{theta, cfg.basis_size});
  std::ostream* dst = &out;
  std::ofstream file;
  if (!cfg.emit_path.empty()) {
    file = open_output(cfg.emit_path);
    dst = &file;
  }
  *dst << "k,nu,lambda\n";
  char buf[96];
  for (std::size_t k = 0; k < spec.nu.size(); ++k) {
    const double nu = spec.nu[k];
    if (nu > kEigenvalueCutoff) {
      std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g\n", k + 1, nu, 1.0 / nu);
    } else {
      std::snprintf(buf, sizeof buf, "%zu,%.12g,\n", k + 1, nu);
    }
    *dst << buf;
  }
  return kExitOk;
}

// Reads theta_hat and omega2 from an analyze/batch TSV.
int cmd_cdf_report(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  std::istringstream in(read_input(path));
  std::string line;
  std::vector<std::string> header;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    return cells;
  };
  const auto calibration = parse_calibration(cfg.calibration);
  SpectralCache cache;
  out << "source_id\ttheta_hat\tomega2\tp_value\n";
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line);
    if (header.empty()) {
      header = cells;
      continue;
    }
    auto col = [&](const char* name) -> std::string {
      const auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) throw Error(ErrorKind::kIo, std::string("report lacks column ") + name);
      const auto i = static_cast<std::size_t>(it - header.begin());
      return i < cells.size() ? cells[i] : std::string();
    };
    const std::string th = col("theta_hat");
    const std::string w2 = col("omega2");
    out << col("source_id") << '\t' << th << '\t' << w2 << '\t';
    if (!th.empty() && !w2.empty()) {
      const auto spec = cache.get(std::stod(th), cfg.basis_size);
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.10g", p_value(*spec, std::stod(w2), calibration));
      out << buf;
    }
    out << '\n';
  }
  if (header.empty()) throw Error(ErrorKind::kIo, "empty report " + path);
  return kExitOk;
}

int cmd_cdf(double theta, double x, const RunConfig& cfg, std::ostream& out) {
  const auto spec = spectral_decomposition(KernelConfig{theta, cfg.basis_size});
  const SmirnovDistribution dist(spec, parse_calibration(cfg.calibration));
  const auto f = dist.cdf(x);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", f.value);
  out << buf << '\n';
  for (const auto& w : f.warnings) out << "# warning: " << w << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zipf-Mandelbrot goodness-of-fit test for texts"};
  app.name("zmtest");
  app.require_subcommand(1);
  RunConfig cfg;

  std::string file;
  std::optional<double> theta_hat;
  auto* analyze = app.add_subcommand("analyze", "Test one text file ('-' for stdin)");
  analyze->add_option("file", file, "Input text")->required();
  add_common(analyze, cfg);
  analyze->add_option("--emit-path", cfg.emit_path, "Write the text bridge as CSV");
  analyze->add_option("--emit-trajectory", cfg.trajectory_path, "Write k, R_k as CSV");
  analyze->add_option("--theta-hat", theta_hat, "Use this theta instead of the estimate");

  std::string dir;
  auto* batch = app.add_subcommand("batch", "Test every file of a directory");
  batch->add_option("dir", dir, "Input directory")->required();
  add_common(batch, cfg);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "p-values of simulated texts");
  simulate->add_option("--theta", sim.theta, "Law exponent theta")->capture_default_str();
  simulate->add_option("--q", sim.q, "Law shift q")->capture_default_str();
  simulate->add_option("--n", sim.n, "Text length")->capture_default_str();
  simulate->add_option("--reps", sim.reps, "Replicates")->capture_default_str();
  simulate->add_option("--alternative", sim.alternative, "none, self-concat or disjoint-concat")
      ->capture_default_str();
  simulate->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_common(simulate, cfg);

  double kernel_theta = 0.5;
  auto* kernel = app.add_subcommand("kernel", "Kernel eigenvalues nu and lambda = 1/nu as CSV");
  kernel->add_option("--theta", kernel_theta, "theta")->required();
  kernel->add_option("--basis-size", cfg.basis_size, "Sine basis size")->capture_default_str();
  kernel->add_option("--emit-path", cfg.emit_path, "Write the CSV here instead of stdout");

  double cdf_theta = 0.5;
  double cdf_x = 0.0;
  std::string report_path;
  auto* cdf = app.add_subcommand("cdf", "Limiting CDF F(x), or p-values for a report");
  auto* cdf_theta_opt = cdf->add_option("--theta", cdf_theta, "theta");
  auto* cdf_x_opt = cdf->add_option("--x", cdf_x, "Argument x > 0");
  auto* report_opt = cdf->add_option("--report", report_path, "TSV written by analyze or batch");
  cdf_theta_opt->needs(cdf_x_opt);
  cdf_x_opt->needs(cdf_theta_opt);
  report_opt->excludes(cdf_theta_opt);
  cdf->add_option("--basis-size", cfg.basis_size, "Sine basis size")->capture_default_str();
  cdf->add_option("--calibration", cfg.calibration, "paper or asymptotic")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*analyze) return cmd_analyze(file, cfg, theta_hat, out);
    if (*batch) return cmd_batch(dir, cfg, out, err);
    if (*simulate) return cmd_simulate(sim, cfg, out);
    if (*kernel) return cmd_kernel(kernel_theta, cfg, out);
    if (*cdf) {
      if (!report_path.empty()) return cmd_cdf_report(report_path, cfg, out);
      if (cdf_x_opt->count() == 0) {
        err << "cdf needs --theta and --x, or --report\n";
        return kExitError;
      }
      // F(x) is the limiting law unless a calibration is asked for.
      if (cdf->get_option("--calibration")->count() == 0) cfg.calibration = "asymptotic";
      return cmd_cdf(cdf_theta, cdf_x, cfg, out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace zmt::cli
