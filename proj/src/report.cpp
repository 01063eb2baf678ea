#include "zmt/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "zmt/error.hpp"

namespace zmt {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

// TSV cells must not contain tabs or newlines.
std::string cell(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string joined_warnings(const Diagnostics& d) {
  std::string out;
  for (const auto& w : d.warnings) {
    if (!out.empty()) out += "; ";
    out += w;
  }
  return out;
}

nlohmann::ordered_json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "tsv") return OutputFormat::kTsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error(ErrorKind::kConfiguration, "unknown format '" + name + "' (expected tsv or json)");
}

std::string tsv_header() {
  return "source_id\tn\tR_n\ttheta_hat\tq_hat\tomega2\tp_value\tsingleton_ratio\ttheta_raw\t"
         "clamped\tfit_residual\treason\twarnings";
}

std::string tsv_row(const TestReport& r) {
  const auto& d = r.diagnostics;
  std::string row = cell(r.source_id);
  for (const auto& c : {std::to_string(r.n), std::to_string(r.distinct), num(r.theta_hat),
                        opt(r.q_hat), opt(r.omega2), opt(r.p_value), num(d.singleton_ratio),
                        num(d.theta_raw), std::string(d.clamped ? "true" : "false"),
                        opt(d.fit_residual), cell(d.reason), cell(joined_warnings(d))}) {
    row += '\t';
    row += c;
  }
  return row;
}

std::string reports_json(std::span<const TestReport> reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    const auto& d = r.diagnostics;
    nlohmann::ordered_json j;
    j["source_id"] = r.source_id;
    j["n"] = r.n;
    j["R_n"] = r.distinct;
    j["theta_hat"] = r.theta_hat;
    j["q_hat"] = opt_json(r.q_hat);
    j["omega2"] = opt_json(r.omega2);
    j["p_value"] = opt_json(r.p_value);
    j["singleton_ratio"] = d.singleton_ratio;
    j["theta_raw"] = d.theta_raw;
    j["clamped"] = d.clamped;
    j["fit_residual"] = opt_json(d.fit_residual);
    j["reason"] = d.reason;
    j["warnings"] = d.warnings;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

void write_reports(std::ostream& out, std::span<const TestReport> reports, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    out << reports_json(reports) << '\n';
    return;
  }
  out << tsv_header() << '\n';
  for (const auto& r : reports) out << tsv_row(r) << '\n';
}

void write_bridge_csv(std::ostream& out, const BridgePath& path) {
  const auto n = path.n();
  out << "k,t,a\n";
  for (std::int64_t k = 0; k <= n; ++k) {
    out << k << ',' << num(static_cast<double>(k) / static_cast<double>(n)) << ','
        << num(path.values[static_cast<std::size_t>(k)]) << '\n';
  }
}

}  // namespace zmt
