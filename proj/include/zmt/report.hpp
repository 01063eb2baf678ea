#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "zmt/bridge.hpp"
#include "zmt/pipeline.hpp"

namespace zmt {

enum class OutputFormat { kTsv, kJson };

OutputFormat parse_output_format(const std::string& name);

// Table columns: the published six (n, R_n, theta_hat, q_hat, omega2,
// p_value) after source_id, then the diagnostics. Missing values are blank
// in TSV and null in JSON.
std::string tsv_header();
std::string tsv_row(const TestReport& report);

// JSON array of objects with the same fields in the same order.
std::string reports_json(std::span<const TestReport> reports);

void write_reports(std::ostream& out, std::span<const TestReport> reports, OutputFormat format);

// k, t = k/n, a_k.
void write_bridge_csv(std::ostream& out, const BridgePath& path);

}  // namespace zmt
