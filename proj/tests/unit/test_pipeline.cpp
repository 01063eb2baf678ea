#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "oracles/oracles.hpp"
#include "zmt/error.hpp"
#include "zmt/pipeline.hpp"
#include "zmt/report.hpp"

using Catch::Matchers::WithinAbs;

namespace {

std::string sonnet(const char* name) {
  return oracle::read_file(std::string(ZMT_TEST_DATA_DIR) + "/sonnets/" + name);
}

}  // namespace

TEST_CASE("sonnet analysis produces a complete row") {
  zmt::SpectralCache cache;
  const auto a = zmt::analyze_text(sonnet("001.txt"), {}, "001.txt", {}, cache);
  const auto& r = a.report;
  CHECK(r.source_id == "001.txt");
  CHECK(r.n > 90);
  REQUIRE(r.p_value);
  CHECK(*r.p_value > 0.0);
  CHECK(*r.p_value < 1.0);
  REQUIRE(r.q_hat);
  REQUIRE(r.omega2);
  CHECK(std::abs(*r.diagnostics.fit_residual) < 0.01);
  CHECK_FALSE(a.bridge);

  zmt::AnalysisConfig keep;
  keep.keep_bridge = true;
  const auto b = zmt::analyze_text(sonnet("001.txt"), {}, "001.txt", keep, cache);
  REQUIRE(b.bridge);
  CHECK(b.bridge->n() == r.n);
  CHECK(*b.report.p_value == *r.p_value);
}

TEST_CASE("injected theta reproduces the published shift") {
  zmt::SpectralCache cache;
  zmt::AnalysisConfig cfg;
  cfg.theta_override = 0.7911;
  // Any trajectory with n = 98 and R_n = 77.
  std::vector<std::int64_t> r(99);
  for (int k = 0; k <= 98; ++k) r[static_cast<std::size_t>(k)] = std::min(k, 77);
  const auto a = zmt::analyze_trajectory(zmt::trajectory_from_counts(r), "I", cfg, cache);
  REQUIRE(a.report.q_hat);
  CHECK_THAT(*a.report.q_hat, WithinAbs(5.1473, 0.02));
  CHECK(a.report.theta_hat == 0.7911);
}

TEST_CASE("degenerate texts") {
  zmt::SpectralCache cache;
  CHECK_THROWS_AS(zmt::analyze_text("word", {}, "one", {}, cache), zmt::Error);
  std::string same;
  for (int i = 0; i < 40; ++i) same += "la ";
  const auto a = zmt::analyze_text(same, {}, "same", {}, cache);
  CHECK(a.report.diagnostics.clamped);
  CHECK(a.report.theta_hat == 0.05);
  if (a.report.fit_failed()) CHECK_FALSE(a.report.diagnostics.reason.empty());
}

TEST_CASE("analysis is deterministic") {
  zmt::SpectralCache c1, c2;
  const auto a = zmt::analyze_text(sonnet("116.txt"), {}, "x", {}, c1).report;
  const auto b = zmt::analyze_text(sonnet("116.txt"), {}, "x", {}, c2).report;
  CHECK(zmt::tsv_row(a) == zmt::tsv_row(b));
}

TEST_CASE("report formats") {
  zmt::TestReport r;
  r.source_id = "a\tb";
  r.n = 10;
  r.distinct = 8;
  r.theta_hat = 0.8;
  r.q_hat = 1.5;
  r.diagnostics.reason = "why";
  const auto header = zmt::tsv_header();
  CHECK(header.rfind("source_id\tn\tR_n\ttheta_hat\tq_hat\tomega2\tp_value", 0) == 0);
  const auto row = zmt::tsv_row(r);
  CHECK(row.rfind("a b\t10\t8\t0.8\t1.5\t\t\t", 0) == 0);

  const zmt::TestReport rows[] = {r};
  const auto j = nlohmann::json::parse(zmt::reports_json(rows));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["R_n"] == 8);
  CHECK(j[0]["omega2"].is_null());
  CHECK(j[0]["q_hat"] == 1.5);
  // Field order is checked on the text, since json sorts keys on parse.
  const auto text = zmt::reports_json(rows);
  CHECK(text.find("\"n\"") < text.find("\"R_n\""));
  CHECK(text.find("\"R_n\"") < text.find("\"theta_hat\""));
  CHECK(text.find("\"omega2\"") < text.find("\"p_value\""));

  std::ostringstream csv;
  zmt::BridgePath p;
  p.values = {0.0, 0.5, 0.0};
  zmt::write_bridge_csv(csv, p);
  CHECK(csv.str() == "k,t,a\n0,0,0\n1,0.5,0.5\n2,1,0\n");
  CHECK_THROWS_AS(zmt::parse_output_format("xml"), zmt::Error);
}
