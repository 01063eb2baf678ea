#include "zmt/quadrature.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <utility>
#include <numbers>

#include "zmt/error.hpp"

namespace zmt {
namespace {

constexpr int kMaxOrder = 128;

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

GaussLegendreRule make_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorKind::kConfiguration, "Gauss-Legendre order out of range");
  }
  static std::array<std::unique_ptr<GaussLegendreRule>, kMaxOrder + 1> rules;
  static std::array<std::once_flag, kMaxOrder + 1> flags;
  const auto idx = static_cast<std::size_t>(order);
  std::call_once(flags[idx], [&] { rules[idx] = std::make_unique<GaussLegendreRule>(make_rule(order)); });
  return *rules[idx];
}

Panel composite_panel(double a, double b, int cells, int order, bool graded_left) {
  if (cells < 1 || !(b > a)) throw Error(ErrorKind::kConfiguration, "bad composite panel");
  const auto& rule = gauss_legendre(order);
  Panel panel;
  auto add_cell = [&](double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel.t.push_back(mid + half * rule.nodes[i]);
      panel.w.push_back(half * rule.weights[i]);
    }
  };
  const double h = (b - a) / cells;
  for (int c = 0; c < cells; ++c) {
    const double lo = a + c * h;
    const double hi = c + 1 == cells ? b : a + (c + 1) * h;
    if (c == 0 && graded_left) {
      double right = hi;
      for (int j = 0; j < kGradedLevels; ++j) {
        const double left = a + 0.5 * (right - a);
        add_cell(left, right);
        right = left;
      }
    } else {
      add_cell(lo, hi);
    }
  }
  return panel;
}

}  // namespace zmt
