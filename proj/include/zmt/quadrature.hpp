#pragma once

#include <cmath>
#include <vector>

namespace zmt {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <typename F>
  double integrate(const F& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

// Cached rule of the given order (1..128). Thread-safe.
const GaussLegendreRule& gauss_legendre(int order);

// Flattened composite rule: nodes t and weights w with sum w f(t) ~ int f.
struct Panel {
  std::vector<double> t;
  std::vector<double> w;

  std::size_t size() const noexcept { return t.size(); }
};

inline constexpr int kGradedLevels = 48;

// Composite Gauss-Legendre on `cells` equal cells of [a, b]. With
// graded_left the first cell is replaced by geometrically shrinking cells
// [a + h 2^-(j+1), a + h 2^-j], which resolves integrable endpoint behaviour
// like t^theta or t^theta log t at a.
Panel composite_panel(double a, double b, int cells, int order, bool graded_left = false);

// int_a^b f(t) dt where f oscillates like sin(pi k t): cells end at the
// multiples of 1/(2k), i.e. at every zero and extremum of sin and cos.
template <typename F>
double integrate_oscillatory(const F& f, double a, double b, int k, int order = 16,
                             bool graded_left = false) {
  const double step = 0.5 / static_cast<double>(k < 1 ? 1 : k);
  const auto& rule = gauss_legendre(order);
  double sum = 0.0;
  double lo = a;
  bool first = true;
  while (lo < b) {
    double hi = (std::floor(lo / step + 1e-12) + 1.0) * step;
    if (hi > b || b - hi < 1e-14) hi = b;
    if (first && graded_left) {
      double right = hi;
      for (int j = 0; j < kGradedLevels; ++j) {
        const double left = lo + 0.5 * (right - lo);
        sum += rule.integrate(f, left, right);
        right = left;
      }
    } else {
      sum += rule.integrate(f, lo, hi);
    }
    first = false;
    lo = hi;
  }
  return sum;
}

}  // namespace zmt
