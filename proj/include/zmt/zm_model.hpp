#pragma once

#include <cstdint>
#include <vector>

namespace zmt {

inline constexpr int kDefaultHeadTerms = 1000;

// Zipf-Mandelbrot law p_i = c (i + q)^(-alpha), alpha = 1/theta,
// c = 1 / zeta(alpha, q + 1).
struct ZMParams {
  double theta = 0.5;
  double q = 0.0;
  double alpha = 2.0;
  double c = 0.0;

  // Validates 0 < theta < 1 and q > -1 and computes alpha and c.
  static ZMParams make(double theta, double q);
};

double zm_probability(const ZMParams& params, std::int64_t i);

// Expected number of distinct words r(k) among k draws. The first head_terms
// dictionary entries are summed exactly; the remainder is replaced by its
// integral, which reduces to a lower incomplete gamma function.
class ExpectedDistinct {
 public:
  explicit ExpectedDistinct(const ZMParams& params, int head_terms = kDefaultHeadTerms);

  double operator()(std::int64_t k) const;

  const ZMParams& params() const noexcept { return params_; }
  int head_terms() const noexcept { return static_cast<int>(log1m_p_.size()); }

 private:
  ZMParams params_;
  std::vector<double> log1m_p_;  // log(1 - p_i), i = 1..head_terms
  double tail_start_ = 0.0;      // N = head_terms + 0.5 + q
  double tail_rate_ = 0.0;       // c N^(-alpha)
  double gamma_s_ = 0.0;         // 1 - theta
};

double expected_distinct(const ZMParams& params, std::int64_t k,
                         int head_terms = kDefaultHeadTerms);

// r(0..n). Parallel over k.
std::vector<double> expected_distinct_curve(const ZMParams& params, std::int64_t n,
                                            int head_terms = kDefaultHeadTerms);

struct ShiftFit {
  double q = 0.0;
  double residual = 0.0;  // r(n; theta, q) - R_n at the returned q
};

inline constexpr double kShiftLow = -0.9;
inline constexpr double kShiftHigh = 40.0;
inline constexpr int kShiftIterations = 20;

// Solves r(n; theta_hat, q) = R_n for q by 20 bisections of [-0.9, 40] and
// returns the final midpoint. The orientation of the bracket is read from the
// endpoint residuals. Throws ShiftOutOfRange when they share a sign.
ShiftFit fit_shift(double theta_hat, std::int64_t n, std::int64_t distinct,
                   int head_terms = kDefaultHeadTerms);

namespace reference {

// Serial r(0..n), one independent expected_distinct() call per k.
std::vector<double> expected_distinct_curve(const ZMParams& params, std::int64_t n,
                                            int head_terms = kDefaultHeadTerms);

}  // namespace reference

}  // namespace zmt
