#pragma once

namespace zmt::closed_forms {

// Generalised hypergeometric series evaluated in 50-digit arithmetic. The
// alternating series at large negative argument lose roughly |z|^(1/2) / ln 10
// digits, which the extra precision absorbs for the small indices used here.
double hyp1f2(double a, double b1, double b2, double z);
double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z);

// a(theta, k, x) = int_0^x t^th sin(pi k t) dt
double a_integral(double theta, int k, double x);
// b(theta, k, x) = int_0^x t^th cos(pi k t) dt
double b_integral(double theta, int k, double x);

// Indices up to which the series path is trusted.
inline constexpr int kMaxIndex = 10;

struct Blocks {
  double A = 0, B = 0, C = 0, D = 0, F = 0, G = 0, H = 0;
};

// The single-index building blocks at frequency k from the series forms.
// Throws Error(kDomain) for k outside 1..kMaxIndex.
Blocks blocks(double theta, int k);

}  // namespace zmt::closed_forms
