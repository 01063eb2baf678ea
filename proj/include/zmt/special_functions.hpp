#pragma once

namespace zmt {

// zeta(alpha, x) = sum_{i>=0} (i + x)^(-alpha), alpha > 1, x > 0.
// Partial sum plus an Euler-Maclaurin tail; about 1e-14 relative accuracy.
double hurwitz_zeta(double alpha, double x);

// gamma(s, u) = int_0^u z^(s-1) e^(-z) dz for s > 0, u >= 0.
double lower_incomplete_gamma(double s, double u);

// Gamma(s, u) = int_u^inf z^(s-1) e^(-z) dz for s > 0, u >= 0.
double upper_incomplete_gamma(double s, double u);

}  // namespace zmt
