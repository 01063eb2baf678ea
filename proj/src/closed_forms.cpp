#include "zmt/closed_forms.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <initializer_list>
#include <string>

#include "zmt/error.hpp"

namespace zmt::closed_forms {
namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

constexpr int kMaxTerms = 2000;

Real pfq(std::initializer_list<Real> num, std::initializer_list<Real> den, const Real& z) {
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real term = 1;
  Real sum = 1;
  for (int m = 0; m < kMaxTerms; ++m) {
    for (const auto& a : num) term *= a + m;
    for (const auto& b : den) term /= b + m;
    term *= z / (m + 1);
    sum += term;
    if (term == 0 || (m > 4 && abs(term) < eps * abs(sum))) return sum;
  }
  throw Error(ErrorKind::kNumerical, "hypergeometric series did not converge");
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real a_hp(const Real& theta, int k, const Real& x) {
  const Real pk = pi() * k;
  return pk * pow(x, theta + 2) *
         pfq({theta / 2 + 1}, {Real(1.5), theta / 2 + 2}, -pk * pk * x * x / 4) / (theta + 2);
}

Real b_hp(const Real& theta, int k, const Real& x) {
  const Real pk = pi() * k;
  return pow(x, theta + 1) *
         pfq({theta / 2 + Real(0.5)}, {Real(0.5), theta / 2 + Real(1.5)}, -pk * pk * x * x / 4) /
         (theta + 1);
}

}  // namespace

double hyp1f2(double a, double b1, double b2, double z) {
  return static_cast<double>(pfq({Real(a)}, {Real(b1), Real(b2)}, Real(z)));
}

double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z) {
  return static_cast<double>(pfq({Real(a1), Real(a2)}, {Real(b1), Real(b2), Real(b3)}, Real(z)));
}

double a_integral(double theta, int k, double x) {
  return static_cast<double>(a_hp(Real(theta), k, Real(x)));
}

double b_integral(double theta, int k, double x) {
  return static_cast<double>(b_hp(Real(theta), k, Real(x)));
}

Blocks blocks(double theta_d, int k) {
  if (k < 1 || k > kMaxIndex) {
    throw Error(ErrorKind::kDomain,
                "series building blocks are limited to 1 <= k <= " + std::to_string(kMaxIndex));
  }
  const Real theta = theta_d;
  const Real one = 1, two = 2, half = Real(1) / 2, three_half = Real(3) / 2;
  const Real pk = pi() * k;
  const int parity = k % 2 == 0 ? 1 : -1;
  // cos(pi k / 2) and sin(pi k / 2) are exact integers.
  const int cos_half = k % 4 == 0 ? 1 : (k % 4 == 2 ? -1 : 0);
  const int sin_half = k % 4 == 1 ? 1 : (k % 4 == 3 ? -1 : 0);

  const Real a1 = a_hp(theta, k, one);
  const Real a2 = a_hp(theta, k, two);
  const Real b1 = b_hp(theta, k, one);
  const Real b2 = b_hp(theta, k, two);
  const Real c1 = b_hp(theta + 1, k, one);
  const Real c2 = b_hp(theta + 1, k, two);

  Blocks out;
  const Real A = a1;
  const Real B = a2 - a1;
  out.A = static_cast<double>(A);
  out.B = static_cast<double>(B);
  out.C = static_cast<double>(c1);
  out.D = static_cast<double>(2 * (b2 - b1) - (c2 - c1));
  out.F = static_cast<double>(parity * B + Real(parity - 1) / pk);
  const Real tp2 = theta / 2 + 1;
  out.G = static_cast<double>(-pk * pfq({tp2, tp2}, {three_half, tp2 + 1, tp2 + 1}, -pk * pk / 4) /
                              ((theta + 2) * (theta + 2)));
  const Real ah = a_hp(theta, k, half);
  const Real H = cos_half * (a_hp(theta, k, three_half) - ah) -
                 sin_half * (b_hp(theta, k, three_half) - b_hp(theta, k, half)) +
                 Real(cos_half - 1) * pow(two, -theta) / pk - A + ah;
  out.H = static_cast<double>(H);
  return out;
}

}  // namespace zmt::closed_forms
