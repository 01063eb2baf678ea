#pragma once

#include <functional>
#include <vector>

#include "zmt/occupancy.hpp"

namespace zmt {

struct ThetaBounds {
  double floor = 0.05;
  double cap = 0.95;
};

struct ThetaEstimate {
  double value = 0.0;  // clamped to [floor, cap]
  double raw = 0.0;
  bool clamped = false;
};

ThetaEstimate clamp_theta(double raw, const ThetaBounds& bounds = {});

// theta-hat = log2(R_n / R_{floor(n/2)}), n >= 2.
ThetaEstimate estimate_theta(const WordTrajectory& traj, const ThetaBounds& bounds = {});

// A signed measure dA on (0, 1]: point masses plus an optional density on
// [density_begin, 1]. The estimator is int_0^1 log+ R_[nt] dA(t), valid when
// int log t dA(t) = 1 and the total mass is zero.
struct AFunctional {
  struct Atom {
    double t = 1.0;
    double weight = 0.0;
  };
  std::vector<Atom> atoms;
  std::function<double(double)> density;  // may be empty
  double density_begin = 1.0;

  // atoms at 1/2 and 1 with weights -+1/log 2: reproduces estimate_theta.
  static AFunctional half_step();
  // atoms at t0 and 1 with weights -+1/log(1/t0).
  static AFunctional two_point(double t0);
};

// Throws Error(kConfiguration) unless the normalisation holds within tol.
void validate(const AFunctional& a, double tol = 1e-10);

ThetaEstimate estimate_theta_general(const WordTrajectory& traj, const AFunctional& a,
                                     const ThetaBounds& bounds = {});

}  // namespace zmt
