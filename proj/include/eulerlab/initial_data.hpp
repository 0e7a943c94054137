#pragma once

#include <functional>
#include <vector>

#include "eulerlab/snapshot.hpp"

namespace eulerlab {

using Profile = std::function<double(double)>;

struct SampledInitial {
  FieldSnapshot snapshot;
  double M1;  // C^1 magnitude proxy of (tau0, u0) plus C^2 proxy of S0
  double M2;  // min tau0
};

/// Sample initial profiles onto the grid and build the t = 0 snapshot.
/// Rejects data with tau0 <= tau_floor anywhere (vacuum in data).
SampledInitial sample_initial(const GasModel& gas, const Grid1D& grid,
                              const Profile& tau0, const Profile& u0,
                              const Profile& S0, double tau_floor = 0.0);

struct GradientBudget {
  double Y;     // max(0, sup y(x,0))
  double Q;     // max(0, sup q(x,0))
  double N;     // critical compression threshold (0 in isentropic mode)
  double Ybar;  // max(N, sup y(x,0))
  double Qbar;  // max(N, sup q(x,0))
};

GradientBudget gradient_budget(const FieldSnapshot& initial, double N = 0.0);

struct CompressivePoint {
  int index;
  double x;
  double s_x;
  double r_x;
};

struct Classification {
  bool rarefactive_everywhere = true;
  std::vector<CompressivePoint> compressive;
};

/// Nodes where s_x < 0 or r_x < 0 (ties at exactly zero count rarefactive).
Classification classify_initial(const FieldSnapshot& initial);

struct EntropyDiagnostics {
  std::vector<double> b;  // S_xx - S_x^2 / (c_v (3 gamma - 1))
  double M3;              // sup |m m_xx - (3g+1)/(3g-1) m_x^2|
  double V;               // total variation of S/(2 c_v) on the window
  double M_L, M_U;        // min / max of m
  double M_s, M_r;        // sup |s0|, sup |r0|
};

/// Diagnostics over a node window [i_lo, i_hi] (inclusive).
EntropyDiagnostics entropy_diagnostics(const GasModel& gas,
                                       const FieldSnapshot& snap, int i_lo,
                                       int i_hi);
EntropyDiagnostics entropy_diagnostics(const GasModel& gas,
                                       const FieldSnapshot& snap);

/// u = 0, tau = K_tauS exp(S/(gamma c_v)): spatially constant pressure,
/// stationary in time.
FieldSnapshot stationary_solution(const GasModel& gas, const Profile& S,
                                  double K_tauS, const Grid1D& grid);

struct CriticalFamily {
  FieldSnapshot snapshot;
  std::vector<double> y_closed_form;  // analytic y(x) = -q(x)
  double theta;
  double max_mismatch;  // sup |y^2 - a0/a2| (analytic derivatives)
};

/// Stationary data built from (m^theta)(x) = slope x + offset, which
/// saturates y(x)^2 = (a0/a2)(x) pointwise. `amplify` scales the entropy
/// profile (amplify = 1 is the exactly-critical family).
CriticalFamily critical_family(const GasModel& gas, double slope,
                               double offset, const Grid1D& grid,
                               double K_tauS = 1.0, double amplify = 1.0);

}  // namespace eulerlab
