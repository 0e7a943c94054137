#include "eulerlab/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerlab {

namespace {
double sup_abs(const std::vector<double>& v, int lo, int hi) {
  double m = 0.0;
  for (int i = lo; i <= hi; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}
}  // namespace

SampledInitial sample_initial(const GasModel& gas, const Grid1D& grid,
                              const Profile& tau0, const Profile& u0,
                              const Profile& S0, double tau_floor) {
  gas.validate();
  grid.validate();
  const int n = grid.n;
  std::vector<double> tau(n), u(n), S(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i);
    tau[i] = tau0(x);
    u[i] = u0(x);
    S[i] = S0(x);
    if (!(tau[i] > tau_floor) || !(tau[i] > 0.0))
      throw VacuumError("sample_initial: tau0 at or below the positive floor");
  }
  const std::vector<double> taux = spatial_derivative(tau, grid);
  const std::vector<double> ux = spatial_derivative(u, grid);
  const std::vector<double> Sx = spatial_derivative(S, grid);
  const std::vector<double> Sxx = spatial_derivative(Sx, grid);

  SampledInitial out{snapshot_from_primitive(gas, grid, std::move(tau),
                                             std::move(u), std::move(S)),
                     0.0, 0.0};
  const int hi = n - 1;
  out.M1 = std::max({sup_abs(out.snapshot.tau, 0, hi),
                     sup_abs(out.snapshot.u, 0, hi), sup_abs(taux, 0, hi),
                     sup_abs(ux, 0, hi), sup_abs(out.snapshot.S, 0, hi),
                     sup_abs(Sx, 0, hi), sup_abs(Sxx, 0, hi)});
  out.M2 = *std::min_element(out.snapshot.tau.begin(), out.snapshot.tau.end());
  return out;
}

GradientBudget gradient_budget(const FieldSnapshot& initial, double N) {
  const double sup_y =
      *std::max_element(initial.y.begin(), initial.y.end());
  const double sup_q =
      *std::max_element(initial.q.begin(), initial.q.end());
  GradientBudget b;
  b.Y = std::max(0.0, sup_y);
  b.Q = std::max(0.0, sup_q);
  b.N = N;
  b.Ybar = std::max(N, sup_y);
  b.Qbar = std::max(N, sup_q);
  return b;
}

Classification classify_initial(const FieldSnapshot& initial) {
  Classification cls;
  for (int i = 0; i < initial.size(); ++i) {
    if (initial.sx[i] < 0.0 || initial.rx[i] < 0.0) {
      cls.rarefactive_everywhere = false;
      cls.compressive.push_back(CompressivePoint{
          i, initial.grid.node(i), initial.sx[i], initial.rx[i]});
    }
  }
  return cls;
}

EntropyDiagnostics entropy_diagnostics(const GasModel& gas,
                                       const FieldSnapshot& snap, int i_lo,
                                       int i_hi) {
  if (i_lo < 0 || i_hi >= snap.size() || i_lo > i_hi)
    throw std::invalid_argument("entropy_diagnostics: bad node window");
  const double g = gas.gamma;
  const std::vector<double> Sx = spatial_derivative(snap.S, snap.grid);
  const std::vector<double> Sxx = spatial_derivative(Sx, snap.grid);

  EntropyDiagnostics d;
  d.b.resize(i_hi - i_lo + 1);
  d.M3 = 0.0;
  for (int i = i_lo; i <= i_hi; ++i) {
    d.b[i - i_lo] =
        Sxx[i] - Sx[i] * Sx[i] / (gas.c_v * (3.0 * g - 1.0));
    const double m = snap.m[i];
    const double m_x = m * Sx[i] / (2.0 * gas.c_v);
    const double m_xx =
        m_x * Sx[i] / (2.0 * gas.c_v) + m * Sxx[i] / (2.0 * gas.c_v);
    d.M3 = std::max(d.M3, std::abs(m * m_xx -
                                   (3.0 * g + 1.0) / (3.0 * g - 1.0) * m_x *
                                       m_x));
  }
  d.V = 0.0;
  const double h = snap.grid.dx();
  for (int i = i_lo; i < i_hi; ++i)
    d.V += 0.5 * (std::abs(Sx[i]) + std::abs(Sx[i + 1])) * h;
  d.V /= 2.0 * gas.c_v;
  d.M_L = *std::min_element(snap.m.begin() + i_lo, snap.m.begin() + i_hi + 1);
  d.M_U = *std::max_element(snap.m.begin() + i_lo, snap.m.begin() + i_hi + 1);
  d.M_s = sup_abs(snap.s, i_lo, i_hi);
  d.M_r = sup_abs(snap.r, i_lo, i_hi);
  return d;
}

EntropyDiagnostics entropy_diagnostics(const GasModel& gas,
                                       const FieldSnapshot& snap) {
  return entropy_diagnostics(gas, snap, 0, snap.size() - 1);
}

FieldSnapshot stationary_solution(const GasModel& gas, const Profile& S,
                                  double K_tauS, const Grid1D& grid) {
  if (!(K_tauS > 0.0))
    throw std::invalid_argument("stationary_solution: K_tauS <= 0");
  auto tau0 = [&](double x) {
    return K_tauS * std::exp(S(x) / (gas.gamma * gas.c_v));
  };
  auto u0 = [](double) { return 0.0; };
  return sample_initial(gas, grid, tau0, u0, S).snapshot;
}

CriticalFamily critical_family(const GasModel& gas, double slope,
                               double offset, const Grid1D& grid,
                               double K_tauS, double amplify) {
  gas.validate();
  grid.validate();
  const double g = gas.gamma;
  const double theta = critical_exponent(g);
  for (int i = 0; i < grid.n; ++i) {
    if (!(slope * grid.node(i) + offset > 0.0))
      throw std::invalid_argument(
          "critical_family: m^theta must stay positive on the window");
  }
  // S = amplify * 2 c_v ln m with m = (slope x + offset)^(1/theta).
  auto S = [&](double x) {
    return amplify * 2.0 * gas.c_v / theta * std::log(slope * x + offset);
  };
  CriticalFamily fam;
  fam.theta = theta;
  fam.snapshot = stationary_solution(gas, S, K_tauS, grid);

  const int n = grid.n;
  fam.y_closed_form.resize(n);
  fam.max_mismatch = 0.0;
  const double a = amplify / theta;  // effective entropy weight is gpow^a
  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i);
    const double gpow = slope * x + offset;
    const double m = std::pow(gpow, a);
    const double m_x = a * std::pow(gpow, a - 1.0) * slope;
    const double m_xx = a * (a - 1.0) * std::pow(gpow, a - 2.0) * slope * slope;
    const double tau = K_tauS * std::pow(m, 2.0 / g);
    const double eta = eta_from_tau(gas, tau);
    fam.y_closed_form[i] = (g - 1.0) / (g * (3.0 * g - 1.0)) * m_x *
                           std::pow(m, 3.0 * (g - 3.0) / (2.0 * (3.0 * g - 1.0))) *
                           std::pow(eta, (3.0 * g - 1.0) / (2.0 * (g - 1.0)));
    const double ratio = a0_over_a2(gas, eta, m, m_x, m_xx);
    fam.max_mismatch = std::max(
        fam.max_mismatch,
        std::abs(fam.y_closed_form[i] * fam.y_closed_form[i] - ratio));
  }
  return fam;
}

}  // namespace eulerlab
