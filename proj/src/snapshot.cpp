#include "eulerlab/snapshot.hpp"

#include <cmath>

namespace eulerlab {

namespace {

// Shared tail of both builders: gradient diagnostics from r, s and the
// chained entropy derivative m_x = m S_x / (2 c_v).
void finish_diagnostics(const GasModel& gas, FieldSnapshot& snap) {
  const int n = snap.size();
  snap.sx = spatial_derivative(snap.s, snap.grid);
  snap.rx = spatial_derivative(snap.r, snap.grid);
  const std::vector<double> Sx = spatial_derivative(snap.S, snap.grid);
  snap.y.resize(n);
  snap.q.resize(n);
  for (int i = 0; i < n; ++i) {
    const double m_x = snap.m[i] * Sx[i] / (2.0 * gas.c_v);
    const GradientPair g =
        gradient_vars(gas, snap.eta[i], snap.m[i], m_x, snap.sx[i], snap.rx[i]);
    snap.y[i] = g.y;
    snap.q[i] = g.q;
  }
}

}  // namespace

FieldSnapshot snapshot_from_primitive(const GasModel& gas, const Grid1D& grid,
                                      std::vector<double> tau,
                                      std::vector<double> u,
                                      std::vector<double> S, double t) {
  gas.validate();
  grid.validate();
  const int n = grid.n;
  if (static_cast<int>(tau.size()) != n || static_cast<int>(u.size()) != n ||
      static_cast<int>(S.size()) != n)
    throw std::invalid_argument("snapshot_from_primitive: array length mismatch");

  FieldSnapshot snap;
  snap.t = t;
  snap.grid = grid;
  snap.tau = std::move(tau);
  snap.u = std::move(u);
  snap.S = std::move(S);
  snap.eta.resize(n);
  snap.c.resize(n);
  snap.m.resize(n);
  snap.r.resize(n);
  snap.s.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!(snap.tau[i] > 0.0))
      throw VacuumError("snapshot_from_primitive: tau <= 0 in data");
    snap.m[i] = entropy_weight(gas, snap.S[i]);
    snap.eta[i] = eta_from_tau(gas, snap.tau[i]);
    snap.c[i] = sound_speed(gas, snap.tau[i], snap.S[i]);
    snap.r[i] = snap.u[i] - snap.m[i] * snap.eta[i];
    snap.s[i] = snap.u[i] + snap.m[i] * snap.eta[i];
  }
  finish_diagnostics(gas, snap);
  return snap;
}

FieldSnapshot snapshot_from_riemann(const GasModel& gas, const Grid1D& grid,
                                    const std::vector<double>& r,
                                    const std::vector<double>& s,
                                    const std::vector<double>& m,
                                    std::vector<double> S, double t) {
  const int n = grid.n;
  if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n ||
      static_cast<int>(m.size()) != n || static_cast<int>(S.size()) != n)
    throw std::invalid_argument("snapshot_from_riemann: array length mismatch");

  FieldSnapshot snap;
  snap.t = t;
  snap.grid = grid;
  snap.r = r;
  snap.s = s;
  snap.m = m;
  snap.S = std::move(S);
  snap.tau.resize(n);
  snap.u.resize(n);
  snap.eta.resize(n);
  snap.c.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!(s[i] > r[i]))
      throw VacuumError("snapshot_from_riemann: s <= r (vacuum approach)");
    const double eta = (s[i] - r[i]) / (2.0 * m[i]);
    snap.eta[i] = eta;
    snap.u[i] = 0.5 * (s[i] + r[i]);
    snap.tau[i] = tau_from_eta(gas, eta);
    snap.c[i] = sound_speed(gas, snap.tau[i]) * snap.m[i];
  }
  finish_diagnostics(gas, snap);
  return snap;
}

}  // namespace eulerlab
