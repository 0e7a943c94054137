#pragma once

#include <stdexcept>
#include <vector>

#include "eulerlab/gas_model.hpp"
#include "eulerlab/grid.hpp"

namespace eulerlab {

struct VacuumError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Gridded state at one time. S (and the entropy weight m) is frozen in
/// time; every other array is derived consistently from (tau, u, S) or
/// (r, s, m) via the gas-model transforms.
struct FieldSnapshot {
  double t = 0.0;
  Grid1D grid;
  std::vector<double> tau, u, S;
  std::vector<double> eta, c, m, r, s;
  std::vector<double> sx, rx;  // grid derivatives of r, s (diagnostic inputs)
  std::vector<double> y, q;    // scaled gradient diagnostics

  int size() const { return grid.n; }
};

/// Build a snapshot from primitive fields. Throws VacuumError when tau <= 0
/// anywhere.
FieldSnapshot snapshot_from_primitive(const GasModel& gas, const Grid1D& grid,
                                      std::vector<double> tau,
                                      std::vector<double> u,
                                      std::vector<double> S, double t = 0.0);

/// Build a snapshot from Riemann variables (m, S frozen arrays are copied
/// through verbatim). Throws VacuumError when s <= r anywhere.
FieldSnapshot snapshot_from_riemann(const GasModel& gas, const Grid1D& grid,
                                    const std::vector<double>& r,
                                    const std::vector<double>& s,
                                    const std::vector<double>& m,
                                    std::vector<double> S, double t);

}  // namespace eulerlab
