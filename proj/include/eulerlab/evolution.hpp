#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerlab/characteristics.hpp"
#include "eulerlab/initial_data.hpp"
#include "eulerlab/interpolation.hpp"
#include "eulerlab/snapshot.hpp"

namespace eulerlab {

struct SolverConfig {
  double cfl = 0.5;            // in (0, 1]
  double horizon = 1.0;        // final time T
  int snapshot_cadence = 0;    // steps between stored snapshots (0: ends only)
  double blowup_factor = 1e4;  // must be > 10
  double dt_min = 0.0;         // 0: defaults to 1e-12 * horizon
  Interp interpolation = Interp::monotone_cubic;

  void validate() const;
};

/// Per-node specific-volume ceiling [tau0^power + coeff*Ysum*t]^(1/power),
/// monitored every step when enabled (1 < gamma < 3 only).
struct DensityMonitor {
  bool enabled = false;
  double coeff = 0.0;  // bound growth constant
  double Ysum = 0.0;
  double power = 0.0;  // (3 - gamma) / 4
  std::vector<double> tau0_pow;
};

enum class Termination { horizon_reached, blowup_detected, step_failure };

std::string to_string(Termination t);

struct MonitorRecord {
  double t = 0.0;
  double dt = 0.0;
  double y_max = 0.0;
  double q_max = 0.0;
  double abs_y_max = 0.0;
  double abs_q_max = 0.0;
  double tau_min = 0.0;
  double tau_max = 0.0;
  double s_abs_max = 0.0;
  double r_abs_max = 0.0;
  double u_abs_max = 0.0;
  double c_max = 0.0;
  double eta_max = 0.0;
  // min over x of bound*(1 + 1e-6) - tau; NaN when monitoring is off.
  double density_margin = std::numeric_limits<double>::quiet_NaN();
};

struct BlowupBracket {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

struct RunResult {
  std::vector<FieldSnapshot> snapshots;  // time-ordered, first and last always
  std::vector<MonitorRecord> monitors;   // one per step plus the initial state
  Termination termination = Termination::horizon_reached;
  std::optional<BlowupBracket> bracket;
  std::string failure_reason;
  std::vector<CharPath> paths;
  long feet_clamped = 0;
};

/// Frozen-in-time data shared by every step of a run: the entropy weight and
/// its analytic derivatives (chained through grid derivatives of S).
struct EvolutionContext {
  GasModel gas;
  Grid1D grid;
  Interp interp = Interp::monotone_cubic;
  std::vector<double> S, m, m_x, m_xx;
  std::vector<double> source_weight;  // m_x / m
  DensityMonitor density;
  double s0_osc = 0.0;
  double r0_osc = 0.0;
};

EvolutionContext make_context(const GasModel& gas, const FieldSnapshot& initial,
                              Interp interp, DensityMonitor density = {});

/// dt = cfl * dx / max c. Returns NaN when wave speeds are not finite.
double cfl_dt(const FieldSnapshot& snap, double cfl);

/// Two-stage characteristic semi-Lagrangian update of (r, s); m is never
/// advected. Throws VacuumError when the updated state reaches s <= r.
FieldSnapshot step(const EvolutionContext& ctx, const FieldSnapshot& snap,
                   double dt, long* feet_clamped = nullptr);

/// Blowup is declared when max(|y|, |q|) >= blowup_factor * (1 + Ybar + Qbar)
/// after increasing monotonically over the last 10 steps.
bool detect_blowup(const std::vector<MonitorRecord>& monitors,
                   const GradientBudget& budget, double blowup_factor,
                   BlowupBracket* bracket);

/// Advance until the horizon, detected blowup, or step failure; monitors
/// every step, stores snapshots at the cadence, and drags seeded
/// characteristic paths along with the run.
RunResult run(const EvolutionContext& ctx, const FieldSnapshot& initial,
              const SolverConfig& config, const GradientBudget& budget,
              const std::vector<PathSeed>& seeds = {});

}  // namespace eulerlab
