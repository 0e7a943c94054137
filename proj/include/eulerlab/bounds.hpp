#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerlab/evolution.hpp"
#include "eulerlab/initial_data.hpp"

namespace eulerlab {

enum class BoundMode { isentropic, full_global, full_local };

std::string to_string(BoundMode m);

/// Inputs of the specific-volume ceiling
/// [tau0^((3-g)/4) + coeff * Ysum * t]^(4/(3-g)); only valid for 1 < g < 3.
struct DensityBoundParams {
  BoundMode mode = BoundMode::isentropic;
  double gamma = 0.0;
  double coeff = 0.0;
  double Ysum = 0.0;
  std::vector<double> tau0;
};

/// Growth constant of the ceiling; throws std::domain_error for gamma >= 3
/// (only an exponential-in-time bound is available there, not implemented).
double density_growth_coefficient(const GasModel& gas, BoundMode mode,
                                  double M_U);

DensityBoundParams make_density_params(const GasModel& gas,
                                       const FieldSnapshot& initial,
                                       const GradientBudget& budget,
                                       BoundMode mode, double M_U);

double density_upper_bound(const DensityBoundParams& params, int node,
                           double t);

/// Per-step monitor version for the evolution loop. Disabled when gamma >= 3
/// or the bound does not apply.
DensityMonitor make_density_monitor(const GasModel& gas,
                                    const FieldSnapshot& initial,
                                    const GradientBudget& budget);

/// Lower bound a2 >= A / (D + E t) along every characteristic (E = 0 gives a
/// constant floor).
struct Envelope {
  double A = 0.0;
  double D = 1.0;
  double E = 0.0;
  double value(double t) const { return A / (D + E * t); }
  double integral(double T) const;
};

struct EnvelopeInputs {
  double tau0_ref = 1.0;  // sup of tau0 over the relevant window
  double Ysum = 0.0;      // Y+Q (isentropic) or Ybar+Qbar (full)
  double M_L = 1.0;
  double M_U = 1.0;
  double E_U = 1.0;  // eta ceiling
};

Envelope a2_lower_envelope(const GasModel& gas, BoundMode mode,
                           const EnvelopeInputs& in);

/// margin (2 + margin) / (1 + margin)^2, the contraction factor of the
/// comparison argument; tends to 1 as margin -> infinity.
double riccati_margin_factor(double margin);

/// Smallest T with factor * integral_0^T envelope = -1/w0 (w0 < 0).
/// Returns +infinity when no finite root exists.
double blowup_time_upper(const Envelope& envelope, double w0, double factor);

/// Critical compression threshold N; zero for constant entropy.
double global_threshold(const GasModel& gas, const EntropyDiagnostics& diag,
                        double E_U);

struct LinftyBounds {
  double N1, N2, E_U;
  double s_bound, r_bound, u_bound;
};

LinftyBounds linfty_bounds(const GasModel& gas, double M_s, double M_r,
                           double V, double M_L, double M_U);

struct DomainOfDetermination {
  double alpha = 0.0, beta = 0.0;
  double V_ab = 0.0, N1_ab = 0.0, N2_ab = 0.0, Etilde_U = 0.0;
  double T_ab = 0.0;  // lower bound on the closing time of the domain
  double N_ab = 0.0;
  double K7 = 0.0, K8 = 0.0, K9 = 0.0, K10 = 0.0;
  double B_ab = 0.0;
  double M2 = 0.0, M3 = 0.0, M_L = 0.0, M_U = 0.0;
  double Ytilde = 0.0, Qtilde = 0.0;
  bool isentropic_window = false;  // M3 == 0: no local threshold machinery
};

/// Window diagnostics and constants for the local certificate. Rejects
/// windows narrower than 4 dx.
DomainOfDetermination local_domain(const GasModel& gas,
                                   const FieldSnapshot& initial, double alpha,
                                   double beta);

/// General feasibility inequality for a candidate margin constant:
/// B(2+B)/(1+B) at least the reciprocal compression budget of the window
/// (the stored B_ab is the equality choice and always feasible).
bool b_margin_feasible(const DomainOfDetermination& dom, double B);

enum class Verdict { certified_blowup, threshold_not_met, bound_violated };

std::string to_string(Verdict v);

struct BlowupCertificate {
  BoundMode mode = BoundMode::isentropic;
  double w0 = 0.0;         // most negative initial y or q
  double threshold = 0.0;  // 0, N, or N_ab (1 + B_ab)
  double margin = 0.0;     // epsilon or B
  double factor = 1.0;
  double T_ub = 0.0;
  double N = 0.0;
  double B = 0.0;
  std::optional<double> T_ab;
  std::optional<BlowupBracket> bracket;
  Verdict verdict = Verdict::threshold_not_met;
  bool rarefactive = false;
  std::string note;
  Envelope envelope;
};

/// Assemble the certificate from initial data alone (full_local requires a
/// window). Hypothesis failure is the threshold_not_met verdict, not an
/// error.
BlowupCertificate certify(const GasModel& gas, const FieldSnapshot& initial,
                          BoundMode mode,
                          std::optional<std::pair<double, double>> window = {});

/// Attach the numeric bracket of a completed run and settle the verdict.
/// Tolerance for bracket <= T_ub: bracket width + tol_frac * T_ub.
void reconcile(BlowupCertificate& cert, const RunResult& run,
               double tol_frac = 0.02);

struct CheckResult {
  std::string name;
  bool pass = false;
  double margin = 0.0;
  double t_worst = 0.0;
};

struct MonitorReport {
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

struct VerifyOptions {
  double eps = 1e-6;  // scheme-error allowance
  const LinftyBounds* linf = nullptr;
  bool check_linear_tau_growth = false;
};

/// Per-bound pass/fail with worst margins over the whole run.
MonitorReport verify_run(const RunResult& run, const GradientBudget& budget,
                         const VerifyOptions& opts = {});

}  // namespace eulerlab
