#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace eulerlab {

/// General barotropic pressure p(tau) with its first three derivatives,
/// admissible when p' < 0 and p'' > 0 on the audit window.
struct GeneralPressureLaw {
  std::function<double(double)> p;
  std::function<double(double)> dp;
  std::function<double(double)> d2p;
  std::function<double(double)> d3p;
  double tau_lo = 1e-2;
  double tau_hi = 1e2;
};

GeneralPressureLaw power_pressure_law(double K, double gamma,
                                      double tau_lo = 1e-2,
                                      double tau_hi = 1e2);

/// p(tau) = sum of coef * tau^expo terms.
GeneralPressureLaw sum_pressure_law(
    const std::vector<std::pair<double, double>>& coef_expo,
    double tau_lo = 1e-2, double tau_hi = 1e2);

/// sqrt(-p'(tau)); throws std::domain_error where p' >= 0.
double gp_sound_speed(const GeneralPressureLaw& law, double tau);

/// Integral of sqrt(-p') from tau to tau_ref (adaptive quadrature,
/// relative tolerance 1e-10). Negative when tau > tau_ref.
double gp_eta(const GeneralPressureLaw& law, double tau, double tau_ref = 1.0);

/// Riccati coefficient p'' / (4 (-p')^(5/4)).
double gp_a(const GeneralPressureLaw& law, double tau);

struct PressureAudit {
  bool monotone_ok = false;
  bool convex_ok = false;
  bool integral_small_tau_divergent = false;
  double integral_small_tau_value = 0.0;  // last partial integral
  bool integral_large_tau_finite = false;
  double integral_large_tau_value = 0.0;
  bool a_min_found = false;
  double a_min = 0.0;
  int bad_samples = 0;  // non-finite derivative evaluations
};

/// Samples the law on a log-spaced window, checks monotonicity/convexity,
/// probes the small-tau and large-tau sound-speed integrals, and reports the
/// smallest A >= 0 with (5+A) p''^2 - 4 p' p''' >= 0 at all samples
/// (a_min_found = false when that would exceed a_cap).
PressureAudit gp_audit(const GeneralPressureLaw& law, int samples = 4096,
                       double a_cap = 1e6);

}  // namespace eulerlab
