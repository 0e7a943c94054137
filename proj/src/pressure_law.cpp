#include "eulerlab/pressure_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace eulerlab {

GeneralPressureLaw power_pressure_law(double K, double gamma, double tau_lo,
                                      double tau_hi) {
  if (!(K > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("power_pressure_law: need K > 0, gamma > 0");
  GeneralPressureLaw law;
  law.p = [=](double t) { return K * std::pow(t, -gamma); };
  law.dp = [=](double t) { return -K * gamma * std::pow(t, -gamma - 1.0); };
  law.d2p = [=](double t) {
    return K * gamma * (gamma + 1.0) * std::pow(t, -gamma - 2.0);
  };
  law.d3p = [=](double t) {
    return -K * gamma * (gamma + 1.0) * (gamma + 2.0) *
           std::pow(t, -gamma - 3.0);
  };
  law.tau_lo = tau_lo;
  law.tau_hi = tau_hi;
  return law;
}

GeneralPressureLaw sum_pressure_law(
    const std::vector<std::pair<double, double>>& coef_expo, double tau_lo,
    double tau_hi) {
  if (coef_expo.empty())
    throw std::invalid_argument("sum_pressure_law: no terms");
  auto deriv = [coef_expo](double t, int order) {
    double acc = 0.0;
    for (const auto& [c, e] : coef_expo) {
      double factor = c;
      double expo = e;
      for (int k = 0; k < order; ++k) {
        factor *= expo;
        expo -= 1.0;
      }
      acc += factor * std::pow(t, expo);
    }
    return acc;
  };
  GeneralPressureLaw law;
  law.p = [deriv](double t) { return deriv(t, 0); };
  law.dp = [deriv](double t) { return deriv(t, 1); };
  law.d2p = [deriv](double t) { return deriv(t, 2); };
  law.d3p = [deriv](double t) { return deriv(t, 3); };
  law.tau_lo = tau_lo;
  law.tau_hi = tau_hi;
  return law;
}

double gp_sound_speed(const GeneralPressureLaw& law, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("gp_sound_speed: tau <= 0");
  const double slope = law.dp(tau);
  if (!(slope < 0.0))
    throw std::domain_error("gp_sound_speed: p' >= 0, law not admissible");
  return std::sqrt(-slope);
}

double gp_eta(const GeneralPressureLaw& law, double tau, double tau_ref) {
  if (!(tau > 0.0) || !(tau_ref > 0.0))
    throw std::invalid_argument("gp_eta: need tau, tau_ref > 0");
  if (tau == tau_ref) return 0.0;
  auto integrand = [&](double t) { return gp_sound_speed(law, t); };
  using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err = 0.0;
  const double lo = std::min(tau, tau_ref);
  const double hi = std::max(tau, tau_ref);
  const double value = quad::integrate(integrand, lo, hi, 12, 1e-10, &err);
  return tau < tau_ref ? value : -value;
}

double gp_a(const GeneralPressureLaw& law, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("gp_a: tau <= 0");
  const double slope = law.dp(tau);
  if (!(slope < 0.0))
    throw std::domain_error("gp_a: p' >= 0, law not admissible");
  return law.d2p(tau) / (4.0 * std::pow(-slope, 1.25));
}

namespace {

// Partial integrals of sqrt(-p') toward an endpoint; divergence shows up as
// non-decaying increments per decade.
struct ProbeResult {
  bool diverges;
  double last_value;
};

ProbeResult probe_integral(const GeneralPressureLaw& law, bool toward_zero) {
  using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  auto integrand = [&](double t) {
    const double slope = law.dp(t);
    return slope < 0.0 ? std::sqrt(-slope) : 0.0;
  };
  std::vector<double> increments;
  double total = 0.0;
  double inner = 1.0;
  for (int k = 1; k <= 7; ++k) {
    const double outer = toward_zero ? std::pow(10.0, -k) : std::pow(10.0, k);
    const double lo = toward_zero ? outer : inner;
    const double hi = toward_zero ? inner : outer;
    double err = 0.0;
    const double part = quad::integrate(integrand, lo, hi, 12, 1e-9, &err);
    increments.push_back(part);
    total += part;
    inner = outer;
  }
  const size_t last = increments.size() - 1;
  const bool decaying = increments[last] < 0.9 * increments[last - 1] &&
                        increments[last - 1] < 0.9 * increments[last - 2];
  return ProbeResult{!decaying, total};
}

}  // namespace

PressureAudit gp_audit(const GeneralPressureLaw& law, int samples,
                       double a_cap) {
  if (!(law.tau_lo > 0.0) || !(law.tau_lo < law.tau_hi))
    throw std::invalid_argument("gp_audit: invalid window");
  if (samples < 2) throw std::invalid_argument("gp_audit: samples < 2");

  PressureAudit audit;
  audit.monotone_ok = true;
  audit.convex_ok = true;
  double worst_a = 0.0;
  const double log_lo = std::log(law.tau_lo);
  const double log_hi = std::log(law.tau_hi);
  for (int i = 0; i < samples; ++i) {
    const double tau =
        std::exp(log_lo + (log_hi - log_lo) * i / (samples - 1.0));
    const double d1 = law.dp(tau);
    const double d2 = law.d2p(tau);
    const double d3 = law.d3p(tau);
    if (!std::isfinite(d1) || !std::isfinite(d2) || !std::isfinite(d3)) {
      ++audit.bad_samples;
      continue;
    }
    if (!(d1 < 0.0)) audit.monotone_ok = false;
    if (!(d2 > 0.0)) audit.convex_ok = false;
    if (d2 != 0.0)
      worst_a = std::max(worst_a, 4.0 * d1 * d3 / (d2 * d2) - 5.0);
  }
  worst_a = std::max(0.0, worst_a);
  audit.a_min_found = worst_a <= a_cap;
  audit.a_min = audit.a_min_found ? worst_a : a_cap;

  const ProbeResult small = probe_integral(law, true);
  audit.integral_small_tau_divergent = small.diverges;
  audit.integral_small_tau_value = small.last_value;
  const ProbeResult large = probe_integral(law, false);
  audit.integral_large_tau_finite = !large.diverges;
  audit.integral_large_tau_value = large.last_value;
  return audit;
}

}  // namespace eulerlab
