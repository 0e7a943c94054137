#include "eulerlab/gas_model.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerlab {

namespace {
void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
}
}  // namespace

void GasModel::validate() const {
  if (!(gamma > 1.0))
    throw std::invalid_argument("GasModel: gamma must be > 1");
  require_positive(K, "GasModel: K");
  require_positive(c_v, "GasModel: c_v");
}

double GasModel::eta_coeff() const {
  return 2.0 * std::sqrt(K * gamma) / (gamma - 1.0);
}

ThermoConstants derive_constants(const GasModel& gas) {
  gas.validate();
  const double g = gas.gamma;
  const double K_tau = std::pow(gas.eta_coeff(), 2.0 / (g - 1.0));
  return ThermoConstants{
      K_tau,
      gas.K * std::pow(K_tau, -g),
      std::sqrt(gas.K * g) * std::pow(K_tau, -(g + 1.0) / 2.0),
  };
}

double sound_speed(const GasModel& gas, double tau) {
  return sound_speed(gas, tau, 0.0);
}

double sound_speed(const GasModel& gas, double tau, double S) {
  require_positive(tau, "sound_speed: tau");
  return std::sqrt(gas.K * gas.gamma) *
         std::pow(tau, -(gas.gamma + 1.0) / 2.0) * entropy_weight(gas, S);
}

double eta_from_tau(const GasModel& gas, double tau) {
  require_positive(tau, "eta_from_tau: tau");
  return gas.eta_coeff() * std::pow(tau, -(gas.gamma - 1.0) / 2.0);
}

double tau_from_eta(const GasModel& gas, double eta) {
  require_positive(eta, "tau_from_eta: eta");
  return std::pow(eta / gas.eta_coeff(), -2.0 / (gas.gamma - 1.0));
}

double entropy_weight(const GasModel& gas, double S) {
  return std::exp(S / (2.0 * gas.c_v));
}

RiemannState riemann_from_primitive(const GasModel& gas, double tau, double u,
                                    double S) {
  const double m = entropy_weight(gas, S);
  const double eta = eta_from_tau(gas, tau);
  return RiemannState{u - m * eta, u + m * eta, m};
}

PrimitiveState primitive_from_riemann(const GasModel& gas, double r, double s,
                                      double m) {
  require_positive(m, "primitive_from_riemann: m");
  if (!(s > r))
    throw std::domain_error(
        "primitive_from_riemann: s <= r (vacuum-adjacent state)");
  const double eta = (s - r) / (2.0 * m);
  return PrimitiveState{tau_from_eta(gas, eta), 0.5 * (s + r)};
}

double gradient_weight(const GasModel& gas, double eta, double m) {
  const double g = gas.gamma;
  const double em = 3.0 * (3.0 - g) / (2.0 * (3.0 * g - 1.0));
  const double p = (g + 1.0) / (2.0 * (g - 1.0));
  return std::pow(m, -em) * std::pow(eta, p);
}

GradientPair gradient_vars(const GasModel& gas, double eta, double m,
                           double m_x, double s_x, double r_x) {
  require_positive(eta, "gradient_vars: eta");
  require_positive(m, "gradient_vars: m");
  const double w = gradient_weight(gas, eta, m);
  const double corr = 2.0 / (3.0 * gas.gamma - 1.0) * m_x * eta;
  return GradientPair{w * (s_x - corr), w * (r_x + corr)};
}

RiccatiCoeffs riccati_coeffs(const GasModel& gas, double eta, double m,
                             double m_x, double m_xx) {
  require_positive(eta, "riccati_coeffs: eta");
  require_positive(m, "riccati_coeffs: m");
  const double g = gas.gamma;
  const ThermoConstants tc = derive_constants(gas);
  const double em = 3.0 * (3.0 - g) / (2.0 * (3.0 * g - 1.0));
  const double curvature =
      m * m_xx - (3.0 * g + 1.0) / (3.0 * g - 1.0) * m_x * m_x;
  const double a0 = tc.K_c / g * (g - 1.0) / (3.0 * g - 1.0) * curvature *
                    std::pow(m, -em) *
                    std::pow(eta, 3.0 * (g + 1.0) / (2.0 * (g - 1.0)) + 1.0);
  const double a2 = tc.K_c * (g + 1.0) / (2.0 * (g - 1.0)) * std::pow(m, em) *
                    std::pow(eta, (3.0 - g) / (2.0 * (g - 1.0)));
  return RiccatiCoeffs{a0, a2};
}

double a0_over_a2(const GasModel& gas, double eta, double m, double m_x,
                  double m_xx) {
  const double g = gas.gamma;
  const double curvature =
      m * m_xx - (3.0 * g + 1.0) / (3.0 * g - 1.0) * m_x * m_x;
  return 2.0 * (g - 1.0) * (g - 1.0) / (g * (g + 1.0) * (3.0 * g - 1.0)) *
         curvature * std::pow(eta, (3.0 * g - 1.0) / (g - 1.0)) *
         std::pow(m, -3.0 * (3.0 - g) / (3.0 * g - 1.0));
}

double critical_exponent(double gamma) {
  return 1.0 - (6.0 * gamma * gamma + 3.0 * gamma + 1.0) /
                   (2.0 * gamma * (3.0 * gamma - 1.0));
}

}  // namespace eulerlab
