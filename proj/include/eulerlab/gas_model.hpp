#pragma once

#include <vector>

namespace eulerlab {

/// Polytropic gas p = K exp(S/c_v) tau^(-gamma). The isentropic p-system is
/// the same model with S held at zero (entropy weight m = 1), so every
/// operation below serves both regimes.
struct GasModel {
  double gamma = 5.0 / 3.0;  // > 1
  double K = 1.0;            // > 0, pressure scale
  double c_v = 1.0;          // > 0, specific heat

  // Throws std::invalid_argument when outside the admissible ranges.
  void validate() const;

  // 2 sqrt(K gamma) / (gamma - 1), the scale factor of eta(tau).
  double eta_coeff() const;
};

/// Derived positive constants tying tau, p, c to powers of eta.
struct ThermoConstants {
  double K_tau;
  double K_p;
  double K_c;
};

ThermoConstants derive_constants(const GasModel& gas);

/// Lagrangian sound speed sqrt(-p_tau). The two-argument form is the
/// isentropic specialization (S = 0).
double sound_speed(const GasModel& gas, double tau);
double sound_speed(const GasModel& gas, double tau, double S);

/// eta = integral of c/m from tau to infinity; strictly decreasing in tau.
double eta_from_tau(const GasModel& gas, double tau);
double tau_from_eta(const GasModel& gas, double eta);

/// Entropy weight m = exp(S / (2 c_v)).
double entropy_weight(const GasModel& gas, double S);

struct RiemannState {
  double r, s, m;
};
struct PrimitiveState {
  double tau, u;
};

/// r = u - m eta, s = u + m eta. The inverse requires s > r (vacuum guard).
RiemannState riemann_from_primitive(const GasModel& gas, double tau, double u,
                                    double S);
PrimitiveState primitive_from_riemann(const GasModel& gas, double r, double s,
                                      double m);

/// Weight multiplying the Riemann-variable slopes in the scaled gradient
/// variables: m^(-3(3-gamma)/(2(3gamma-1))) eta^((gamma+1)/(2(gamma-1))).
double gradient_weight(const GasModel& gas, double eta, double m);

struct GradientPair {
  double y, q;
};

/// Scaled gradient variables whose blowup marks loss of C^1 regularity.
/// With m = 1, m_x = 0 this reduces to y = eta^((gamma+1)/(2(gamma-1))) s_x.
GradientPair gradient_vars(const GasModel& gas, double eta, double m,
                           double m_x, double s_x, double r_x);

struct RiccatiCoeffs {
  double a0, a2;
};

/// Coefficients of dw/dt = a0 - a2 w^2 along characteristics. a2 > 0 always;
/// a0 vanishes for constant entropy.
RiccatiCoeffs riccati_coeffs(const GasModel& gas, double eta, double m,
                             double m_x, double m_xx);

/// Direct evaluation of the ratio a0/a2 (independent route, used for
/// cross-checks and for the compression threshold).
double a0_over_a2(const GasModel& gas, double eta, double m, double m_x,
                  double m_xx);

/// Exponent theta with (m^theta)'' = 0 characterizing entropy profiles whose
/// stationary states saturate y^2 = a0/a2.
double critical_exponent(double gamma);

}  // namespace eulerlab
