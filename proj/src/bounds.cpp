#include "eulerlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace eulerlab {

std::string to_string(BoundMode m) {
  switch (m) {
    case BoundMode::isentropic: return "isentropic";
    case BoundMode::full_global: return "full-global";
    default: return "full-local";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_blowup: return "certified-blowup";
    case Verdict::threshold_not_met: return "threshold-not-met";
    default: return "bound-violated";
  }
}

double density_growth_coefficient(const GasModel& gas, BoundMode mode,
                                  double M_U) {
  const double g = gas.gamma;
  if (!(g > 1.0 && g < 3.0))
    throw std::domain_error(
        "density bound requires 1 < gamma < 3 (gamma >= 3 admits only an "
        "exponential-in-time bound, not provided)");
  if (mode == BoundMode::isentropic) {
    const ThermoConstants tc = derive_constants(gas);
    return (3.0 - g) / 8.0 * std::pow(gas.K * g, -0.25) * std::sqrt(tc.K_c);
  }
  return (3.0 - g) / 4.0 *
         std::pow(M_U, 3.0 * (3.0 - g) / (2.0 * (3.0 * g - 1.0))) *
         std::pow(gas.eta_coeff(), -(g + 1.0) / (2.0 * (g - 1.0)));
}

DensityBoundParams make_density_params(const GasModel& gas,
                                       const FieldSnapshot& initial,
                                       const GradientBudget& budget,
                                       BoundMode mode, double M_U) {
  DensityBoundParams p;
  p.mode = mode;
  p.gamma = gas.gamma;
  p.coeff = density_growth_coefficient(gas, mode, M_U);
  p.Ysum = mode == BoundMode::isentropic ? budget.Y + budget.Q
                                         : budget.Ybar + budget.Qbar;
  p.tau0 = initial.tau;
  return p;
}

double density_upper_bound(const DensityBoundParams& params, int node,
                           double t) {
  const double g = params.gamma;
  if (!(g > 1.0 && g < 3.0))
    throw std::domain_error("density_upper_bound: requires 1 < gamma < 3");
  const double p = (3.0 - g) / 4.0;
  return std::pow(std::pow(params.tau0.at(node), p) + params.coeff * params.Ysum * t,
                  1.0 / p);
}

DensityMonitor make_density_monitor(const GasModel& gas,
                                    const FieldSnapshot& initial,
                                    const GradientBudget& budget) {
  DensityMonitor mon;
  if (!(gas.gamma > 1.0 && gas.gamma < 3.0)) return mon;
  const auto [s_lo, s_hi] =
      std::minmax_element(initial.S.begin(), initial.S.end());
  const bool isentropic = (*s_hi - *s_lo) <= 1e-13 * std::max(1.0, std::abs(*s_hi));
  const double M_U = *std::max_element(initial.m.begin(), initial.m.end());
  mon.enabled = true;
  mon.coeff = density_growth_coefficient(
      gas, isentropic ? BoundMode::isentropic : BoundMode::full_global, M_U);
  mon.Ysum = isentropic ? budget.Y + budget.Q : budget.Ybar + budget.Qbar;
  mon.power = (3.0 - gas.gamma) / 4.0;
  mon.tau0_pow.resize(initial.size());
  for (int i = 0; i < initial.size(); ++i)
    mon.tau0_pow[i] = std::pow(initial.tau[i], mon.power);
  return mon;
}

double Envelope::integral(double T) const {
  if (E == 0.0) return A / D * T;
  return A / E * std::log1p(E * T / D);
}

Envelope a2_lower_envelope(const GasModel& gas, BoundMode mode,
                           const EnvelopeInputs& in) {
  gas.validate();
  const double g = gas.gamma;
  const ThermoConstants tc = derive_constants(gas);
  const double slope_coeff = tc.K_c * (g + 1.0) / (2.0 * (g - 1.0));
  Envelope env;
  if (mode == BoundMode::isentropic) {
    if (g < 3.0) {
      env.A = (g + 1.0) / 4.0 * std::pow(tc.K_tau, -(g + 1.0) / 4.0);
      env.D = std::pow(in.tau0_ref, (3.0 - g) / 4.0);
      env.E = density_growth_coefficient(gas, mode, 1.0) * in.Ysum;
    } else {
      env.A = slope_coeff * std::pow(in.E_U, (3.0 - g) / (2.0 * (g - 1.0)));
    }
    return env;
  }
  const double m_factor =
      std::pow(in.M_L, 3.0 * (3.0 - g) / (2.0 * (3.0 * g - 1.0)));
  if (g < 3.0) {
    env.A = slope_coeff * m_factor *
            std::pow(gas.eta_coeff(), (3.0 - g) / (2.0 * (g - 1.0)));
    env.D = std::pow(in.tau0_ref, (3.0 - g) / 4.0);
    env.E = density_growth_coefficient(gas, BoundMode::full_global, in.M_U) *
            in.Ysum;
  } else {
    env.A = slope_coeff * m_factor *
            std::pow(in.E_U, (3.0 - g) / (2.0 * (g - 1.0)));
  }
  return env;
}

double riccati_margin_factor(double margin) {
  if (!(margin > 0.0)) return 0.0;
  if (std::isinf(margin)) return 1.0;
  return margin * (2.0 + margin) / ((1.0 + margin) * (1.0 + margin));
}

double blowup_time_upper(const Envelope& envelope, double w0, double factor) {
  const double inf = std::numeric_limits<double>::infinity();
  if (!(w0 < 0.0) || !(factor > 0.0) || !(envelope.A > 0.0)) return inf;
  const double target = -1.0 / w0;
  if (envelope.E == 0.0) return target / (factor * envelope.A / envelope.D);
  const double arg = target * envelope.E / (factor * envelope.A);
  if (arg > 700.0) return inf;  // past double range; effectively unbounded
  return envelope.D / envelope.E * std::expm1(arg);
}

double global_threshold(const GasModel& gas, const EntropyDiagnostics& diag,
                        double E_U) {
  const double g = gas.gamma;
  const double m_ref = g < 3.0 ? diag.M_L : diag.M_U;
  return std::sqrt(2.0 * (g - 1.0) * (g - 1.0) /
                   (g * (g + 1.0) * (3.0 * g - 1.0)) * diag.M3) *
         std::pow(E_U, (3.0 * g - 1.0) / (2.0 * (g - 1.0))) *
         std::pow(m_ref, -3.0 * (3.0 - g) / (2.0 * (3.0 * g - 1.0)));
}

LinftyBounds linfty_bounds(const GasModel& gas, double M_s, double M_r,
                           double V, double M_L, double M_U) {
  if (!(V >= 0.0) || !std::isfinite(V))
    throw std::invalid_argument("linfty_bounds: V must be finite");
  const double g = gas.gamma;
  const double vb = V / (2.0 * g);
  const double amp = vb * std::exp(vb * vb);
  LinftyBounds lb;
  lb.N1 = M_s + vb * M_r + amp * (vb * M_s + vb * vb * M_r);
  lb.N2 = M_r + vb * M_s + amp * (vb * M_r + vb * vb * M_s);
  lb.E_U = 0.5 * (lb.N1 + lb.N2) * std::pow(M_L, 1.0 / (2.0 * g) - 1.0);
  const double mu = std::pow(M_U, 1.0 / (2.0 * g));
  lb.s_bound = lb.N1 * mu;
  lb.r_bound = lb.N2 * mu;
  lb.u_bound = 0.5 * (lb.N1 + lb.N2) * mu;
  return lb;
}

DomainOfDetermination local_domain(const GasModel& gas,
                                   const FieldSnapshot& initial, double alpha,
                                   double beta) {
  const Grid1D& grid = initial.grid;
  if (!(beta - alpha >= 4.0 * grid.dx()))
    throw std::invalid_argument("local_domain: window narrower than 4 dx");
  const double g = gas.gamma;
  int i_lo = static_cast<int>(std::ceil((alpha - grid.x_min) / grid.dx() - 1e-9));
  int i_hi = static_cast<int>(std::floor((beta - grid.x_min) / grid.dx() + 1e-9));
  i_lo = std::max(0, i_lo);
  i_hi = std::min(grid.n - 1, i_hi);
  if (i_hi - i_lo < 4)
    throw std::invalid_argument("local_domain: window holds fewer than 5 nodes");

  DomainOfDetermination dom;
  dom.alpha = alpha;
  dom.beta = beta;
  const EntropyDiagnostics diag = entropy_diagnostics(gas, initial, i_lo, i_hi);
  dom.V_ab = diag.V;
  dom.M3 = diag.M3;
  dom.M_L = diag.M_L;
  dom.M_U = diag.M_U;
  dom.M2 = *std::min_element(initial.tau.begin() + i_lo,
                             initial.tau.begin() + i_hi + 1);
  const LinftyBounds lb =
      linfty_bounds(gas, diag.M_s, diag.M_r, diag.V, diag.M_L, diag.M_U);
  dom.N1_ab = lb.N1;
  dom.N2_ab = lb.N2;
  dom.Etilde_U = lb.E_U;
  dom.T_ab = 0.5 * (beta - alpha) / dom.M_U *
             std::pow(dom.Etilde_U, -(g + 1.0) / (g - 1.0));
  dom.N_ab = global_threshold(gas, diag, dom.Etilde_U);
  dom.isentropic_window = dom.M3 <= 1e-13;

  const ThermoConstants tc = derive_constants(gas);
  const double slope_coeff = tc.K_c * (g + 1.0) / (2.0 * (g - 1.0));
  const double m_factor =
      std::pow(dom.M_L, 3.0 * (3.0 - g) / (2.0 * (3.0 * g - 1.0)));
  dom.K7 = slope_coeff * m_factor *
           std::pow(gas.eta_coeff(), (3.0 - g) / (2.0 * (g - 1.0)));
  dom.K8 = slope_coeff * m_factor *
           std::pow(dom.Etilde_U, (3.0 - g) / (2.0 * (g - 1.0)));
  double sup_y = -std::numeric_limits<double>::infinity();
  double sup_q = sup_y;
  for (int i = i_lo; i <= i_hi; ++i) {
    sup_y = std::max(sup_y, initial.y[i]);
    sup_q = std::max(sup_q, initial.q[i]);
  }
  dom.Ytilde = std::max(dom.N_ab, sup_y);
  dom.Qtilde = std::max(dom.N_ab, sup_q);
  if (g < 3.0) {
    const double K6t = density_growth_coefficient(gas, BoundMode::full_global,
                                                  dom.M_U);
    const double m2_pow = std::pow(dom.M2, (g - 3.0) / 4.0);
    dom.K9 = K6t * (dom.Ytilde + dom.Qtilde) * m2_pow;
    dom.K10 = dom.K7 * m2_pow;
  }
  if (dom.isentropic_window) {
    dom.B_ab = std::numeric_limits<double>::infinity();
  } else if (g >= 3.0) {
    dom.B_ab = 1.0 / (dom.K8 * dom.N_ab * dom.T_ab);
  } else {
    dom.B_ab =
        1.0 / (dom.K10 / dom.K9 * dom.N_ab * std::log1p(dom.K9 * dom.T_ab));
  }
  return dom;
}

bool b_margin_feasible(const DomainOfDetermination& dom, double B) {
  if (dom.isentropic_window || !(B > 0.0)) return false;
  const double lhs = B * (2.0 + B) / (1.0 + B);
  // dom.B_ab stores the reciprocal compression budget of the window.
  return lhs >= dom.B_ab;
}

namespace {

double min_of(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}
double max_of(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end());
}

bool entropy_constant(const FieldSnapshot& snap) {
  const double lo = min_of(snap.S), hi = max_of(snap.S);
  return hi - lo <= 1e-13 * std::max(1.0, std::abs(hi));
}

}  // namespace

BlowupCertificate certify(const GasModel& gas, const FieldSnapshot& initial,
                          BoundMode mode,
                          std::optional<std::pair<double, double>> window) {
  gas.validate();
  BlowupCertificate cert;
  cert.mode = mode;
  cert.rarefactive = classify_initial(initial).rarefactive_everywhere;

  if (mode == BoundMode::isentropic) {
    if (!entropy_constant(initial))
      throw std::invalid_argument(
          "certify: isentropic mode on non-constant entropy data");
    cert.w0 = std::min(min_of(initial.y), min_of(initial.q));
    cert.threshold = 0.0;
    if (!(cert.w0 < 0.0)) {
      cert.verdict = Verdict::threshold_not_met;
      cert.note = "nowhere-compressive data: global classical solution";
      return cert;
    }
    const GradientBudget budget = gradient_budget(initial, 0.0);
    EnvelopeInputs in;
    in.tau0_ref = max_of(initial.tau);
    in.Ysum = budget.Y + budget.Q;
    in.E_U = 0.5 * (max_of(initial.s) - min_of(initial.r));
    cert.envelope = a2_lower_envelope(gas, mode, in);
    cert.factor = 1.0;
    cert.margin = std::numeric_limits<double>::infinity();
    cert.T_ub = blowup_time_upper(cert.envelope, cert.w0, cert.factor);
    cert.verdict = Verdict::certified_blowup;
    return cert;
  }

  if (mode == BoundMode::full_global) {
    const EntropyDiagnostics diag = entropy_diagnostics(gas, initial);
    const LinftyBounds lb =
        linfty_bounds(gas, diag.M_s, diag.M_r, diag.V, diag.M_L, diag.M_U);
    cert.N = global_threshold(gas, diag, lb.E_U);
    cert.threshold = cert.N;
    cert.w0 = std::min(min_of(initial.y), min_of(initial.q));
    if (!(cert.w0 < -cert.N)) {
      cert.verdict = Verdict::threshold_not_met;
      return cert;
    }
    const GradientBudget budget = gradient_budget(initial, cert.N);
    EnvelopeInputs in;
    in.tau0_ref = max_of(initial.tau);
    in.Ysum = budget.Ybar + budget.Qbar;
    in.M_L = diag.M_L;
    in.M_U = diag.M_U;
    in.E_U = lb.E_U;
    cert.envelope = a2_lower_envelope(gas, mode, in);
    cert.margin = cert.N > 0.0 ? -cert.w0 / cert.N - 1.0
                               : std::numeric_limits<double>::infinity();
    cert.factor = riccati_margin_factor(cert.margin);
    cert.T_ub = blowup_time_upper(cert.envelope, cert.w0, cert.factor);
    cert.verdict = Verdict::certified_blowup;
    return cert;
  }

  if (!window)
    throw std::invalid_argument("certify: full_local mode needs a window");
  const DomainOfDetermination dom =
      local_domain(gas, initial, window->first, window->second);
  cert.T_ab = dom.T_ab;
  cert.N = dom.N_ab;
  cert.B = dom.B_ab;
  const Grid1D& grid = initial.grid;
  int i_lo = std::max(
      0, static_cast<int>(std::ceil((window->first - grid.x_min) / grid.dx() -
                                    1e-9)));
  int i_hi = std::min(
      grid.n - 1,
      static_cast<int>(std::floor((window->second - grid.x_min) / grid.dx() +
                                  1e-9)));
  double w0 = std::numeric_limits<double>::infinity();
  for (int i = i_lo; i <= i_hi; ++i)
    w0 = std::min({w0, initial.y[i], initial.q[i]});
  cert.w0 = w0;
  if (dom.isentropic_window) {
    cert.verdict = Verdict::threshold_not_met;
    cert.note = "isentropic window: use the isentropic certificate";
    return cert;
  }
  cert.threshold = dom.N_ab * (1.0 + dom.B_ab);
  if (!(cert.w0 < -cert.threshold)) {
    cert.verdict = Verdict::threshold_not_met;
    return cert;
  }
  cert.margin = dom.B_ab;
  cert.factor = riccati_margin_factor(dom.B_ab);
  if (gas.gamma >= 3.0) {
    cert.envelope = Envelope{dom.K8, 1.0, 0.0};
  } else {
    cert.envelope = Envelope{dom.K10, 1.0, dom.K9};
  }
  cert.T_ub = blowup_time_upper(cert.envelope, cert.w0, cert.factor);
  cert.verdict = Verdict::certified_blowup;
  return cert;
}

void reconcile(BlowupCertificate& cert, const RunResult& run, double tol_frac) {
  cert.bracket = run.bracket;
  const double t_end = run.monitors.empty() ? 0.0 : run.monitors.back().t;
  if (cert.verdict == Verdict::certified_blowup) {
    if (run.termination == Termination::blowup_detected && run.bracket) {
      const double width = run.bracket->t_hi - run.bracket->t_lo;
      if (run.bracket->t_hi > cert.T_ub + width + tol_frac * cert.T_ub)
        cert.verdict = Verdict::bound_violated;
    } else if (run.termination == Termination::horizon_reached) {
      if (t_end >= cert.T_ub * (1.0 + tol_frac))
        cert.verdict = Verdict::bound_violated;
      else
        cert.note = "run horizon below certified bound; inconclusive";
    } else {
      cert.note = "run ended in step failure before the certified time";
    }
    return;
  }
  if (cert.verdict == Verdict::threshold_not_met &&
      run.termination == Termination::blowup_detected) {
    if (cert.mode == BoundMode::isentropic && cert.rarefactive)
      cert.verdict = Verdict::bound_violated;
    else
      cert.note = "blowup without certified hypothesis (threshold one-sided)";
  }
}

namespace {

CheckResult budget_check(const std::string& name,
                         const std::vector<MonitorRecord>& monitors,
                         double cap, double eps, double MonitorRecord::*field) {
  CheckResult res;
  res.name = name;
  res.margin = std::numeric_limits<double>::infinity();
  for (const MonitorRecord& rec : monitors) {
    const double margin = cap + eps - rec.*field;
    if (margin < res.margin) {
      res.margin = margin;
      res.t_worst = rec.t;
    }
  }
  res.pass = res.margin >= 0.0;
  return res;
}

}  // namespace

MonitorReport verify_run(const RunResult& run, const GradientBudget& budget,
                         const VerifyOptions& opts) {
  MonitorReport report;
  const auto& mon = run.monitors;
  report.checks.push_back(budget_check("y-below-budget", mon, budget.Ybar,
                                       opts.eps, &MonitorRecord::y_max));
  report.checks.push_back(budget_check("q-below-budget", mon, budget.Qbar,
                                       opts.eps, &MonitorRecord::q_max));

  bool any_density = false;
  CheckResult density;
  density.name = "density-below-bound";
  density.margin = std::numeric_limits<double>::infinity();
  for (const MonitorRecord& rec : mon) {
    if (std::isnan(rec.density_margin)) continue;
    any_density = true;
    if (rec.density_margin < density.margin) {
      density.margin = rec.density_margin;
      density.t_worst = rec.t;
    }
  }
  if (any_density) {
    density.margin += opts.eps;
    density.pass = density.margin >= 0.0;
    report.checks.push_back(density);
  }

  if (opts.linf) {
    report.checks.push_back(budget_check("s-linf-bound", mon,
                                         opts.linf->s_bound, opts.eps,
                                         &MonitorRecord::s_abs_max));
    report.checks.push_back(budget_check("r-linf-bound", mon,
                                         opts.linf->r_bound, opts.eps,
                                         &MonitorRecord::r_abs_max));
    report.checks.push_back(budget_check("u-linf-bound", mon,
                                         opts.linf->u_bound, opts.eps,
                                         &MonitorRecord::u_abs_max));
    report.checks.push_back(budget_check("eta-linf-bound", mon,
                                         opts.linf->E_U, opts.eps,
                                         &MonitorRecord::eta_max));
  }

  if (run.snapshots.size() >= 2) {
    CheckResult frozen;
    frozen.name = "entropy-frozen";
    const auto& first = run.snapshots.front().S;
    const auto& last = run.snapshots.back().S;
    frozen.pass = first.size() == last.size() &&
                  std::memcmp(first.data(), last.data(),
                              first.size() * sizeof(double)) == 0;
    frozen.margin = frozen.pass ? 0.0 : -1.0;
    frozen.t_worst = run.snapshots.back().t;
    report.checks.push_back(frozen);
  }

  if (opts.check_linear_tau_growth && mon.size() >= 8) {
    // Least-squares line through the tail half of max tau; R^2 >= 0.99
    // certifies at-most-linear growth.
    const size_t start = mon.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double count = static_cast<double>(mon.size() - start);
    for (size_t j = start; j < mon.size(); ++j) {
      sx += mon[j].t;
      sy += mon[j].tau_max;
      sxx += mon[j].t * mon[j].t;
      sxy += mon[j].t * mon[j].tau_max;
    }
    const double denom = count * sxx - sx * sx;
    const double slope = denom != 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
    const double intercept = (sy - slope * sx) / count;
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / count;
    for (size_t j = start; j < mon.size(); ++j) {
      const double fit = intercept + slope * mon[j].t;
      ss_res += (mon[j].tau_max - fit) * (mon[j].tau_max - fit);
      ss_tot += (mon[j].tau_max - mean) * (mon[j].tau_max - mean);
    }
    CheckResult linear;
    linear.name = "tau-growth-linear";
    const double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    linear.margin = r2 - 0.99;
    linear.pass = linear.margin >= 0.0;
    linear.t_worst = mon.back().t;
    report.checks.push_back(linear);
  }

  for (const CheckResult& c : report.checks) report.all_pass &= c.pass;
  return report;
}

}  // namespace eulerlab
