#include "eulerlab/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerlab {

void SolverConfig::validate() const {
  if (!(cfl > 0.0) || !(cfl <= 1.0))
    throw std::invalid_argument("SolverConfig: cfl must be in (0, 1]");
  if (!(horizon > 0.0))
    throw std::invalid_argument("SolverConfig: horizon must be > 0");
  if (!(blowup_factor > 10.0))
    throw std::invalid_argument("SolverConfig: blowup_factor must be > 10");
  if (snapshot_cadence < 0)
    throw std::invalid_argument("SolverConfig: snapshot_cadence < 0");
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::horizon_reached: return "horizon-reached";
    case Termination::blowup_detected: return "blowup-detected";
    default: return "step-failure";
  }
}

EvolutionContext make_context(const GasModel& gas, const FieldSnapshot& initial,
                              Interp interp, DensityMonitor density) {
  EvolutionContext ctx;
  ctx.gas = gas;
  ctx.grid = initial.grid;
  ctx.interp = interp;
  ctx.S = initial.S;
  ctx.m = initial.m;
  const std::vector<double> Sx = spatial_derivative(initial.S, initial.grid);
  const std::vector<double> Sxx = spatial_derivative(Sx, initial.grid);
  const int n = initial.size();
  ctx.m_x.resize(n);
  ctx.m_xx.resize(n);
  ctx.source_weight.resize(n);
  for (int i = 0; i < n; ++i) {
    ctx.m_x[i] = ctx.m[i] * Sx[i] / (2.0 * gas.c_v);
    ctx.m_xx[i] = ctx.m_x[i] * Sx[i] / (2.0 * gas.c_v) +
                  ctx.m[i] * Sxx[i] / (2.0 * gas.c_v);
    ctx.source_weight[i] = ctx.m_x[i] / ctx.m[i];
  }
  ctx.density = std::move(density);
  const auto [smin, smax] =
      std::minmax_element(initial.s.begin(), initial.s.end());
  ctx.s0_osc = *smax - *smin;
  const auto [rmin, rmax] =
      std::minmax_element(initial.r.begin(), initial.r.end());
  ctx.r0_osc = *rmax - *rmin;
  return ctx;
}

double cfl_dt(const FieldSnapshot& snap, double cfl) {
  double c_max = 0.0;
  for (double c : snap.c) {
    if (!std::isfinite(c)) return std::numeric_limits<double>::quiet_NaN();
    c_max = std::max(c_max, c);
  }
  if (!(c_max > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return cfl * snap.grid.dx() / c_max;
}

namespace {

bool outside_window(const Grid1D& g, double x) {
  return x < g.x_min || x > g.x_max;
}

long clamp_count(const Grid1D& g, double x) {
  if (g.boundary == Boundary::periodic) return 0;
  return (x < g.x_min || x > g.node(g.n - 1)) ? 1 : 0;
}

}  // namespace

FieldSnapshot step(const EvolutionContext& ctx, const FieldSnapshot& snap,
                   double dt, long* feet_clamped) {
  const int n = snap.size();
  const Grid1D& grid = snap.grid;
  const double inv2g = 1.0 / (2.0 * ctx.gas.gamma);
  long clamped = 0;

  auto probe = [&](const std::vector<double>& f, double x) {
    return interpolate(f, grid, x, ctx.interp);
  };
  // Entropy source (1/(2 gamma)) (c m_x / m) (s - r) at an off-node point of
  // the snapshot `from`.
  auto source_at = [&](const FieldSnapshot& from, double x) {
    const double c = probe(from.c, x);
    const double w = probe(ctx.source_weight, x);
    const double jump = probe(from.s, x) - probe(from.r, x);
    return inv2g * c * w * jump;
  };

  std::vector<double> foot_s(n), foot_r(n), s1(n), r1(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i);
    foot_s[i] = x - snap.c[i] * dt;
    foot_r[i] = x + snap.c[i] * dt;
    clamped += clamp_count(grid, foot_s[i]) + clamp_count(grid, foot_r[i]);
    s1[i] = probe(snap.s, foot_s[i]) + dt * source_at(snap, foot_s[i]);
    r1[i] = probe(snap.r, foot_r[i]) + dt * source_at(snap, foot_r[i]);
  }
  const FieldSnapshot pred = snapshot_from_riemann(ctx.gas, grid, r1, s1,
                                                   snap.m, snap.S,
                                                   snap.t + dt);

  std::vector<double> s2(n), r2(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i);
    const double src_pred = inv2g * pred.c[i] * ctx.source_weight[i] *
                            (pred.s[i] - pred.r[i]);
    const double fs = x - 0.5 * dt * (pred.c[i] + probe(snap.c, foot_s[i]));
    const double fr = x + 0.5 * dt * (pred.c[i] + probe(snap.c, foot_r[i]));
    clamped += clamp_count(grid, fs) + clamp_count(grid, fr);
    s2[i] = probe(snap.s, fs) + 0.5 * dt * (source_at(snap, fs) + src_pred);
    r2[i] = probe(snap.r, fr) + 0.5 * dt * (source_at(snap, fr) + src_pred);
  }
  if (feet_clamped) *feet_clamped += clamped;
  return snapshot_from_riemann(ctx.gas, grid, r2, s2, snap.m, snap.S,
                               snap.t + dt);
}

namespace {

MonitorRecord measure(const EvolutionContext& ctx, const FieldSnapshot& snap,
                      double dt) {
  MonitorRecord rec;
  rec.t = snap.t;
  rec.dt = dt;
  rec.y_max = -std::numeric_limits<double>::infinity();
  rec.q_max = -std::numeric_limits<double>::infinity();
  rec.tau_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < snap.size(); ++i) {
    rec.y_max = std::max(rec.y_max, snap.y[i]);
    rec.q_max = std::max(rec.q_max, snap.q[i]);
    rec.abs_y_max = std::max(rec.abs_y_max, std::abs(snap.y[i]));
    rec.abs_q_max = std::max(rec.abs_q_max, std::abs(snap.q[i]));
    rec.tau_min = std::min(rec.tau_min, snap.tau[i]);
    rec.tau_max = std::max(rec.tau_max, snap.tau[i]);
    rec.s_abs_max = std::max(rec.s_abs_max, std::abs(snap.s[i]));
    rec.r_abs_max = std::max(rec.r_abs_max, std::abs(snap.r[i]));
    rec.u_abs_max = std::max(rec.u_abs_max, std::abs(snap.u[i]));
    rec.c_max = std::max(rec.c_max, snap.c[i]);
    rec.eta_max = std::max(rec.eta_max, snap.eta[i]);
  }
  if (ctx.density.enabled) {
    double margin = std::numeric_limits<double>::infinity();
    const double grow = ctx.density.coeff * ctx.density.Ysum * snap.t;
    for (int i = 0; i < snap.size(); ++i) {
      const double bound =
          std::pow(ctx.density.tau0_pow[i] + grow, 1.0 / ctx.density.power);
      margin = std::min(margin, bound * (1.0 + 1e-6) - snap.tau[i]);
    }
    rec.density_margin = margin;
  }
  return rec;
}

void seed_path_samples(const EvolutionContext& ctx, const FieldSnapshot& snap,
                       CharPath& path) {
  PathSample s;
  s.t = snap.t;
  s.x = path.x0;
  auto probe = [&](const std::vector<double>& f) {
    return interpolate(f, snap.grid, path.x0, ctx.interp);
  };
  s.c = probe(snap.c);
  const double eta = probe(snap.eta);
  const RiccatiCoeffs rc = riccati_coeffs(ctx.gas, eta, probe(ctx.m),
                                          probe(ctx.m_x), probe(ctx.m_xx));
  s.a0 = rc.a0;
  s.a2 = rc.a2;
  const bool plus = path.family == CharFamily::plus;
  s.w_field = plus ? probe(snap.y) : probe(snap.q);
  s.s_field = plus ? probe(snap.s) : probe(snap.r);
  path.samples.push_back(s);
  path.last_trusted_t = snap.t;
}

void advance_paths(const EvolutionContext& ctx, const FieldSnapshot& old_snap,
                   const FieldSnapshot& new_snap, std::vector<CharPath>& paths) {
  const Grid1D& grid = ctx.grid;
  const double dt = new_snap.t - old_snap.t;
  for (CharPath& path : paths) {
    if (!path.active) continue;
    const double sign = path.family == CharFamily::plus ? 1.0 : -1.0;
    const double x = path.samples.back().x;
    const double c0 = interpolate(old_snap.c, grid, x, ctx.interp);
    const double x_pred = x + sign * dt * c0;
    const double c1 = interpolate(new_snap.c, grid, x_pred, ctx.interp);
    double x_new = x + sign * 0.5 * dt * (c0 + c1);
    if (grid.boundary == Boundary::periodic) {
      const double span = grid.span();
      x_new = std::fmod(x_new - grid.x_min, span);
      if (x_new < 0.0) x_new += span;
      x_new += grid.x_min;
    } else if (outside_window(grid, x_new)) {
      path.truncated = true;
      path.active = false;
      continue;
    }

    PathSample s;
    s.t = new_snap.t;
    s.x = x_new;
    auto probe = [&](const std::vector<double>& f) {
      return interpolate(f, grid, x_new, ctx.interp);
    };
    s.c = probe(new_snap.c);
    const double eta = probe(new_snap.eta);
    const RiccatiCoeffs rc = riccati_coeffs(ctx.gas, eta, probe(ctx.m),
                                            probe(ctx.m_x), probe(ctx.m_xx));
    s.a0 = rc.a0;
    s.a2 = rc.a2;
    const bool plus = path.family == CharFamily::plus;
    s.w_field = plus ? probe(new_snap.y) : probe(new_snap.q);
    s.s_field = plus ? probe(new_snap.s) : probe(new_snap.r);
    path.samples.push_back(s);

    if (!path.trust_frozen) {
      const double slope = plus ? probe(new_snap.sx) : probe(new_snap.rx);
      const double osc = plus ? ctx.s0_osc : ctx.r0_osc;
      if (std::abs(slope) * grid.dx() > kResolutionFraction * osc) {
        path.trust_frozen = true;
      } else {
        path.last_trusted_t = new_snap.t;
      }
    }
  }
}

}  // namespace

bool detect_blowup(const std::vector<MonitorRecord>& monitors,
                   const GradientBudget& budget, double blowup_factor,
                   BlowupBracket* bracket) {
  const int k = static_cast<int>(monitors.size()) - 1;
  if (k < 10) return false;
  auto level = [&](int j) {
    return std::max(monitors[j].abs_y_max, monitors[j].abs_q_max);
  };
  if (level(k) < blowup_factor * (1.0 + budget.Ybar + budget.Qbar))
    return false;
  for (int j = k - 9; j <= k; ++j)
    if (!(level(j) > level(j - 1))) return false;
  if (bracket) *bracket = BlowupBracket{monitors[k - 1].t, monitors[k].t};
  return true;
}

RunResult run(const EvolutionContext& ctx, const FieldSnapshot& initial,
              const SolverConfig& config, const GradientBudget& budget,
              const std::vector<PathSeed>& seeds) {
  config.validate();
  const double dt_min =
      config.dt_min > 0.0 ? config.dt_min : 1e-12 * config.horizon;

  RunResult res;
  res.snapshots.push_back(initial);
  res.monitors.push_back(measure(ctx, initial, 0.0));
  for (const PathSeed& seed : seeds) {
    CharPath path;
    path.family = seed.family;
    path.x0 = seed.x0;
    seed_path_samples(ctx, initial, path);
    res.paths.push_back(std::move(path));
  }

  FieldSnapshot cur = initial;
  long step_index = 0;
  bool stored_last = true;
  while (config.horizon - cur.t > dt_min) {
    double dt = cfl_dt(cur, config.cfl);
    if (!std::isfinite(dt)) {
      res.termination = Termination::step_failure;
      res.failure_reason = "non-finite wave speed";
      break;
    }
    dt = std::min(dt, config.horizon - cur.t);
    if (dt < dt_min) {
      res.termination = Termination::step_failure;
      res.failure_reason = "time step under dt_min";
      break;
    }
    FieldSnapshot next;
    try {
      next = step(ctx, cur, dt, &res.feet_clamped);
    } catch (const VacuumError& err) {
      res.termination = Termination::step_failure;
      res.failure_reason = err.what();
      break;
    }
    advance_paths(ctx, cur, next, res.paths);
    ++step_index;
    res.monitors.push_back(measure(ctx, next, dt));
    cur = std::move(next);
    stored_last = false;
    if (config.snapshot_cadence > 0 &&
        step_index % config.snapshot_cadence == 0) {
      res.snapshots.push_back(cur);
      stored_last = true;
    }
    BlowupBracket bracket;
    if (detect_blowup(res.monitors, budget, config.blowup_factor, &bracket)) {
      res.termination = Termination::blowup_detected;
      res.bracket = bracket;
      break;
    }
  }
  if (!stored_last) res.snapshots.push_back(cur);
  return res;
}

}  // namespace eulerlab
