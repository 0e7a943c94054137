#include "eulerlab/characteristics.hpp"

#include <algorithm>
#include <cmath>

namespace eulerlab {

std::string to_string(CharFamily f) {
  return f == CharFamily::plus ? "plus" : "minus";
}

std::vector<PathSeed> default_seeds(const FieldSnapshot& initial,
                                    int uniform_count) {
  std::vector<PathSeed> seeds;
  const int n = initial.size();
  const bool periodic = initial.grid.boundary == Boundary::periodic;
  auto at = [&](const std::vector<double>& f, int i) {
    return f[(i % n + n) % n];
  };
  auto add_minima = [&](const std::vector<double>& f, CharFamily fam) {
    const int lo = periodic ? 0 : 1;
    const int hi = periodic ? n : n - 1;
    for (int i = lo; i < hi; ++i) {
      if (f[i] < 0.0 && f[i] < at(f, i - 1) && f[i] < at(f, i + 1))
        seeds.push_back(PathSeed{initial.grid.node(i), fam});
    }
  };
  add_minima(initial.y, CharFamily::plus);
  add_minima(initial.q, CharFamily::minus);

  for (int k = 0; k < uniform_count; ++k) {
    const double x = initial.grid.x_min +
                     (k + 0.5) / uniform_count * initial.grid.span();
    seeds.push_back(
        PathSeed{x, k % 2 == 0 ? CharFamily::plus : CharFamily::minus});
  }
  if (seeds.size() > 64) seeds.resize(64);
  return seeds;
}

RiccatiIntegration riccati_along(CharPath& path, double w0, double cap) {
  RiccatiIntegration out;
  out.w.assign(path.samples.size(),
               std::numeric_limits<double>::quiet_NaN());
  if (path.samples.empty()) return out;
  out.w[0] = w0;
  path.samples[0].w = w0;
  double w = w0;
  for (size_t k = 0; k + 1 < path.samples.size(); ++k) {
    const PathSample& a = path.samples[k];
    const PathSample& b = path.samples[k + 1];
    const double h = b.t - a.t;
    auto rhs = [&](double theta, double wv) {
      const double a0 = a.a0 + (b.a0 - a.a0) * theta;
      const double a2 = a.a2 + (b.a2 - a.a2) * theta;
      return a0 - a2 * wv * wv;
    };
    const double k1 = rhs(0.0, w);
    const double k2 = rhs(0.5, w + 0.5 * h * k1);
    const double k3 = rhs(0.5, w + 0.5 * h * k2);
    const double k4 = rhs(1.0, w + h * k3);
    w += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(w) || std::abs(w) > cap) {
      out.flagged = true;
      out.t_flag = b.t;
      break;
    }
    out.w[k + 1] = w;
    path.samples[k + 1].w = w;
  }
  return out;
}

double a2_integral(const CharPath& path, double T) {
  double acc = 0.0;
  for (size_t k = 0; k + 1 < path.samples.size(); ++k) {
    const PathSample& a = path.samples[k];
    const PathSample& b = path.samples[k + 1];
    if (a.t >= T) break;
    if (b.t <= T) {
      acc += 0.5 * (a.a2 + b.a2) * (b.t - a.t);
    } else {
      // Partial last interval, coefficient linear in t.
      const double theta = (T - a.t) / (b.t - a.t);
      const double a2_T = a.a2 + (b.a2 - a.a2) * theta;
      acc += 0.5 * (a.a2 + a2_T) * (T - a.t);
      break;
    }
  }
  return acc;
}

}  // namespace eulerlab
