#include "eulerlab/interpolation.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerlab {

namespace {

double limited_slope(double dl, double dr) {
  if (dl * dr <= 0.0) return 0.0;
  return 2.0 * dl * dr / (dl + dr);
}

double hermite(double fl, double fr, double dl, double dr, double h,
               double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * fl + (t3 - 2.0 * t2 + t) * h * dl +
         (-2.0 * t3 + 3.0 * t2) * fr + (t3 - t2) * h * dr;
}

}  // namespace

double interpolate(const std::vector<double>& f, const Grid1D& grid, double x,
                   Interp kind) {
  const int n = grid.n;
  const double h = grid.dx();
  double u = (x - grid.x_min) / h;

  if (grid.boundary == Boundary::periodic) {
    u = std::fmod(u, static_cast<double>(n));
    if (u < 0.0) u += n;
    const int i = std::min(static_cast<int>(u), n - 1);
    const double t = u - i;
    auto at = [&](int j) { return f[(j % n + n) % n]; };
    if (kind == Interp::linear) return (1.0 - t) * at(i) + t * at(i + 1);
    const double dm = at(i) - at(i - 1);
    const double d0 = at(i + 1) - at(i);
    const double dp = at(i + 2) - at(i + 1);
    return hermite(at(i), at(i + 1), limited_slope(dm, d0) / h,
                   limited_slope(d0, dp) / h, h, t);
  }

  // Constant extension: clamp to the window, boundary value outside.
  if (u <= 0.0) return f.front();
  if (u >= n - 1) return f.back();
  const int i = static_cast<int>(u);
  const double t = u - i;
  auto at = [&](int j) { return f[std::max(0, std::min(n - 1, j))]; };
  if (kind == Interp::linear) return (1.0 - t) * at(i) + t * at(i + 1);
  const double dm = at(i) - at(i - 1);
  const double d0 = at(i + 1) - at(i);
  const double dp = at(i + 2) - at(i + 1);
  return hermite(at(i), at(i + 1), limited_slope(dm, d0) / h,
                 limited_slope(d0, dp) / h, h, t);
}

std::vector<double> pchip_resample(const std::vector<double>& xs,
                                   const std::vector<double>& fs,
                                   const std::vector<double>& xq) {
  const int n = static_cast<int>(xs.size());
  if (n < 2 || fs.size() != xs.size())
    throw std::invalid_argument("pchip_resample: need >= 2 matching samples");
  for (int i = 0; i + 1 < n; ++i)
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument(
          "pchip_resample: abscissae must be strictly increasing");

  std::vector<double> delta(n - 1), d(n, 0.0);
  for (int i = 0; i + 1 < n; ++i)
    delta[i] = (fs[i + 1] - fs[i]) / (xs[i + 1] - xs[i]);
  for (int i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] > 0.0) {
      const double w1 = 2.0 * (xs[i + 1] - xs[i]) + (xs[i] - xs[i - 1]);
      const double w2 = (xs[i + 1] - xs[i]) + 2.0 * (xs[i] - xs[i - 1]);
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // One-sided ends, limited to preserve monotonicity.
  auto end_slope = [](double h0, double h1, double del0, double del1) {
    double s = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if (s * del0 <= 0.0) return 0.0;
    if (del0 * del1 < 0.0 && std::abs(s) > 3.0 * std::abs(del0))
      return 3.0 * del0;
    return s;
  };
  if (n == 2) {
    d[0] = d[1] = delta[0];
  } else {
    d[0] = end_slope(xs[1] - xs[0], xs[2] - xs[1], delta[0], delta[1]);
    d[n - 1] = end_slope(xs[n - 1] - xs[n - 2], xs[n - 2] - xs[n - 3],
                         delta[n - 2], delta[n - 3]);
  }

  std::vector<double> out(xq.size());
  for (size_t k = 0; k < xq.size(); ++k) {
    double x = xq[k];
    if (x <= xs.front()) {
      out[k] = fs.front();
      continue;
    }
    if (x >= xs.back()) {
      out[k] = fs.back();
      continue;
    }
    int lo = 0, hi = n - 1;
    while (hi - lo > 1) {
      int mid = (lo + hi) / 2;
      (xs[mid] <= x ? lo : hi) = mid;
    }
    const double h = xs[lo + 1] - xs[lo];
    out[k] = hermite(fs[lo], fs[lo + 1], d[lo], d[lo + 1], h, (x - xs[lo]) / h);
  }
  return out;
}

}  // namespace eulerlab
