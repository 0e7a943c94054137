#include "eulerlab/grid.hpp"

#include <stdexcept>

namespace eulerlab {

std::string to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "constant-extension";
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = node(i);
  return xs;
}

void Grid1D::validate() const {
  if (!(x_min < x_max))
    throw std::invalid_argument("Grid1D: x_min must be < x_max");
  if (n < 16) throw std::invalid_argument("Grid1D: n must be >= 16");
}

std::vector<double> spatial_derivative(const std::vector<double>& f,
                                       const Grid1D& grid) {
  const int n = grid.n;
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("spatial_derivative: array length != grid.n");
  const double h = grid.dx();
  std::vector<double> d(n);

  auto centered = [&](int i, auto at) {
    return (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) /
           (12.0 * h);
  };

  if (grid.boundary == Boundary::periodic) {
    auto at = [&](int i) { return f[(i % n + n) % n]; };
    for (int i = 0; i < n; ++i) d[i] = centered(i, at);
    return d;
  }

  // Constant extension: one-sided 5-point stencils at the edges.
  auto at = [&](int i) { return f[i]; };
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) /
         (12.0 * h);
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) /
         (12.0 * h);
  for (int i = 2; i < n - 2; ++i) d[i] = centered(i, at);
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] +
              6.0 * f[n - 4] - f[n - 5]) /
             (12.0 * h);
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] -
              16.0 * f[n - 4] + 3.0 * f[n - 5]) /
             (12.0 * h);
  return d;
}

}  // namespace eulerlab
