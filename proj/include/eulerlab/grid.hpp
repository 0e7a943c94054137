#pragma once

#include <string>
#include <vector>

namespace eulerlab {

enum class Boundary { periodic, constant_extension };

std::string to_string(Boundary b);

/// Uniform 1D grid over [x_min, x_max) with n nodes at cell left edges.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n = 16;
  Boundary boundary = Boundary::periodic;

  double dx() const { return (x_max - x_min) / n; }
  double node(int i) const { return x_min + i * dx(); }
  double span() const { return x_max - x_min; }
  std::vector<double> nodes() const;

  // Throws std::invalid_argument on x_min >= x_max or n < 16.
  void validate() const;
};

/// First derivative with 4th-order stencils: centered in the interior
/// (periodic wrap), 5-point one-sided near constant-extension boundaries.
/// Exact for cubics.
std::vector<double> spatial_derivative(const std::vector<double>& f,
                                       const Grid1D& grid);

}  // namespace eulerlab
