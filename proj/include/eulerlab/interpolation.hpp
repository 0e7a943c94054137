#pragma once

#include <vector>

#include "eulerlab/grid.hpp"

namespace eulerlab {

enum class Interp { linear, monotone_cubic };

/// Interpolate nodal values at an arbitrary point. The monotone-cubic mode
/// is a Hermite interpolant with harmonic-mean slope limiting, so it creates
/// no new extrema between nodes. Queries outside a constant-extension window
/// clamp to the boundary value; periodic queries wrap.
double interpolate(const std::vector<double>& f, const Grid1D& grid, double x,
                   Interp kind);

/// Monotone cubic resample on arbitrary strictly increasing abscissae
/// (tabulated initial data). Queries outside [xs.front(), xs.back()] clamp.
std::vector<double> pchip_resample(const std::vector<double>& xs,
                                   const std::vector<double>& fs,
                                   const std::vector<double>& xq);

}  // namespace eulerlab
