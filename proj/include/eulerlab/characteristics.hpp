#pragma once

#include <limits>
#include <vector>

#include "eulerlab/snapshot.hpp"

namespace eulerlab {

enum class CharFamily { plus, minus };

std::string to_string(CharFamily f);

/// Coefficients and cross-check values sampled along one characteristic.
/// w is filled by riccati_along; w_field is the grid-diagnosed y (plus
/// family) or q (minus family) interpolated onto the path.
struct PathSample {
  double t = 0.0;
  double x = 0.0;
  double c = 0.0;
  double a0 = 0.0;
  double a2 = 0.0;
  double w = std::numeric_limits<double>::quiet_NaN();
  double w_field = 0.0;
  double s_field = 0.0;  // transported invariant (r on minus paths)
};

/// Fraction of the initial oscillation of s that one cell may carry before
/// interpolated coefficients stop being trusted near blowup.
inline constexpr double kResolutionFraction = 0.5;

struct CharPath {
  CharFamily family = CharFamily::plus;
  double x0 = 0.0;
  std::vector<PathSample> samples;
  bool truncated = false;  // exited a non-periodic window
  bool active = true;
  bool trust_frozen = false;
  double last_trusted_t = 0.0;
};

struct PathSeed {
  double x0 = 0.0;
  CharFamily family = CharFamily::plus;
};

/// One seed per compressive local minimum of y (plus) and q (minus), plus
/// uniform_count seeds spread over the window with alternating families.
std::vector<PathSeed> default_seeds(const FieldSnapshot& initial,
                                    int uniform_count = 8);

struct RiccatiIntegration {
  std::vector<double> w;  // aligned with path samples
  bool flagged = false;
  double t_flag = std::numeric_limits<double>::quiet_NaN();
};

/// Integrate dw/dt = a0 - a2 w^2 through the path's coefficient samples
/// (classic 4-stage one-step method, coefficients linear in t between
/// samples). Stops and flags when |w| exceeds cap. Fills samples[i].w.
RiccatiIntegration riccati_along(CharPath& path, double w0, double cap = 1e10);

/// Trapezoid accumulation of a2 along the path up to time T.
double a2_integral(const CharPath& path, double T);

}  // namespace eulerlab
