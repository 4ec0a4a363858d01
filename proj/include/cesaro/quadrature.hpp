#pragma once

#include <functional>

namespace cesaro::quad {

using Integrand = std::function<double(double)>;

/// Adaptive Simpson on [a, b] with Richardson correction. The integrand is
/// evaluated only at interior and end points, so a, b must be finite points
/// of continuity.
double adaptive_simpson(const Integrand& f, double a, double b, double abs_tol,
                        int max_depth = 48);

struct OriginIntegral {
  double value = 0.0;
  bool converged = false;
  int shells = 0;         // dyadic shells integrated explicitly
  double tail = 0.0;      // geometric extrapolation of the remaining shells
  double tail_ratio = 0;  // last observed shell ratio
};

// Integral over (0, t] of an integrand that may blow up at the origin.
// (0, t] is split into dyadic shells [t 2^-(j+1), t 2^-j]; each shell is
// integrated by adaptive Simpson and the remainder near 0 is extrapolated
// once consecutive shell ratios agree. A ratio that stays >= 1 marks a
// divergent integral.
OriginIntegral integrate_from_origin(const Integrand& f, double t, double rel_tol = 1e-12,
                                     int max_shells = 4000);

}  // namespace cesaro::quad
