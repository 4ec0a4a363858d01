#include "cesaro/quadrature.hpp"

#include <cmath>
#include <limits>

#include "cesaro/errors.hpp"

namespace cesaro::quad {
namespace {

double simpson_step(const Integrand& f, double a, double fa, double m, double fm, double b,
                    double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // The second test stops at the rounding floor of the local estimate;
  // below it the halved tolerances only chase noise.
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol ||
      std::fabs(delta) <= 64.0 * std::numeric_limits<double>::epsilon() * (std::fabs(left) + std::fabs(right))) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const Integrand& f, double a, double b, double abs_tol, int max_depth) {
  if (!(b > a)) {
    return 0.0;
  }
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, m, fm, b, fb, whole, abs_tol, max_depth);
}

OriginIntegral integrate_from_origin(const Integrand& f, double t, double rel_tol,
                                     int max_shells) {
  if (!(t > 0.0)) {
    throw DomainError("integrate_from_origin: t must be positive");
  }
  OriginIntegral out;
  double sum = 0.0;
  double prev = -1.0;
  double prev_ratio = -1.0;
  int growing = 0;
  double hi = t;
  for (int j = 0; j < max_shells; ++j) {
    const double lo = 0.5 * hi;
    // Shell integrals are computed to a tolerance relative to the shell
    // scale so tiny shells near the origin keep full relative accuracy.
    const double scale = std::fabs(f(0.75 * hi)) * (hi - lo);
    const double shell = adaptive_simpson(f, lo, hi, std::max(scale * 1e-14, 1e-300));
    sum += shell;
    out.shells = j + 1;
    hi = lo;
    if (!std::isfinite(sum)) {
      out.value = sum;
      return out;
    }
    if (prev > 0.0) {
      const double ratio = shell / prev;
      out.tail_ratio = ratio;
      if (ratio >= 1.0 - 1e-12) {
        // Non-decaying shells: the integral diverges at the origin.
        if (++growing >= 8) {
          out.value = INFINITY;
          return out;
        }
      } else {
        growing = 0;
      }
      if (ratio < 1.0 - 1e-12 && prev_ratio > 0.0 &&
          std::fabs(ratio - prev_ratio) <= 1e-10 * ratio) {
        out.tail = shell * ratio / (1.0 - ratio);
        out.value = sum + out.tail;
        out.converged = true;
        return out;
      }
      prev_ratio = ratio;
    }
    if (shell == 0.0 || std::fabs(shell) <= rel_tol * 1e-3 * std::fabs(sum)) {
      out.value = sum;
      out.converged = true;
      return out;
    }
    prev = shell;
  }
  out.value = sum;
  return out;
}

}  // namespace cesaro::quad
