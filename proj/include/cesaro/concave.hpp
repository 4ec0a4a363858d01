#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cesaro {

enum class Domain { half_line, unit_interval };

/// A knot (t, phi(t)) of a piecewise-linear concave function.
struct Knot {
  double t;
  double value;
};

/// Increasing concave function on [0, inf) or [0, 1].
///
/// Three families are supported: t^alpha (0 < alpha <= 1), a + b*t, and
/// piecewise-linear interpolation of knots. Piecewise-linear functions
/// start at (0, 0) and continue past the last knot with `tail_slope`
/// (0 by default, i.e. constant). Construction validates monotonicity and
/// concavity, so every instance is a genuine increasing concave function.
class ConcaveFn {
 public:
  enum class Kind { power, affine, piecewise_linear };

  static ConcaveFn power(double alpha, Domain domain = Domain::half_line);
  /// phi(t) = intercept + slope * t; affine(1, 0) is the constant 1.
  static ConcaveFn affine(double intercept, double slope, Domain domain = Domain::half_line);
  static ConcaveFn piecewise_linear(std::vector<Knot> knots, double tail_slope = 0.0,
                                    Domain domain = Domain::half_line);

  double operator()(double t) const { return eval(t); }
  double eval(double t) const;

  /// Right derivative at t (for t = 0 may be +inf).
  double slope(double t) const;

  /// phi(0+). Nonzero only for affine functions with a positive intercept;
  /// Lorentz-type integrals treat that intercept as an atom of d(phi) at 0.
  double value_at_zero_plus() const;

  /// Inverse of the increasing part: the smallest t with phi(t) >= y.
  double inverse(double y) const;

  bool bounded() const;
  /// lim_{t->inf} phi(t) (or phi(1) on the unit interval).
  double supremum() const;

  Kind kind() const { return kind_; }
  Domain domain() const { return domain_; }
  double alpha() const { return alpha_; }
  double affine_slope() const { return a_; }
  double affine_intercept() const { return b_; }
  const std::vector<Knot>& knots() const { return knots_; }
  double tail_slope() const { return tail_slope_; }
  /// Right end of the domain (inf or 1).
  double domain_end() const;
  std::string describe() const;

 private:
  ConcaveFn() = default;
  void check_domain(double t) const;

  Kind kind_ = Kind::power;
  Domain domain_ = Domain::half_line;
  double alpha_ = 1.0;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<Knot> knots_;
  double tail_slope_ = 0.0;
};

/// How psi(0) was obtained.
enum class OriginRule {
  right_limit,  // psi(0) = lim_{t->0+} t/phi(t)
  convention,   // limit not informative; 0 by convention
};

/// psi(t) = t / phi(t), the fundamental function of the Koethe dual.
class Conjugate {
 public:
  explicit Conjugate(ConcaveFn phi);
  double operator()(double t) const { return eval(t); }
  double eval(double t) const;
  double at_zero() const { return at_zero_; }
  OriginRule origin_rule() const { return rule_; }
  const ConcaveFn& base() const { return phi_; }

 private:
  ConcaveFn phi_;
  double at_zero_ = 0.0;
  OriginRule rule_ = OriginRule::right_limit;
};

Conjugate psi(const ConcaveFn& phi);

/// Which t range enters sup_t phi(st)/phi(t).
enum class DilationVariant {
  full,      // all t > 0
  zero,      // 0 < t <= min(1, 1/s)
  infinity,  // t >= max(1, 1/s)
};

/// Geometric grid lo * 2^(k / per_octave) up to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int per_octave);

/// Default t-grid used for dilation functions: 2^-30 .. 2^30, 4 per octave.
const std::vector<double>& default_t_grid();

/// max over the grid of phi(s t) / phi(t). Grid points where s*t or t leaves
/// the domain (or the variant's range) are skipped.
double dilation_function(const ConcaveFn& phi, double s, const std::vector<double>& t_grid,
                         DilationVariant variant = DilationVariant::full);

struct IndexEstimate {
  double p_lower = 0.0;
  double q_upper = 0.0;
  // Richardson-style two-point extrapolation in 1/ln(s); informational.
  double p_extrapolated = 0.0;
  double q_extrapolated = 0.0;
  std::vector<std::pair<double, double>> p_samples;  // (s, ln phibar / ln s)
  std::vector<std::pair<double, double>> q_samples;
  std::string grid_spec;
};

/// Samples ln(phibar(s))/ln(s) for s in [2^-20, 2^-4] (p) and [2^4, 2^20] (q)
/// and reports the values at the extreme s. Functions on [0,1] use the
/// restricted dilation function phibar^0.
IndexEstimate estimate_indices(const ConcaveFn& phi);
IndexEstimate estimate_indices(const ConcaveFn& phi, DilationVariant variant);

struct QCheck {
  bool holds = false;
  double best_C = 0.0;     // sup_t phi(t)/t * int_0^t ds/phi(s); +inf if divergent
  double refined_C = 0.0;  // same sup on the grid refined by midpoints
  bool stable = false;
  bool divergent = false;
};

/// Grid check of int_0^t ds/phi(s) <= C t/phi(t).
QCheck check_q_less_one(const ConcaveFn& phi, const std::vector<double>& t_grid);
QCheck check_q_less_one(const ConcaveFn& phi);

/// Parse the `#concave v1` two-column text format.
ConcaveFn load_concave(std::istream& in);
ConcaveFn load_concave_file(const std::string& path);

}  // namespace cesaro
