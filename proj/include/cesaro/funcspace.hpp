#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/concave.hpp"

namespace cesaro {

enum class FnDomain { unit, half_line };

/// Default truncation length for functions on [0, inf).
inline constexpr double kDefaultLength = 65536.0;

/// Right-open step function: value values[j] on [x_j, x_{j+1}), zero from
/// the last breakpoint on. Breakpoints start at 0 and end at or before the
/// domain end (1 on the unit interval, L on the truncated half-line).
class StepFn {
 public:
  StepFn(std::vector<double> breakpoints, std::vector<double> values,
         FnDomain domain = FnDomain::unit, double length = kDefaultLength);

  /// c * chi_[a, b).
  static StepFn indicator(double a, double b, double c = 1.0, FnDomain domain = FnDomain::unit,
                          double length = kDefaultLength);
  static StepFn zero(FnDomain domain = FnDomain::unit, double length = kDefaultLength);

  const std::vector<double>& breakpoints() const { return x_; }
  const std::vector<double>& values() const { return c_; }
  std::size_t cells() const { return c_.size(); }
  FnDomain domain() const { return domain_; }
  /// 1 or L.
  double domain_end() const;
  double length() const { return length_; }
  /// Last breakpoint; the function vanishes beyond it.
  double support_end() const { return x_.back(); }

  double eval(double x) const;
  double integral_abs() const;
  /// Same function on the union of its grid and `extra` (points outside
  /// [0, support_end] are ignored).
  StepFn refined(const std::vector<double>& extra) const;
  StepFn abs() const;
  std::string describe() const;

 private:
  std::vector<double> x_;
  std::vector<double> c_;
  FnDomain domain_;
  double length_;
};

/// Sorted union of the two breakpoint sets, truncated at max support end.
std::vector<double> merge_grids(const std::vector<double>& a, const std::vector<double>& b);

/// || f - g ||_{L1}.
double l1_distance(const StepFn& f, const StepFn& g);

/// Piece alpha / x + c on [lo, hi); hi may be +inf.
struct MobiusPiece {
  double lo;
  double hi;
  double alpha;
  double c;
  double at(double x) const { return x == 0.0 ? c : alpha / x + c; }
};

/// C|f|(x) = (1/x) int_0^x |f|, exact: on the cell [x_{j-1}, x_j) it is
/// (A_{j-1} + c_j (x - x_{j-1})) / x, and past the support A_total / x.
class CesaroFn {
 public:
  explicit CesaroFn(const StepFn& f);
  double operator()(double x) const { return eval(x); }
  double eval(double x) const;
  const std::vector<MobiusPiece>& pieces() const { return pieces_; }
  /// int_0^x |f|.
  double primitive(double x) const;
  double total() const { return total_; }
  double domain_end() const { return end_; }

 private:
  std::vector<MobiusPiece> pieces_;
  std::vector<double> prefix_;
  std::vector<double> x_;
  std::vector<double> c_;
  double total_ = 0.0;
  double end_ = 1.0;
};

/// C*|f|(x) = int_x^inf |f(t)| / t dt, exact via logarithms; +inf at x = 0
/// when f does not vanish near the origin.
class CopsonFn {
 public:
  explicit CopsonFn(const StepFn& f);
  double operator()(double x) const { return eval(x); }
  double eval(double x) const;

 private:
  std::vector<double> x_;
  std::vector<double> c_;
  double end_;
};

CesaroFn cesaro_fn(const StepFn& f);
CopsonFn copson_fn(const StepFn& f);
/// ess sup_{t >= x} |f(t)|, on the same grid.
StepFn majorant_fn(const StepFn& f);
/// Decreasing rearrangement f*: cells of |f| sorted by value (stable), grid
/// rebuilt from cumulative lengths.
StepFn rearrange_fn(const StepFn& f);

/// Positive weight on [0, inf): 1, coef * t^beta (beta > -1), or a step
/// weight that keeps its last value past its last breakpoint.
class FuncWeight {
 public:
  FuncWeight() = default;
  static FuncWeight power(double coef, double beta);
  static FuncWeight step(std::vector<double> breakpoints, std::vector<double> values);

  double at(double t) const;
  /// int_a^b w, exact for all three kinds.
  double integral(double a, double b) const;
  double cumulative(double x) const { return integral(0.0, x); }
  /// Limit of w at 0+ (may be 0 or inf for powers).
  double at_zero_plus() const;
  FuncWeight scaled(double factor) const;
  /// Interior breakpoints of a step weight (empty otherwise).
  std::vector<double> knots() const;

  bool is_unit() const { return kind_ == Kind::unit; }
  bool is_power() const { return kind_ == Kind::power; }
  bool is_step() const { return kind_ == Kind::step; }
  double coef() const { return coef_; }
  double beta() const { return beta_; }
  std::string describe() const;

 private:
  enum class Kind { unit, power, step };
  Kind kind_ = Kind::unit;
  double coef_ = 1.0;
  double beta_ = 0.0;
  std::vector<double> x_;
  std::vector<double> v_;
  std::vector<double> prefix_;
};

struct FuncSpaceSpec {
  enum class Base { lp, lorentz, marcinkiewicz, linf };
  enum class Transform { none, cesaro, tandori };

  Base base = Base::lp;
  double p = 1.0;
  /// lp: the weight w. linf: the weight w defining v(x) = x / W(x).
  FuncWeight weight;
  std::optional<ConcaveFn> phi;
  Transform transform = Transform::none;

  static FuncSpaceSpec lp(double p, FuncWeight w = {});
  static FuncSpaceSpec lorentz(ConcaveFn phi);
  static FuncSpaceSpec marcinkiewicz(ConcaveFn phi);
  /// L_inf(v) with v(x) = x / W(x); the unit weight gives v = 1.
  static FuncSpaceSpec linf(FuncWeight w = {});
  /// Ces_inf(v) = C(L_inf(v)), v = x / W(x).
  static FuncSpaceSpec ces_inf(FuncWeight w = {});
  /// Tandori L1(w).
  static FuncSpaceSpec tandori_l1(FuncWeight w = {});

  FuncSpaceSpec with_transform(Transform t) const;
  std::string describe() const;
};

double base_norm_fn(const FuncSpaceSpec& spec, const StepFn& f);
double cesaro_norm_fn(const FuncSpaceSpec& spec, const StepFn& f);
double tandori_norm_fn(const FuncSpaceSpec& spec, const StepFn& f);
double norm_fn(const FuncSpaceSpec& spec, const StepFn& f);

/// The M_phi norm of a step function is exact at grid points (merged with
/// the knots of phi). This samples `r` interior points per cell and returns
/// max(sampled) - exact, which should be <= 0 up to rounding.
double marcinkiewicz_refinement_delta(const ConcaveFn& phi, const StepFn& f, int r = 64);

/// ||C|f| ||_{Lambda_phi} by the layer-cake formula int_0^inf phi(d(lambda)) dlambda.
double cesaro_lorentz_norm(const ConcaveFn& phi, const StepFn& f);
/// ||C|f| ||_{M_phi} = sup_t phi(t)/t int_0^t (C|f|)^*. Sampled with `r`
/// points per level interval and refined by golden-section search.
double cesaro_marcinkiewicz_norm(const ConcaveFn& phi, const StepFn& f, int r = 64);

/// w(t) = int_0^{1-t} phi'(s) / (t + s) ds (+ phi(0+)/t for an affine
/// intercept), the weight with ||C f||_{Lambda_phi} <= int |f| w.
double thm8_weight(const ConcaveFn& phi, double t);
/// int_a^b w(t) dt for the same weight, 0 <= a < b <= 1.
double thm8_weight_integral(const ConcaveFn& phi, double a, double b);
/// int_0^1 |f| w.
double thm8_pairing(const ConcaveFn& phi, const StepFn& f);

struct FuncPartition {
  int n_lo = 0;                // first interval index
  int n_hi = 0;                // last interval index
  std::vector<double> points;  // t_{n_lo} .. t_{n_hi + 1}
  double ratio = 2.0;
  double scale = 1.0;          // factor applied to the input weight
  FuncWeight weight;           // the scaled weight
  std::string weight_id;

  double t(int n) const { return points.at(static_cast<std::size_t>(n - n_lo)); }
  /// max_n |int_{t_n}^{t_{n+1}} w - a^n| / a^n.
  double max_relative_residual() const;
};

/// Partition with t_0 = 1 and int_{t_n}^{t_{n+1}} w = a^n for n in
/// [n_lo, n_hi], after rescaling w so that int_0^1 w = 1 / (a - 1).
/// Requires t_{n_hi + 1} <= limit.
FuncPartition prop6_partition(const FuncWeight& w, double a, int n_lo, int n_hi,
                              double limit = kDefaultLength);

/// (sum_n a^n (ess sup_{[t_n, t_{n+1}]} |f|)^p)^{1/p}.
double oplus_norm_fn(const FuncPartition& part, const StepFn& f, double p);

struct Interval {
  double a;
  double b;
};

struct ThinCertificate {
  std::size_t index;  // position in the input list
  double lhs;         // psi-sum over the other kept intervals
  double rhs;         // psi(a) of this interval
  bool holds;
};

struct ThinResult {
  bool decreasing = true;             // b1 > a1 > b2 > ... (else a1 < b1 < a2 < ...)
  std::vector<std::size_t> kept;      // indices into the input list
  std::vector<Interval> intervals;    // kept intervals, input order
  std::vector<ThinCertificate> certificate;
  double surplus = 0.0;               // min rhs - lhs over the certificate
};

/// Greedy thinning so that sum_{later kept} psi(b) <= psi(a) for every kept
/// interval (decreasing case), resp. sum_{earlier kept} psi(b) <= psi(a)
/// (increasing case).
ThinResult prop8_thin(const std::vector<Interval>& intervals,
                      const std::function<double(double)>& psi);

/// Random disjointly supported step functions on the intervals.
std::vector<StepFn> random_blocks(const std::vector<Interval>& intervals, std::uint64_t seed,
                                  std::uint64_t stream, double length = kDefaultLength);
/// Sum of step functions with disjoint supports.
StepFn sum_disjoint(const std::vector<StepFn>& parts);

/// Step-function file: {"breakpoints": [...], "values": [...],
/// "domain": "unit" | "halfline:L"}.
StepFn load_step(std::istream& in);
StepFn load_step_file(const std::string& path);

}  // namespace cesaro
