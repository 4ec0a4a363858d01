#include "cesaro/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/rng.hpp"
#include "json.hpp"

namespace cesaro {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// int_a^b x^e dx for 0 < a <= b <= inf.
double pow_integral(double e, double a, double b) {
  if (!(b > a)) return 0.0;
  if (e == -1.0) return std::log(b) - std::log(a);
  if (std::isinf(b)) {
    if (e >= -1.0) return kInf;
    return std::pow(a, e + 1.0) / -(e + 1.0);
  }
  return (std::pow(b, e + 1.0) - std::pow(a, e + 1.0)) / (e + 1.0);
}

// Values of f on the cells of `grid`, which must refine f's grid.
std::vector<double> values_on(const StepFn& f, const std::vector<double>& grid) {
  std::vector<double> out(grid.size() - 1);
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    out[j] = grid[j] < f.support_end() ? f.eval(grid[j]) : 0.0;
  }
  return out;
}

double golden_max(const std::function<double(double)>& h, double lo, double hi, double& best) {
  constexpr double kR = 0.6180339887498949;
  double x1 = hi - kR * (hi - lo);
  double x2 = lo + kR * (hi - lo);
  double f1 = h(x1);
  double f2 = h(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(std::fabs(lo), std::fabs(hi)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kR * (hi - lo);
      f2 = h(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kR * (hi - lo);
      f1 = h(x1);
    }
  }
  best = std::max({best, f1, f2});
  return best;
}

// Max of h over [lo, hi]: r + 1 samples, then golden section around the best.
double sample_max(const std::function<double(double)>& h, double lo, double hi, int r) {
  double best = -kInf;
  int arg = 0;
  std::vector<double> xs(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    xs[k] = k == r ? hi : lo + (hi - lo) * k / r;
    const double v = h(xs[k]);
    if (v > best) {
      best = v;
      arg = k;
    }
  }
  const double a = xs[std::max(arg - 1, 0)];
  const double b = xs[std::min(arg + 1, r)];
  if (b > a) golden_max(h, a, b, best);
  return best;
}

double phi_hat(const ConcaveFn& phi, double t) { return t > 0.0 ? phi.eval(t) : 0.0; }

// Level set {x : g(x) > lambda} of a piecewise Moebius function.
struct LevelSet {
  double measure = 0.0;
  double integral = 0.0;
};

LevelSet level_set(const std::vector<MobiusPiece>& pieces, double lambda) {
  LevelSet out;
  for (const MobiusPiece& p : pieces) {
    double l = p.lo;
    double h = p.hi;
    if (p.alpha == 0.0) {
      if (!(p.c > lambda)) continue;
    } else if (p.alpha > 0.0) {
      if (p.c < lambda) {
        h = std::min(h, p.alpha / (lambda - p.c));
      }
    } else {
      if (!(p.c > lambda)) continue;
      l = std::max(l, p.alpha / (lambda - p.c));
    }
    if (!(h > l)) continue;
    out.measure += h - l;
    out.integral += p.alpha == 0.0 ? p.c * (h - l) : p.alpha * std::log(h / l) + p.c * (h - l);
  }
  return out;
}

// Sorted distinct values of g at piece endpoints, 0 included.
std::vector<double> level_breaks(const std::vector<MobiusPiece>& pieces) {
  std::vector<double> v{0.0};
  for (const MobiusPiece& p : pieces) {
    v.push_back(p.lo == 0.0 ? p.c : p.at(p.lo));
    v.push_back(std::isinf(p.hi) ? p.c : p.at(p.hi));
  }
  for (double& x : v) x = std::max(x, 0.0);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

StepFn::StepFn(std::vector<double> breakpoints, std::vector<double> values, FnDomain domain,
               double length)
    : x_(std::move(breakpoints)), c_(std::move(values)), domain_(domain), length_(length) {
  if (c_.empty() || x_.size() != c_.size() + 1) {
    throw ArgumentError("step function: need M >= 1 values and M + 1 breakpoints");
  }
  if (domain_ == FnDomain::half_line && !(length_ > 0.0 && std::isfinite(length_))) {
    throw ArgumentError("step function: truncation length must be positive and finite");
  }
  if (x_.front() != 0.0) {
    throw ArgumentError("step function: first breakpoint must be 0");
  }
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i] > x_[i - 1]) || !std::isfinite(x_[i])) {
      throw ArgumentError("step function: breakpoints must be finite and strictly increasing");
    }
  }
  for (double v : c_) {
    if (!std::isfinite(v)) {
      throw ArgumentError("step function: values must be finite");
    }
  }
  if (x_.back() > domain_end()) {
    throw ArgumentError("step function: support exceeds the domain");
  }
}

StepFn StepFn::indicator(double a, double b, double c, FnDomain domain, double length) {
  if (!(a >= 0.0 && b > a)) {
    throw ArgumentError("indicator: need 0 <= a < b");
  }
  if (a == 0.0) return StepFn({0.0, b}, {c}, domain, length);
  return StepFn({0.0, a, b}, {0.0, c}, domain, length);
}

StepFn StepFn::zero(FnDomain domain, double length) {
  return StepFn({0.0, domain == FnDomain::unit ? 1.0 : std::min(1.0, length)}, {0.0}, domain,
                length);
}

double StepFn::domain_end() const { return domain_ == FnDomain::unit ? 1.0 : length_; }

double StepFn::eval(double x) const {
  if (!(x >= 0.0) || x > domain_end()) {
    throw DomainError("step function evaluated outside its domain");
  }
  if (x >= x_.back()) return 0.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return c_[static_cast<std::size_t>(it - x_.begin()) - 1];
}

double StepFn::integral_abs() const {
  double s = 0.0;
  for (std::size_t j = 0; j < c_.size(); ++j) s += std::fabs(c_[j]) * (x_[j + 1] - x_[j]);
  return s;
}

StepFn StepFn::refined(const std::vector<double>& extra) const {
  std::vector<double> pts;
  for (double t : extra) {
    if (t > 0.0 && t < x_.back()) pts.push_back(t);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> grid;
  std::merge(x_.begin(), x_.end(), pts.begin(), pts.end(), std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return StepFn(grid, values_on(*this, grid), domain_, length_);
}

StepFn StepFn::abs() const {
  std::vector<double> v(c_.size());
  std::transform(c_.begin(), c_.end(), v.begin(), [](double y) { return std::fabs(y); });
  return StepFn(x_, v, domain_, length_);
}

std::string StepFn::describe() const {
  std::ostringstream out;
  out << "step(" << c_.size() << " cells on [0," << x_.back() << "], "
      << (domain_ == FnDomain::unit ? "unit" : "halfline:" + std::to_string(length_)) << ")";
  return out.str();
}

std::vector<double> merge_grids(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> g;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(g));
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

double l1_distance(const StepFn& f, const StepFn& g) {
  const std::vector<double> grid = merge_grids(f.breakpoints(), g.breakpoints());
  const std::vector<double> fv = values_on(f, grid);
  const std::vector<double> gv = values_on(g, grid);
  double s = 0.0;
  for (std::size_t j = 0; j < fv.size(); ++j) s += std::fabs(fv[j] - gv[j]) * (grid[j + 1] - grid[j]);
  return s;
}

// ---------------------------------------------------------------------------

CesaroFn::CesaroFn(const StepFn& f) : x_(f.breakpoints()), c_(f.values()) {
  end_ = f.domain() == FnDomain::unit ? 1.0 : kInf;
  for (double& v : c_) v = std::fabs(v);
  prefix_.assign(x_.size(), 0.0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    prefix_[j + 1] = prefix_[j] + c_[j] * (x_[j + 1] - x_[j]);
    pieces_.push_back({x_[j], x_[j + 1], prefix_[j] - c_[j] * x_[j], c_[j]});
  }
  pieces_.front().alpha = 0.0;
  total_ = prefix_.back();
  if (x_.back() < end_) pieces_.push_back({x_.back(), end_, total_, 0.0});
}

double CesaroFn::primitive(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= x_.back()) return total_;
  const auto j = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), x) - x_.begin()) - 1;
  return prefix_[j] + c_[j] * (x - x_[j]);
}

double CesaroFn::eval(double x) const {
  if (!(x > 0.0) || x > end_) {
    throw DomainError("Cesaro transform evaluated outside (0, end]");
  }
  return primitive(x) / x;
}

CopsonFn::CopsonFn(const StepFn& f) : x_(f.breakpoints()), c_(f.values()) {
  end_ = f.domain_end();
  for (double& v : c_) v = std::fabs(v);
}

double CopsonFn::eval(double x) const {
  if (!(x >= 0.0) || x > end_) {
    throw DomainError("Copson transform evaluated outside [0, end]");
  }
  double s = 0.0;
  for (std::size_t j = c_.size(); j-- > 0;) {
    if (x_[j + 1] <= x) break;
    if (c_[j] == 0.0) continue;
    const double lo = std::max(x, x_[j]);
    if (lo == 0.0) return kInf;
    s += c_[j] * (std::log(x_[j + 1]) - std::log(lo));
  }
  return s;
}

CesaroFn cesaro_fn(const StepFn& f) { return CesaroFn(f); }
CopsonFn copson_fn(const StepFn& f) { return CopsonFn(f); }

StepFn majorant_fn(const StepFn& f) {
  std::vector<double> v(f.values().size());
  double run = 0.0;
  for (std::size_t j = v.size(); j-- > 0;) {
    run = std::max(run, std::fabs(f.values()[j]));
    v[j] = run;
  }
  return StepFn(f.breakpoints(), v, f.domain(), f.length());
}

StepFn rearrange_fn(const StepFn& f) {
  const auto& x = f.breakpoints();
  std::vector<std::pair<double, double>> cells;
  for (std::size_t j = 0; j < f.cells(); ++j) cells.emplace_back(std::fabs(f.values()[j]), x[j + 1] - x[j]);
  std::stable_sort(cells.begin(), cells.end(),
                   [](const auto& p, const auto& q) { return p.first > q.first; });
  std::vector<double> grid{0.0};
  std::vector<double> vals;
  for (const auto& [v, h] : cells) {
    if (!vals.empty() && vals.back() == v) {
      grid.back() += h;
      continue;
    }
    vals.push_back(v);
    grid.push_back(grid.back() + h);
  }
  grid.back() = std::min(grid.back(), f.domain_end());
  return StepFn(grid, vals, f.domain(), f.length());
}

// ---------------------------------------------------------------------------

FuncWeight FuncWeight::power(double coef, double beta) {
  if (!(coef > 0.0) || !std::isfinite(coef) || !(beta > -1.0) || !std::isfinite(beta)) {
    throw ArgumentError("power weight: need coef > 0 and beta > -1");
  }
  FuncWeight w;
  w.kind_ = (coef == 1.0 && beta == 0.0) ? Kind::unit : Kind::power;
  w.coef_ = coef;
  w.beta_ = beta;
  return w;
}

FuncWeight FuncWeight::step(std::vector<double> breakpoints, std::vector<double> values) {
  if (values.empty() || breakpoints.size() != values.size() + 1 || breakpoints.front() != 0.0) {
    throw ArgumentError("step weight: need breakpoints 0 = x_0 < ... < x_M and M values");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i])) {
      throw ArgumentError("step weight: breakpoints must be strictly increasing");
    }
  }
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ArgumentError("step weight: values must be positive");
    }
  }
  FuncWeight w;
  w.kind_ = Kind::step;
  w.x_ = std::move(breakpoints);
  w.v_ = std::move(values);
  w.prefix_.assign(w.x_.size(), 0.0);
  for (std::size_t j = 0; j < w.v_.size(); ++j) {
    w.prefix_[j + 1] = w.prefix_[j] + w.v_[j] * (w.x_[j + 1] - w.x_[j]);
  }
  return w;
}

double FuncWeight::at(double t) const {
  if (!(t >= 0.0)) {
    throw DomainError("weight evaluated at a negative point");
  }
  switch (kind_) {
    case Kind::unit:
      return 1.0;
    case Kind::power:
      return t == 0.0 ? at_zero_plus() : coef_ * std::pow(t, beta_);
    case Kind::step: {
      if (t >= x_.back()) return v_.back();
      const auto it = std::upper_bound(x_.begin(), x_.end(), t);
      return v_[static_cast<std::size_t>(it - x_.begin()) - 1];
    }
  }
  return 1.0;
}

double FuncWeight::at_zero_plus() const {
  switch (kind_) {
    case Kind::unit:
      return 1.0;
    case Kind::power:
      return beta_ < 0.0 ? kInf : beta_ > 0.0 ? 0.0 : coef_;
    case Kind::step:
      return v_.front();
  }
  return 1.0;
}

double FuncWeight::integral(double a, double b) const {
  if (!(a >= 0.0) || !(b >= a)) {
    throw DomainError("weight integral needs 0 <= a <= b");
  }
  switch (kind_) {
    case Kind::unit:
      return b - a;
    case Kind::power:
      if (std::isinf(b)) return kInf;
      return coef_ * (std::pow(b, beta_ + 1.0) - std::pow(a, beta_ + 1.0)) / (beta_ + 1.0);
    case Kind::step: {
      const auto cum = [this](double t) {
        if (std::isinf(t)) return kInf;
        if (t >= x_.back()) return prefix_.back() + v_.back() * (t - x_.back());
        const auto j = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), t) - x_.begin()) - 1;
        return prefix_[j] + v_[j] * (t - x_[j]);
      };
      // Within one cell use the local formula to avoid cancellation.
      if (b < x_.back()) {
        const auto ja = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), a) - x_.begin()) - 1;
        if (b <= x_[ja + 1]) return v_[ja] * (b - a);
      } else if (a >= x_.back()) {
        return v_.back() * (b - a);
      }
      return cum(b) - cum(a);
    }
  }
  return 0.0;
}

FuncWeight FuncWeight::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ArgumentError("weight scale factor must be positive");
  }
  if (kind_ == Kind::step) {
    std::vector<double> v = v_;
    for (double& y : v) y *= factor;
    return step(x_, v);
  }
  return power(coef_ * factor, beta_);
}

std::vector<double> FuncWeight::knots() const {
  if (kind_ != Kind::step) return {};
  return {x_.begin() + 1, x_.end()};
}

std::string FuncWeight::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::unit:
      out << "1";
      break;
    case Kind::power:
      out << coef_ << "*t^" << beta_;
      break;
    case Kind::step:
      out << "step[" << v_.size() << "]";
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

FuncSpaceSpec FuncSpaceSpec::lp(double p, FuncWeight w) {
  if (!(p >= 1.0)) {
    throw ArgumentError("Lp: p must be >= 1");
  }
  FuncSpaceSpec s;
  s.base = Base::lp;
  s.p = p;
  s.weight = std::move(w);
  return s;
}

FuncSpaceSpec FuncSpaceSpec::lorentz(ConcaveFn phi) {
  FuncSpaceSpec s;
  s.base = Base::lorentz;
  s.phi = std::move(phi);
  return s;
}

FuncSpaceSpec FuncSpaceSpec::marcinkiewicz(ConcaveFn phi) {
  FuncSpaceSpec s;
  s.base = Base::marcinkiewicz;
  s.phi = std::move(phi);
  return s;
}

FuncSpaceSpec FuncSpaceSpec::linf(FuncWeight w) {
  FuncSpaceSpec s;
  s.base = Base::linf;
  s.p = kInf;
  s.weight = std::move(w);
  return s;
}

FuncSpaceSpec FuncSpaceSpec::ces_inf(FuncWeight w) { return linf(std::move(w)).with_transform(Transform::cesaro); }

FuncSpaceSpec FuncSpaceSpec::tandori_l1(FuncWeight w) {
  return lp(1.0, std::move(w)).with_transform(Transform::tandori);
}

FuncSpaceSpec FuncSpaceSpec::with_transform(Transform t) const {
  FuncSpaceSpec s = *this;
  s.transform = t;
  return s;
}

std::string FuncSpaceSpec::describe() const {
  std::ostringstream out;
  if (transform == Transform::cesaro) out << "C(";
  if (transform == Transform::tandori) out << "tilde(";
  switch (base) {
    case Base::lp:
      out << "L_" << p << "(" << weight.describe() << ")";
      break;
    case Base::lorentz:
      out << "Lambda_" << phi->describe();
      break;
    case Base::marcinkiewicz:
      out << "M_" << phi->describe();
      break;
    case Base::linf:
      out << "L_inf(x/W), w=" << weight.describe();
      break;
  }
  if (transform != Transform::none) out << ")";
  return out.str();
}

namespace {

const ConcaveFn& need_phi(const FuncSpaceSpec& spec) {
  if (!spec.phi) {
    throw ArgumentError("Lorentz/Marcinkiewicz space needs a concave function");
  }
  return *spec.phi;
}

// sup over the open cell (lo, hi) of a monotone function given its one-sided
// end values.
double sup_weight_on_cell(const FuncWeight& w, double lo, double hi) {
  const double left = lo == 0.0 ? w.at_zero_plus() : w.at(lo);
  const double right = w.is_step() ? w.at(lo) : w.at(hi);
  return std::max(left, right);
}

// v(x) = x / W(x) at x, with v(0+) = 1 / w(0+).
double v_of(const FuncWeight& w, double x) {
  if (x == 0.0) {
    const double w0 = w.at_zero_plus();
    return w0 == 0.0 ? kInf : 1.0 / w0;
  }
  return x / w.cumulative(x);
}

double lp_step(double p, const FuncWeight& w, const StepFn& f) {
  const StepFn g = f.refined(w.knots());
  const auto& x = g.breakpoints();
  const auto& c = g.values();
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0.0) m = std::max(m, std::fabs(c[j]) * sup_weight_on_cell(w, x[j], x[j + 1]));
    }
    return m;
  }
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0.0) continue;
    s += std::pow(std::fabs(c[j]) / scale, p) * w.integral(x[j], x[j + 1]);
  }
  return scale * std::pow(s, 1.0 / p);
}

double lorentz_step(const ConcaveFn& phi, const StepFn& f) {
  const StepFn star = rearrange_fn(f);
  const auto& x = star.breakpoints();
  double s = 0.0;
  double prev = 0.0;  // phi(0) = 0; an intercept enters as an atom
  for (std::size_t j = 0; j < star.cells(); ++j) {
    const double cur = phi.eval(x[j + 1]);
    s += star.values()[j] * (cur - prev);
    prev = cur;
  }
  return s;
}

std::vector<double> phi_knots(const ConcaveFn& phi) {
  std::vector<double> k;
  if (phi.kind() == ConcaveFn::Kind::piecewise_linear) {
    for (const Knot& kn : phi.knots()) k.push_back(kn.t);
  }
  return k;
}

double marcinkiewicz_step(const ConcaveFn& phi, const StepFn& f) {
  const StepFn star = rearrange_fn(f).refined(phi_knots(phi));
  const auto& x = star.breakpoints();
  const auto& c = star.values();
  // t -> 0+: phi(t)/t * t f*(0) -> phi(0+) f*(0).
  double best = phi.value_at_zero_plus() * c.front();
  double G = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    G += c[j] * (x[j + 1] - x[j]);
    best = std::max(best, phi.eval(x[j + 1]) / x[j + 1] * G);
  }
  return best;
}

double linf_step(const FuncWeight& w, const StepFn& f) {
  const StepFn g = f.refined(w.knots());
  const auto& x = g.breakpoints();
  const auto& c = g.values();
  double m = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0.0) continue;
    m = std::max(m, std::fabs(c[j]) * std::max(v_of(w, x[j]), v_of(w, x[j + 1])));
  }
  return m;
}

// sup_x int_0^x |f| / W(x). On each cell of the merged grid F is linear; W
// is linear (unit, step weights) or a power, so the ratio is monotone or has
// one interior critical point, which is evaluated explicitly.
double ces_inf_fn(const FuncWeight& w, const StepFn& f) {
  const StepFn g = f.abs().refined(w.knots());
  const auto& x = g.breakpoints();
  const auto& c = g.values();
  if (g.integral_abs() == 0.0) return 0.0;
  double best = 0.0;
  const double w0 = w.at_zero_plus();
  if (c.front() > 0.0) best = w0 == 0.0 ? kInf : c.front() / w0;
  double F = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double F_lo = F;
    F += c[j] * (x[j + 1] - x[j]);
    best = std::max(best, F / w.cumulative(x[j + 1]));
    if (w.is_power() && w.beta() != 0.0 && c[j] > 0.0) {
      // (alpha + c x) / (k x^{beta+1}) is stationary at -(beta+1) alpha / (beta c).
      const double alpha = F_lo - c[j] * x[j];
      const double xs = -(w.beta() + 1.0) * alpha / (w.beta() * c[j]);
      if (xs > x[j] && xs < x[j + 1]) {
        best = std::max(best, (F_lo + c[j] * (xs - x[j])) / w.cumulative(xs));
      }
    }
  }
  return best;
}

// int (C|f|)^p w over (0, end).
double cesaro_lp(double p, const FuncWeight& w, const StepFn& f) {
  const StepFn g = f.abs().refined(w.knots());
  const CesaroFn C(g);
  const auto& pieces = C.pieces();
  if (std::isinf(p)) {
    if (!w.is_unit()) {
      throw ArgumentError("C(L_inf(w)) with a weight: use the linf/ces_inf base instead");
    }
    double m = 0.0;
    for (const MobiusPiece& pc : pieces) {
      m = std::max(m, pc.lo == 0.0 ? pc.c : pc.at(pc.lo));
      if (std::isfinite(pc.hi)) m = std::max(m, pc.at(pc.hi));
    }
    return m;
  }
  double gmax = 0.0;
  for (const MobiusPiece& pc : pieces) {
    gmax = std::max(gmax, pc.lo == 0.0 ? pc.c : pc.at(pc.lo));
    if (std::isfinite(pc.hi)) gmax = std::max(gmax, pc.at(pc.hi));
  }
  if (gmax == 0.0) return 0.0;
  double s = 0.0;
  const double S = g.support_end();
  for (const MobiusPiece& pc : pieces) {
    if (pc.lo >= S) break;
    if (pc.alpha == 0.0) {
      s += std::pow(pc.c / gmax, p) * w.integral(pc.lo, pc.hi);
      continue;
    }
    const auto integrand = [&](double t) { return std::pow(pc.at(t) / gmax, p) * w.at(t); };
    const double scale = w.integral(pc.lo, pc.hi);
    s += quad::adaptive_simpson(integrand, pc.lo, pc.hi, 1e-15 * std::max(scale, 1e-300));
  }
  // Tail A / x on [S, end): exact.
  const double A = C.total() / gmax;
  const double end = C.domain_end();
  if (S < end) {
    const double Ap = std::pow(A, p);
    if (w.is_step()) {
      std::vector<double> cuts{S};
      for (double k : w.knots()) {
        if (k > S && k < end) cuts.push_back(k);
      }
      cuts.push_back(end);
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        s += Ap * w.at(cuts[i]) * pow_integral(-p, cuts[i], cuts[i + 1]);
      }
    } else {
      s += Ap * w.coef() * pow_integral(w.beta() - p, S, end);
    }
  }
  return gmax * std::pow(s, 1.0 / p);
}

}  // namespace

double base_norm_fn(const FuncSpaceSpec& spec, const StepFn& f) {
  switch (spec.base) {
    case FuncSpaceSpec::Base::lp:
      return lp_step(spec.p, spec.weight, f);
    case FuncSpaceSpec::Base::lorentz:
      return lorentz_step(need_phi(spec), f);
    case FuncSpaceSpec::Base::marcinkiewicz:
      return marcinkiewicz_step(need_phi(spec), f);
    case FuncSpaceSpec::Base::linf:
      return linf_step(spec.weight, f);
  }
  throw ArgumentError("unsupported function space");
}

double cesaro_norm_fn(const FuncSpaceSpec& spec, const StepFn& f) {
  switch (spec.base) {
    case FuncSpaceSpec::Base::lp:
      return cesaro_lp(spec.p, spec.weight, f);
    case FuncSpaceSpec::Base::lorentz:
      return cesaro_lorentz_norm(need_phi(spec), f);
    case FuncSpaceSpec::Base::marcinkiewicz:
      return cesaro_marcinkiewicz_norm(need_phi(spec), f);
    case FuncSpaceSpec::Base::linf:
      return ces_inf_fn(spec.weight, f);
  }
  throw ArgumentError("unsupported function space");
}

double tandori_norm_fn(const FuncSpaceSpec& spec, const StepFn& f) {
  return base_norm_fn(spec, majorant_fn(f));
}

double norm_fn(const FuncSpaceSpec& spec, const StepFn& f) {
  switch (spec.transform) {
    case FuncSpaceSpec::Transform::none:
      return base_norm_fn(spec, f);
    case FuncSpaceSpec::Transform::cesaro:
      return cesaro_norm_fn(spec, f);
    case FuncSpaceSpec::Transform::tandori:
      return tandori_norm_fn(spec, f);
  }
  return 0.0;
}

double marcinkiewicz_refinement_delta(const ConcaveFn& phi, const StepFn& f, int r) {
  if (r < 1) {
    throw ArgumentError("refinement factor must be >= 1");
  }
  const double exact = marcinkiewicz_step(phi, f);
  const StepFn star = rearrange_fn(f);
  const auto& x = star.breakpoints();
  const auto& c = star.values();
  double sampled = 0.0;
  double G = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (int k = 1; k <= r; ++k) {
      const double t = x[j] + (x[j + 1] - x[j]) * k / r;
      sampled = std::max(sampled, phi.eval(t) / t * (G + c[j] * (t - x[j])));
    }
    G += c[j] * (x[j + 1] - x[j]);
  }
  return sampled - exact;
}

// ---------------------------------------------------------------------------

double cesaro_lorentz_norm(const ConcaveFn& phi, const StepFn& f) {
  const CesaroFn C(f);
  const auto& pieces = C.pieces();
  std::vector<double> br = level_breaks(pieces);
  const double gmax = br.back();
  if (gmax == 0.0) return 0.0;
  // Pieces can meet at levels a few ulps apart; a sliver segment at the top
  // would take the substitution meant for the segment below it.
  {
    std::vector<double> merged{br.front()};
    for (std::size_t i = 1; i < br.size(); ++i) {
      if (br[i] - merged.back() > 1e-13 * gmax) merged.push_back(br[i]);
    }
    merged.back() = gmax;
    if (merged.size() < 2) merged = {0.0, gmax};
    br = std::move(merged);
  }
  const bool tail_to_inf = std::isinf(C.domain_end()) && C.total() > 0.0;
  const double ref_measure = std::isinf(C.domain_end()) ? f.support_end() : C.domain_end();
  const double tol_scale = gmax * phi_hat(phi, ref_measure) * 1e-14;
  const bool steep = std::isinf(phi.slope(0.0));
  const int m = steep ? static_cast<int>(std::ceil(3.0 / phi.alpha())) : 1;
  const auto integrand = [&](double lambda) { return phi_hat(phi, level_set(pieces, lambda).measure); };

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const double l = br[i];
    const double h = br[i + 1];
    if (i == 0 && tail_to_inf) {
      const quad::OriginIntegral oi = quad::integrate_from_origin(integrand, h, 1e-13);
      if (!oi.converged || !std::isfinite(oi.value)) return kInf;
      total += oi.value;
    } else if (i + 2 == br.size() && m > 1) {
      // d(lambda) ~ (gmax - lambda) near the top; lambda = h - (h - l) u^m
      // turns phi(d) ~ (gmax - lambda)^alpha into a smooth integrand.
      const double span = h - l;
      const auto sub = [&](double u) {
        return integrand(h - span * std::pow(u, m)) * span * m * std::pow(u, m - 1);
      };
      total += quad::adaptive_simpson(sub, 0.0, 1.0, tol_scale);
    } else {
      total += quad::adaptive_simpson(integrand, l, h, tol_scale);
    }
  }
  return total;
}

double cesaro_marcinkiewicz_norm(const ConcaveFn& phi, const StepFn& f, int r) {
  if (r < 2) {
    throw ArgumentError("sample count must be >= 2");
  }
  const CesaroFn C(f);
  const auto& pieces = C.pieces();
  const std::vector<double> br = level_breaks(pieces);
  const double gmax = br.back();
  if (gmax == 0.0) return 0.0;
  const bool tail_to_inf = std::isinf(C.domain_end()) && C.total() > 0.0;

  const auto h_of = [&](double lambda) {
    const LevelSet ls = level_set(pieces, lambda);
    if (!(ls.measure > 0.0)) return 0.0;
    return phi.eval(ls.measure) / ls.measure * ls.integral;
  };
  double best = phi.value_at_zero_plus() * gmax;
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const double l = br[i];
    const double h = br[i + 1];
    if (i == 0 && tail_to_inf) {
      const auto hl = [&](double s) { return h_of(h * std::exp2(-s)); };
      best = std::max(best, sample_max(hl, 0.0, 60.0, r));
    } else {
      const double top = h - (h - l) * 1e-13;
      best = std::max(best, sample_max(h_of, l, top, r));
    }
  }
  // Plateaus of C|f| (pieces with alpha = 0) are jumps of d; there t runs
  // over [d(level), d(level) + plateau length] with (C|f|)^* = level.
  std::vector<double> levels;
  for (const MobiusPiece& p : pieces) {
    if (p.alpha == 0.0 && p.c > 0.0) levels.push_back(p.c);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (double lv : levels) {
    double len = 0.0;
    for (const MobiusPiece& p : pieces) {
      if (p.alpha == 0.0 && p.c == lv) len += p.hi - p.lo;
    }
    const LevelSet ls = level_set(pieces, lv);
    const double d0 = ls.measure;
    const double G0 = ls.integral;
    const auto ht = [&](double t) { return t > 0.0 ? phi.eval(t) / t * (G0 + lv * (t - d0)) : 0.0; };
    const double lo = d0 > 0.0 ? d0 : len * 1e-12;
    best = std::max(best, sample_max(ht, lo, d0 + len, r));
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

// y ln y - y, with 0 at y = 0.
double xlogx_minus_x(double y) { return y > 0.0 ? y * std::log(y) - y : 0.0; }

// Adaptive Simpson with a tolerance relative to the sampled magnitude. The
// absolute floor sits just above the rounding noise of the log integrands,
// which would otherwise drive the recursion to full depth.
double rel_simpson(const quad::Integrand& f, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const double mag = std::max({std::fabs(f(lo)), std::fabs(f(0.5 * (lo + hi))), std::fabs(f(hi))});
  return quad::adaptive_simpson(f, lo, hi, std::max(1e-14 * mag, 1e-15) * (hi - lo));
}

}  // namespace

double thm8_weight(const ConcaveFn& phi, double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("thm8_weight: t must lie in (0, 1)");
  }
  const double top = 1.0 - t;
  switch (phi.kind()) {
    case ConcaveFn::Kind::power: {
      const double a = phi.alpha();
      if (a == 1.0) return -std::log(t);
      // u = s^a: int_0^{(1-t)^a} du / (t + u^{1/a})
      const double umax = std::pow(top, a);
      const auto g = [&](double u) { return 1.0 / (t + std::pow(u, 1.0 / a)); };
      return quad::adaptive_simpson(g, 0.0, umax, 1e-15 * umax / t);
    }
    case ConcaveFn::Kind::affine:
      return phi.affine_slope() * -std::log(t) + phi.affine_intercept() / t;
    case ConcaveFn::Kind::piecewise_linear: {
      const auto& k = phi.knots();
      double s = 0.0;
      for (std::size_t i = 1; i <= k.size(); ++i) {
        const double lo = k[i - 1].t;
        if (lo >= top) break;
        const double hi = i < k.size() ? std::min(k[i].t, top) : top;
        const double slope = i < k.size() ? (k[i].value - k[i - 1].value) / (k[i].t - k[i - 1].t)
                                          : phi.tail_slope();
        s += slope * std::log((t + hi) / (t + lo));
      }
      return s;
    }
  }
  return 0.0;
}

double thm8_weight_integral(const ConcaveFn& phi, double a, double b) {
  if (!(a >= 0.0 && b > a && b <= 1.0)) {
    throw DomainError("thm8_weight_integral: need 0 <= a < b <= 1");
  }
  // Fubini: int_a^b w = int_0^{1-a} phi'(s) K(s) ds with
  // K(s) = ln((b+s)/(a+s)) for s <= 1-b and ln(1/(a+s)) beyond.
  const double sb = 1.0 - b;
  const double sa = 1.0 - a;
  switch (phi.kind()) {
    case ConcaveFn::Kind::power: {
      const double al = phi.alpha();
      if (al == 1.0) return -(xlogx_minus_x(b) - xlogx_minus_x(a));
      const double ub = std::pow(sb, al);
      const double ua = std::pow(sa, al);
      const auto s_of = [al](double u) { return std::pow(u, 1.0 / al); };
      const auto k1 = [&](double u) {
        const double s = s_of(u);
        return std::log1p((b - a) / (a + s));
      };
      const auto k2 = [&](double u) { return -std::log(a + s_of(u)); };
      // k1 changes character at s ~ a and s ~ b; split there so each piece
      // is either smooth or carries the log singularity at u = 0 (a = 0).
      std::vector<double> cuts{0.0};
      for (double s : {a, b}) {
        const double u = std::pow(s, al);
        if (u > cuts.back() && u < ub) cuts.push_back(u);
      }
      cuts.push_back(ub);
      double total = 0.0;
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i + 1] > cuts[i])) continue;
        if (i == 0 && a == 0.0) {
          total += quad::integrate_from_origin(k1, cuts[1], 1e-14).value;
        } else {
          total += rel_simpson(k1, cuts[i], cuts[i + 1]);
        }
      }
      if (ua > ub) {
        if (a == 0.0 && ub == 0.0) {
          total += quad::integrate_from_origin(k2, ua, 1e-14).value;
        } else {
          total += rel_simpson(k2, ub, ua);
        }
      }
      return total;
    }
    case ConcaveFn::Kind::affine: {
      const double atom = phi.affine_intercept() > 0.0
                              ? (a == 0.0 ? kInf : phi.affine_intercept() * std::log(b / a))
                              : 0.0;
      return phi.affine_slope() * -(xlogx_minus_x(b) - xlogx_minus_x(a)) + atom;
    }
    case ConcaveFn::Kind::piecewise_linear: {
      const auto& k = phi.knots();
      // Exact antiderivatives of the two branches of K.
      const auto part1 = [&](double s1, double s2) {
        return (xlogx_minus_x(b + s2) - xlogx_minus_x(a + s2)) -
               (xlogx_minus_x(b + s1) - xlogx_minus_x(a + s1));
      };
      const auto part2 = [&](double s1, double s2) {
        return -(xlogx_minus_x(a + s2) - xlogx_minus_x(a + s1));
      };
      double total = 0.0;
      for (std::size_t i = 1; i <= k.size(); ++i) {
        const double lo = k[i - 1].t;
        if (lo >= sa) break;
        const double hi = i < k.size() ? std::min(k[i].t, sa) : sa;
        const double slope = i < k.size() ? (k[i].value - k[i - 1].value) / (k[i].t - k[i - 1].t)
                                          : phi.tail_slope();
        if (slope == 0.0) continue;
        const double m1 = std::min(hi, sb);
        if (m1 > lo) total += slope * part1(lo, m1);
        const double m2 = std::max(lo, sb);
        if (hi > m2) total += slope * part2(m2, hi);
      }
      return total;
    }
  }
  return 0.0;
}

double thm8_pairing(const ConcaveFn& phi, const StepFn& f) {
  if (f.domain() != FnDomain::unit) {
    throw ArgumentError("thm8_pairing: f must live on [0, 1]");
  }
  const auto& x = f.breakpoints();
  double s = 0.0;
  for (std::size_t j = 0; j < f.cells(); ++j) {
    const double c = std::fabs(f.values()[j]);
    if (c != 0.0) s += c * thm8_weight_integral(phi, x[j], x[j + 1]);
  }
  return s;
}

// ---------------------------------------------------------------------------

double FuncPartition::max_relative_residual() const {
  double worst = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double an = std::pow(ratio, n);
    worst = std::max(worst, std::fabs(weight.integral(t(n), t(n + 1)) - an) / an);
  }
  return worst;
}

namespace {

// Smallest-residual solution of W(t) = target on [lo, hi] by bisection.
double solve_cumulative(const FuncWeight& w, double target, double lo, double hi) {
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (w.cumulative(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::fabs(w.cumulative(lo) - target) <= std::fabs(w.cumulative(hi) - target) ? lo : hi;
}

}  // namespace

FuncPartition prop6_partition(const FuncWeight& w, double a, int n_lo, int n_hi, double limit) {
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw ArgumentError("prop6_partition: ratio a must exceed 1");
  }
  if (n_lo > 0 || n_hi < -1 || n_lo > n_hi) {
    throw ArgumentError("prop6_partition: window must contain t_0 = 1");
  }
  const double w1 = w.integral(0.0, 1.0);
  if (!(w1 > 0.0) || !std::isfinite(w1)) {
    throw ArgumentError("prop6_partition: int_0^1 w must be positive and finite");
  }
  FuncPartition part;
  part.n_lo = n_lo;
  part.n_hi = n_hi;
  part.ratio = a;
  part.scale = 1.0 / ((a - 1.0) * w1);
  part.weight = w.scaled(part.scale);
  part.weight_id = w.describe();
  const FuncWeight& ws = part.weight;
  part.points.assign(static_cast<std::size_t>(n_hi - n_lo + 2), 0.0);
  const auto idx = [n_lo](int n) { return static_cast<std::size_t>(n - n_lo); };
  part.points[idx(0)] = 1.0;
  for (int n = 0; n <= n_hi; ++n) {
    const double tn = part.points[idx(n)];
    const double target = ws.cumulative(tn) + std::pow(a, n);
    if (ws.cumulative(limit) < target) {
      int reach = n - 1;
      double acc = ws.cumulative(1.0);
      for (int k = 0;; ++k) {
        acc += std::pow(a, k);
        if (acc > ws.cumulative(limit)) break;
        reach = k;
      }
      std::ostringstream msg;
      msg << "prop6_partition: t_" << n + 1 << " lies beyond the truncation L=" << limit
          << "; attainable window is [" << n_lo << ", " << reach << "]";
      throw RangeError(msg.str());
    }
    double hi = std::min(std::max(2.0 * tn, tn + 1.0), limit);
    while (ws.cumulative(hi) < target) hi = std::min(2.0 * hi, limit);
    part.points[idx(n + 1)] = solve_cumulative(ws, target, tn, hi);
  }
  for (int n = -1; n >= n_lo; --n) {
    const double next = part.points[idx(n + 1)];
    const double target = ws.cumulative(next) - std::pow(a, n);
    part.points[idx(n)] = solve_cumulative(ws, target, 0.0, next);
  }
  return part;
}

double oplus_norm_fn(const FuncPartition& part, const StepFn& f, double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw ArgumentError("oplus_norm_fn: p must be finite and >= 1");
  }
  const auto& x = f.breakpoints();
  const auto& c = f.values();
  const double lo = part.points.front();
  const double hi = part.points.back();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0.0 && (x[j] < lo || x[j + 1] > hi)) {
      throw RangeError("oplus_norm_fn: support of f escapes the partition window");
    }
  }
  double s = 0.0;
  for (int n = part.n_lo; n <= part.n_hi; ++n) {
    const double tn = part.t(n);
    const double tn1 = part.t(n + 1);
    double m = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (std::min(x[j + 1], tn1) > std::max(x[j], tn)) m = std::max(m, std::fabs(c[j]));
    }
    if (m > 0.0) s += std::pow(part.ratio, n) * std::pow(m, p);
  }
  return std::pow(s, 1.0 / p);
}

// ---------------------------------------------------------------------------

ThinResult prop8_thin(const std::vector<Interval>& iv, const std::function<double(double)>& psi) {
  if (iv.empty()) {
    throw ArgumentError("prop8_thin: empty interval list");
  }
  for (const Interval& I : iv) {
    if (!(I.a >= 0.0 && I.b > I.a) || !std::isfinite(I.b)) {
      throw ArgumentError("prop8_thin: each interval needs 0 <= a < b < inf");
    }
  }
  ThinResult res;
  res.decreasing = iv.size() < 2 || iv[1].b < iv[0].a;
  for (std::size_t i = 1; i < iv.size(); ++i) {
    const bool ok = res.decreasing ? (iv[i].b < iv[i - 1].a && iv[i].a > 0.0) : (iv[i].a > iv[i - 1].b);
    if (!ok) {
      throw ArgumentError("prop8_thin: intervals are not monotone in the required sense");
    }
  }
  if (res.decreasing && iv.back().a <= 0.0 && iv.size() > 1) {
    throw ArgumentError("prop8_thin: decreasing intervals must stay in (0, inf)");
  }
  std::vector<double> pb(iv.size()), pa(iv.size());
  for (std::size_t i = 0; i < iv.size(); ++i) {
    pb[i] = psi(iv[i].b);
    pa[i] = psi(iv[i].a);
  }
  std::vector<std::size_t> kept{0};
  if (res.decreasing) {
    std::vector<double> tail{0.0};  // tail[k] = sum of psi(b) over kept after kept[k]
    for (std::size_t j = 1; j < iv.size(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < kept.size() && ok; ++k) ok = tail[k] + pb[j] <= pa[kept[k]];
      if (!ok) continue;
      for (double& t : tail) t += pb[j];
      kept.push_back(j);
      tail.push_back(0.0);
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
      res.certificate.push_back({kept[k], tail[k], pa[kept[k]], tail[k] <= pa[kept[k]]});
    }
  } else {
    double prefix = pb[0];
    res.certificate.push_back({0, 0.0, pa[0], true});
    for (std::size_t j = 1; j < iv.size(); ++j) {
      if (prefix <= pa[j]) {
        res.certificate.push_back({j, prefix, pa[j], true});
        kept.push_back(j);
        prefix += pb[j];
      }
    }
  }
  res.kept = kept;
  res.surplus = kInf;
  for (const ThinCertificate& c : res.certificate) res.surplus = std::min(res.surplus, c.rhs - c.lhs);
  for (std::size_t k : kept) res.intervals.push_back(iv[k]);
  return res;
}

std::vector<StepFn> random_blocks(const std::vector<Interval>& intervals, std::uint64_t seed,
                                  std::uint64_t stream, double length) {
  const Rng base(seed, stream);
  std::vector<StepFn> out;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    Rng rng = base.split(i);
    const Interval& I = intervals[i];
    const int cells = static_cast<int>(rng.integer(1, 4));
    std::vector<double> cuts;
    for (int k = 1; k < cells; ++k) cuts.push_back(rng.uniform(I.a, I.b));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> x{0.0};
    std::vector<double> v;
    if (I.a > 0.0) {
      x.push_back(I.a);
      v.push_back(0.0);
    }
    const double mag = std::exp2(rng.uniform(-3.0, 3.0));
    for (double c : cuts) {
      if (c <= x.back()) continue;
      x.push_back(c);
      v.push_back(mag * rng.uniform(0.1, 1.0));
    }
    x.push_back(I.b);
    v.push_back(mag * rng.uniform(0.1, 1.0));
    out.emplace_back(x, v, FnDomain::half_line, std::max(length, I.b));
  }
  return out;
}

StepFn sum_disjoint(const std::vector<StepFn>& parts) {
  if (parts.empty()) {
    throw ArgumentError("sum_disjoint: no parts");
  }
  std::vector<double> grid = parts.front().breakpoints();
  double len = parts.front().length();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    grid = merge_grids(grid, parts[i].breakpoints());
    len = std::max(len, parts[i].length());
  }
  std::vector<double> v(grid.size() - 1, 0.0);
  for (const StepFn& p : parts) {
    const std::vector<double> pv = values_on(p, grid);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += pv[j];
  }
  return StepFn(grid, v, parts.front().domain(), len);
}

// ---------------------------------------------------------------------------

StepFn load_step(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("step file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("breakpoints") || !doc.contains("values")) {
    throw ArgumentError("step file: need 'breakpoints' and 'values'");
  }
  FnDomain domain = FnDomain::unit;
  double length = kDefaultLength;
  if (doc.contains("domain")) {
    const std::string d = doc.at("domain").get<std::string>();
    if (d == "unit") {
      domain = FnDomain::unit;
    } else if (d.rfind("halfline", 0) == 0) {
      domain = FnDomain::half_line;
      if (d.size() > 8) {
        if (d[8] != ':') throw ArgumentError("step file: bad domain '" + d + "'");
        try {
          length = std::stod(d.substr(9));
        } catch (const std::exception&) {
          throw ArgumentError("step file: bad truncation length in '" + d + "'");
        }
      }
    } else {
      throw ArgumentError("step file: unknown domain '" + d + "'");
    }
  }
  try {
    return StepFn(doc.at("breakpoints").get<std::vector<double>>(),
                  doc.at("values").get<std::vector<double>>(), domain, length);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("step file: ") + e.what());
  }
}

StepFn load_step_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ArgumentError("cannot open step file: " + path);
  }
  return load_step(in);
}

}  // namespace cesaro
