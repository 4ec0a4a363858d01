#include "cesaro/concave.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/quadrature.hpp"

namespace cesaro {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ConcaveFn ConcaveFn::power(double alpha, Domain domain) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ArgumentError("power: alpha must lie in (0, 1]");
  }
  ConcaveFn f;
  f.kind_ = Kind::power;
  f.domain_ = domain;
  f.alpha_ = alpha;
  return f;
}

ConcaveFn ConcaveFn::affine(double intercept, double slope, Domain domain) {
  if (!(intercept >= 0.0 && slope >= 0.0) || !std::isfinite(intercept) || !std::isfinite(slope)) {
    throw ArgumentError("affine: intercept and slope must be finite and nonnegative");
  }
  ConcaveFn f;
  f.kind_ = Kind::affine;
  f.domain_ = domain;
  f.a_ = slope;
  f.b_ = intercept;
  return f;
}

ConcaveFn ConcaveFn::piecewise_linear(std::vector<Knot> knots, double tail_slope, Domain domain) {
  if (knots.size() < 2) {
    throw ArgumentError("piecewise_linear: need at least two knots");
  }
  if (knots.front().t != 0.0 || knots.front().value != 0.0) {
    throw ArgumentError("piecewise_linear: first knot must be (0, 0)");
  }
  double prev_slope = kInf;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const Knot& p = knots[i - 1];
    const Knot& q = knots[i];
    if (!std::isfinite(q.t) || !std::isfinite(q.value)) {
      throw ArgumentError("piecewise_linear: knots must be finite");
    }
    if (!(q.t > p.t)) {
      throw ArgumentError("piecewise_linear: knot abscissae must be strictly ascending");
    }
    if (q.value < p.value) {
      throw ArgumentError("piecewise_linear: values must be nondecreasing");
    }
    const double s = (q.value - p.value) / (q.t - p.t);
    if (s > prev_slope * (1.0 + 1e-12) + 1e-15) {
      throw ArgumentError("piecewise_linear: slopes must be nonincreasing (concavity)");
    }
    prev_slope = s;
  }
  if (!(tail_slope >= 0.0) || tail_slope > prev_slope * (1.0 + 1e-12) + 1e-15) {
    throw ArgumentError("piecewise_linear: tail slope must lie in [0, last slope]");
  }
  ConcaveFn f;
  f.kind_ = Kind::piecewise_linear;
  f.domain_ = domain;
  f.knots_ = std::move(knots);
  f.tail_slope_ = tail_slope;
  return f;
}

double ConcaveFn::domain_end() const { return domain_ == Domain::unit_interval ? 1.0 : kInf; }

void ConcaveFn::check_domain(double t) const {
  if (!(t >= 0.0) || t > domain_end()) {
    std::ostringstream msg;
    msg << "concave function evaluated outside its domain at t=" << t;
    throw DomainError(msg.str());
  }
}

double ConcaveFn::eval(double t) const {
  check_domain(t);
  switch (kind_) {
    case Kind::power:
      return alpha_ == 1.0 ? t : std::pow(t, alpha_);
    case Kind::affine:
      return a_ * t + b_;
    case Kind::piecewise_linear: {
      const auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                       [](double x, const Knot& k) { return x < k.t; });
      if (it == knots_.end()) {
        const Knot& last = knots_.back();
        return last.value + tail_slope_ * (t - last.t);
      }
      const Knot& q = *it;
      const Knot& p = *(it - 1);
      return p.value + (q.value - p.value) * (t - p.t) / (q.t - p.t);
    }
  }
  return 0.0;
}

double ConcaveFn::slope(double t) const {
  check_domain(t);
  switch (kind_) {
    case Kind::power:
      if (alpha_ == 1.0) return 1.0;
      return t == 0.0 ? kInf : alpha_ * std::pow(t, alpha_ - 1.0);
    case Kind::affine:
      return a_;
    case Kind::piecewise_linear: {
      const auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                       [](double x, const Knot& k) { return x < k.t; });
      if (it == knots_.end()) return tail_slope_;
      const Knot& q = *it;
      const Knot& p = *(it - 1);
      return (q.value - p.value) / (q.t - p.t);
    }
  }
  return 0.0;
}

double ConcaveFn::value_at_zero_plus() const { return kind_ == Kind::affine ? b_ : 0.0; }

double ConcaveFn::inverse(double y) const {
  if (y <= value_at_zero_plus()) return 0.0;
  double t = kInf;
  switch (kind_) {
    case Kind::power:
      t = std::pow(y, 1.0 / alpha_);
      break;
    case Kind::affine:
      t = a_ > 0.0 ? (y - b_) / a_ : kInf;
      break;
    case Kind::piecewise_linear: {
      for (std::size_t i = 1; i < knots_.size(); ++i) {
        const Knot& p = knots_[i - 1];
        const Knot& q = knots_[i];
        if (y <= q.value && q.value > p.value) {
          t = p.t + (y - p.value) * (q.t - p.t) / (q.value - p.value);
          break;
        }
      }
      if (t == kInf && tail_slope_ > 0.0) {
        const Knot& last = knots_.back();
        t = last.t + (y - last.value) / tail_slope_;
      }
      break;
    }
  }
  return t > domain_end() ? kInf : t;
}

bool ConcaveFn::bounded() const {
  if (domain_ == Domain::unit_interval) return true;
  switch (kind_) {
    case Kind::power:
      return false;
    case Kind::affine:
      return a_ == 0.0;
    case Kind::piecewise_linear:
      return tail_slope_ == 0.0;
  }
  return true;
}

double ConcaveFn::supremum() const {
  if (domain_ == Domain::unit_interval) return eval(1.0);
  if (!bounded()) return kInf;
  if (kind_ == Kind::affine) return b_;
  return knots_.back().value;
}

std::string ConcaveFn::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::power:
      out << "power(" << alpha_ << ")";
      break;
    case Kind::affine:
      out << "affine(" << b_ << "," << a_ << ")";
      break;
    case Kind::piecewise_linear:
      out << "piecewise_linear(" << knots_.size() << " knots, tail " << tail_slope_ << ")";
      break;
  }
  if (domain_ == Domain::unit_interval) out << " on [0,1]";
  return out.str();
}

// ---------------------------------------------------------------------------

Conjugate::Conjugate(ConcaveFn phi) : phi_(std::move(phi)) {
  const double far = std::min(phi_.domain_end(), 1e300);
  if (phi_.eval(far) <= 0.0) {
    throw DegenerateError("psi: phi vanishes identically");
  }
  if (phi_.kind() == ConcaveFn::Kind::piecewise_linear && phi_.knots()[1].value == 0.0) {
    // Concave, nondecreasing and zero at two points: zero on an interval.
    throw DegenerateError("psi: phi vanishes on an interval of positive length");
  }
  if (phi_.value_at_zero_plus() > 0.0) {
    at_zero_ = 0.0;
    rule_ = OriginRule::right_limit;
  } else {
    const double s0 = phi_.slope(0.0);
    if (std::isinf(s0)) {
      at_zero_ = 0.0;
      rule_ = OriginRule::right_limit;
    } else if (s0 > 0.0) {
      at_zero_ = 1.0 / s0;
      rule_ = OriginRule::right_limit;
    } else {
      at_zero_ = 0.0;
      rule_ = OriginRule::convention;
    }
  }
}

double Conjugate::eval(double t) const {
  if (t == 0.0) return at_zero_;
  const double v = phi_.eval(t);
  if (v <= 0.0) {
    throw DegenerateError("psi: phi(t) = 0 at a positive t");
  }
  return t / v;
}

Conjugate psi(const ConcaveFn& phi) { return Conjugate(phi); }

// ---------------------------------------------------------------------------

std::vector<double> log_grid(double lo, double hi, int per_octave) {
  if (!(lo > 0.0) || !(hi >= lo) || per_octave < 1) {
    throw ArgumentError("log_grid: need 0 < lo <= hi and per_octave >= 1");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double t = lo * std::exp2(static_cast<double>(k) / per_octave);
    if (t > hi * (1.0 + 1e-12)) break;
    grid.push_back(t);
  }
  return grid;
}

const std::vector<double>& default_t_grid() {
  static const std::vector<double> grid = log_grid(0x1.0p-30, 0x1.0p30, 4);
  return grid;
}

double dilation_function(const ConcaveFn& phi, double s, const std::vector<double>& t_grid,
                         DilationVariant variant) {
  if (!(s > 0.0)) {
    throw DomainError("dilation_function: s must be positive");
  }
  if (t_grid.empty()) {
    throw ArgumentError("dilation_function: empty t grid");
  }
  const double end = phi.domain_end();
  double best = -kInf;
  for (double t : t_grid) {
    if (!(t > 0.0) || t > end || s * t > end) continue;
    if (variant == DilationVariant::zero && t > std::min(1.0, 1.0 / s)) continue;
    if (variant == DilationVariant::infinity && t < std::max(1.0, 1.0 / s)) continue;
    const double den = phi.eval(t);
    if (den <= 0.0) continue;
    best = std::max(best, phi.eval(s * t) / den);
  }
  if (best == -kInf) {
    throw ArgumentError("dilation_function: no grid point inside the admissible t range");
  }
  return best;
}

IndexEstimate estimate_indices(const ConcaveFn& phi) {
  return estimate_indices(phi, phi.domain() == Domain::unit_interval ? DilationVariant::zero
                                                                      : DilationVariant::full);
}

IndexEstimate estimate_indices(const ConcaveFn& phi, DilationVariant variant) {
  const auto& grid = default_t_grid();
  IndexEstimate est;
  for (int e = -20; e <= -4; ++e) {
    const double s = std::exp2(e);
    est.p_samples.emplace_back(s, std::log(dilation_function(phi, s, grid, variant)) / std::log(s));
  }
  for (int e = 4; e <= 20; ++e) {
    const double s = std::exp2(e);
    est.q_samples.emplace_back(s, std::log(dilation_function(phi, s, grid, variant)) / std::log(s));
  }
  est.p_lower = est.p_samples.front().second;
  est.q_upper = est.q_samples.back().second;

  // e(s) ~ index + c / ln s: eliminate c from the two most extreme samples.
  const auto extrapolate = [](std::pair<double, double> far, std::pair<double, double> near) {
    const double l1 = std::log(far.first);
    const double l2 = std::log(near.first);
    return (far.second * l1 - near.second * l2) / (l1 - l2);
  };
  est.p_extrapolated = extrapolate(est.p_samples[0], est.p_samples[1]);
  est.q_extrapolated = extrapolate(est.q_samples[est.q_samples.size() - 1],
                                   est.q_samples[est.q_samples.size() - 2]);
  std::ostringstream spec;
  spec << "s in 2^[-20,-4] (p) and 2^[4,20] (q), one per octave; t in 2^[-30,30], 4 per octave; "
       << (variant == DilationVariant::full ? "phibar"
           : variant == DilationVariant::zero ? "phibar^0"
                                              : "phibar^inf");
  est.grid_spec = spec.str();
  return est;
}

namespace {

double q_ratio(const ConcaveFn& phi, double t, bool& divergent) {
  const auto inv = [&phi](double s) { return 1.0 / phi.eval(s); };
  const quad::OriginIntegral integral = quad::integrate_from_origin(inv, t);
  if (!integral.converged || !std::isfinite(integral.value)) {
    divergent = true;
    return kInf;
  }
  return phi.eval(t) / t * integral.value;
}

}  // namespace

QCheck check_q_less_one(const ConcaveFn& phi, const std::vector<double>& t_grid) {
  if (t_grid.empty()) {
    throw ArgumentError("check_q_less_one: empty t grid");
  }
  std::vector<double> pts;
  for (double t : t_grid) {
    if (t > 0.0 && t <= phi.domain_end()) pts.push_back(t);
  }
  if (pts.empty()) {
    throw ArgumentError("check_q_less_one: no grid point inside the domain");
  }
  std::sort(pts.begin(), pts.end());
  for (double t : pts) {
    if (phi.eval(t) <= 0.0) {
      throw DegenerateError("check_q_less_one: phi(t) must be positive for t > 0");
    }
  }
  QCheck out;
  double coarse = 0.0;
  for (double t : pts) {
    coarse = std::max(coarse, q_ratio(phi, t, out.divergent));
    if (out.divergent) break;
  }
  if (out.divergent) {
    out.best_C = out.refined_C = kInf;
    return out;
  }
  double refined = coarse;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    refined = std::max(refined, q_ratio(phi, std::sqrt(pts[i - 1] * pts[i]), out.divergent));
    if (out.divergent) break;
  }
  if (out.divergent) {
    out.best_C = out.refined_C = kInf;
    return out;
  }
  out.best_C = coarse;
  out.refined_C = refined;
  out.stable = std::fabs(refined - coarse) <= 1e-6 * refined;
  out.holds = std::isfinite(coarse) && out.stable;
  return out;
}

QCheck check_q_less_one(const ConcaveFn& phi) {
  static const std::vector<double> grid = log_grid(0x1.0p-30, 0x1.0p30, 1);
  return check_q_less_one(phi, grid);
}

// ---------------------------------------------------------------------------

ConcaveFn load_concave(std::istream& in) {
  std::string line;
  bool header = false;
  Domain domain = Domain::half_line;
  double tail_slope = 0.0;
  std::vector<Knot> knots;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (!header) {
      if (line.rfind("#concave v1", 0) != 0) {
        throw ArgumentError("concave file: missing '#concave v1' header");
      }
      header = true;
      continue;
    }
    if (line[0] == '#') {
      std::istringstream directive(line.substr(1));
      std::string key;
      directive >> key;
      if (key == "domain") {
        std::string value;
        directive >> value;
        if (value == "unit") {
          domain = Domain::unit_interval;
        } else if (value == "halfline" || value == "half_line") {
          domain = Domain::half_line;
        } else {
          throw ArgumentError("concave file: unknown domain '" + value + "'");
        }
      } else if (key == "tail_slope") {
        if (!(directive >> tail_slope)) {
          throw ArgumentError("concave file: bad tail_slope directive");
        }
      }
      continue;
    }
    std::istringstream row(line);
    Knot k{};
    if (!(row >> k.t >> k.value)) {
      throw ArgumentError("concave file: cannot parse line " + std::to_string(lineno));
    }
    knots.push_back(k);
  }
  if (!header) {
    throw ArgumentError("concave file: empty input");
  }
  return ConcaveFn::piecewise_linear(std::move(knots), tail_slope, domain);
}

ConcaveFn load_concave_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ArgumentError("cannot open concave file: " + path);
  }
  return load_concave(in);
}

}  // namespace cesaro
