#include "cesaro/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_finite(std::span<const double> a) {
  for (double x : a) {
    if (!std::isfinite(x)) {
      throw ArgumentError("sequence entries must be finite");
    }
  }
}

const ConcaveFn& require_phi(const SeqSpaceSpec& spec) {
  if (!spec.phi) {
    throw ArgumentError("lorentz/marcinkiewicz space needs a concave function");
  }
  if (spec.phi->domain() != Domain::half_line) {
    throw ArgumentError("sequence spaces need phi on [0, inf)");
  }
  return *spec.phi;
}
}  // namespace

SeqWeight SeqWeight::power(double alpha) {
  if (!std::isfinite(alpha)) {
    throw ArgumentError("weight exponent must be finite");
  }
  SeqWeight w;
  w.kind_ = alpha == 0.0 ? Kind::unit : Kind::power;
  w.alpha_ = alpha;
  return w;
}

SeqWeight SeqWeight::values(std::vector<double> v) {
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ArgumentError("weights must be finite and strictly positive");
    }
  }
  SeqWeight w;
  w.kind_ = Kind::explicit_values;
  w.values_ = std::move(v);
  return w;
}

double SeqWeight::at(std::size_t n) const {
  switch (kind_) {
    case Kind::unit:
      return 1.0;
    case Kind::power:
      return std::pow(static_cast<double>(n), alpha_);
    case Kind::explicit_values:
      if (n == 0 || n > values_.size()) {
        throw RangeError("weight index " + std::to_string(n) + " past the supplied values (" +
                         std::to_string(values_.size()) + ")");
      }
      return values_[n - 1];
  }
  return 1.0;
}

std::size_t SeqWeight::available() const {
  return kind_ == Kind::explicit_values ? values_.size()
                                        : std::numeric_limits<std::size_t>::max();
}

std::string SeqWeight::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::unit:
      out << "1";
      break;
    case Kind::power:
      out << "pow(" << alpha_ << ")";
      break;
    case Kind::explicit_values:
      out << "values[" << values_.size() << "]";
      break;
  }
  return out.str();
}

SeqSpaceSpec SeqSpaceSpec::lp(double p, SeqWeight w) {
  if (!(p >= 1.0)) {
    throw ArgumentError("lp: p must be >= 1");
  }
  SeqSpaceSpec s;
  s.base = Base::lp;
  s.p = p;
  s.weight = std::move(w);
  return s;
}

SeqSpaceSpec SeqSpaceSpec::lorentz(ConcaveFn phi) {
  SeqSpaceSpec s;
  s.base = Base::lorentz;
  s.phi = std::move(phi);
  require_phi(s);
  return s;
}

SeqSpaceSpec SeqSpaceSpec::marcinkiewicz(ConcaveFn phi) {
  SeqSpaceSpec s;
  s.base = Base::marcinkiewicz;
  s.phi = std::move(phi);
  require_phi(s);
  return s;
}

SeqSpaceSpec SeqSpaceSpec::ces_inf(SeqWeight v) {
  SeqSpaceSpec s;
  s.base = Base::ces_inf;
  s.weight = std::move(v);
  return s;
}

SeqSpaceSpec SeqSpaceSpec::tandori_l1(SeqWeight w) {
  SeqSpaceSpec s;
  s.base = Base::tandori_l1;
  s.weight = std::move(w);
  return s;
}

SeqSpaceSpec SeqSpaceSpec::with_transform(Transform t) const {
  SeqSpaceSpec s = *this;
  s.transform = t;
  return s;
}

bool SeqSpaceSpec::symmetric() const {
  if (transform != Transform::none) return false;
  switch (base) {
    case Base::lp:
      return weight.is_unit();
    case Base::lorentz:
    case Base::marcinkiewicz:
      return true;
    default:
      return false;
  }
}

std::string SeqSpaceSpec::describe() const {
  std::ostringstream out;
  if (transform == Transform::cesaro) out << "C(";
  if (transform == Transform::tandori) out << "tilde(";
  switch (base) {
    case Base::lp:
      out << "l_" << p;
      if (!weight.is_unit()) out << "(" << weight.describe() << ")";
      break;
    case Base::lorentz:
      out << "lambda_" << phi->describe();
      break;
    case Base::marcinkiewicz:
      out << "m_" << phi->describe();
      break;
    case Base::ces_inf:
      out << "ces_inf(" << weight.describe() << ")";
      break;
    case Base::tandori_l1:
      out << "tilde_l1(" << weight.describe() << ")";
      break;
  }
  if (transform != Transform::none) out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------

SeqVec cesaro_seq(std::span<const double> a, std::size_t out_len) {
  check_finite(a);
  const std::size_t n = out_len == 0 ? a.size() : out_len;
  SeqVec out(n);
  double prefix = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.size()) prefix += std::fabs(a[i]);
    out[i] = prefix / static_cast<double>(i + 1);
  }
  return out;
}

SeqVec copson_seq(std::span<const double> a) {
  check_finite(a);
  SeqVec out(a.size());
  double tail = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) {
    tail += std::fabs(a[i]) / static_cast<double>(i + 1);
    out[i] = tail;
  }
  return out;
}

SeqVec majorant_seq(std::span<const double> a) {
  check_finite(a);
  SeqVec out(a.size());
  double run = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) {
    run = std::max(run, std::fabs(a[i]));
    out[i] = run;
  }
  return out;
}

SeqVec rearrange_seq(std::span<const double> a) {
  check_finite(a);
  SeqVec out(a.size());
  std::transform(a.begin(), a.end(), out.begin(), [](double x) { return std::fabs(x); });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SeqVec dilate_seq(std::span<const double> a, std::size_t m, DilationDirection dir) {
  check_finite(a);
  if (m == 0) {
    throw ArgumentError("dilate_seq: m must be >= 1");
  }
  if (dir == DilationDirection::expand) {
    SeqVec out;
    out.reserve(a.size() * m);
    for (double x : a) out.insert(out.end(), m, x);
    return out;
  }
  const std::size_t blocks = (a.size() + m - 1) / m;
  SeqVec out(blocks, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i / m] += a[i];
  for (double& x : out) x /= static_cast<double>(m);
  return out;
}

double base_norm_seq(const SeqSpaceSpec& spec, std::span<const double> a) {
  check_finite(a);
  const std::size_t n = a.size();
  if (spec.weight.available() < n &&
      (spec.base == SeqSpaceSpec::Base::lp || spec.base == SeqSpaceSpec::Base::ces_inf ||
       spec.base == SeqSpaceSpec::Base::tandori_l1)) {
    throw RangeError("weight has fewer values than the sequence length");
  }
  switch (spec.base) {
    case SeqSpaceSpec::Base::lp: {
      if (!(spec.p >= 1.0)) {
        throw ArgumentError("lp: p must be >= 1");
      }
      if (std::isinf(spec.p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]) * spec.weight.at(i + 1));
        return m;
      }
      if (spec.p == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]) * spec.weight.at(i + 1);
        return s;
      }
      // Scale by the max to avoid overflow in |x|^p.
      double scale = 0.0;
      for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(a[i]) * spec.weight.at(i + 1));
      if (scale == 0.0) return 0.0;
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(a[i]) * spec.weight.at(i + 1) / scale, spec.p);
      return scale * std::pow(s, 1.0 / spec.p);
    }
    case SeqSpaceSpec::Base::lorentz: {
      const ConcaveFn& phi = require_phi(spec);
      const SeqVec star = rearrange_seq(a);
      double s = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        s += star[k - 1] * (phi.eval(static_cast<double>(k + 1)) - phi.eval(static_cast<double>(k)));
      }
      return s;
    }
    case SeqSpaceSpec::Base::marcinkiewicz: {
      const ConcaveFn& phi = require_phi(spec);
      const SeqVec star = rearrange_seq(a);
      double prefix = 0.0;
      double best = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        prefix += star[k - 1];
        const double kk = static_cast<double>(k);
        best = std::max(best, phi.eval(kk) / kk * prefix);
      }
      return best;
    }
    case SeqSpaceSpec::Base::ces_inf: {
      double prefix = 0.0;
      double best = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        prefix += std::fabs(a[k - 1]);
        best = std::max(best, spec.weight.at(k) * prefix / static_cast<double>(k));
      }
      // v(n)/n = n^(alpha-1) grows past N when alpha > 1.
      if (spec.weight.is_power() && spec.weight.alpha() > 1.0 && prefix > 0.0) return kInf;
      return best;
    }
    case SeqSpaceSpec::Base::tandori_l1: {
      const SeqVec maj = majorant_seq(a);
      double s = 0.0;
      for (std::size_t k = 1; k <= n; ++k) s += maj[k - 1] * spec.weight.at(k);
      return s;
    }
  }
  return 0.0;
}

double cesaro_norm_seq(const SeqSpaceSpec& spec, std::span<const double> a) {
  return base_norm_seq(spec, cesaro_seq(a));
}

double tandori_norm_seq(const SeqSpaceSpec& spec, std::span<const double> a) {
  return base_norm_seq(spec, majorant_seq(a));
}

double norm_seq(const SeqSpaceSpec& spec, std::span<const double> a) {
  switch (spec.transform) {
    case SeqSpaceSpec::Transform::none:
      return base_norm_seq(spec, a);
    case SeqSpaceSpec::Transform::cesaro:
      return cesaro_norm_seq(spec, a);
    case SeqSpaceSpec::Transform::tandori:
      return tandori_norm_seq(spec, a);
  }
  return 0.0;
}

double fundamental_seq(const SeqSpaceSpec& spec, std::size_t n) {
  if (n == 0) {
    throw ArgumentError("fundamental_seq: n must be >= 1");
  }
  const SeqVec ones(n, 1.0);
  return norm_seq(spec, ones);
}

SeqVec unit_vector(std::size_t m, std::size_t len) {
  if (m == 0) {
    throw ArgumentError("unit_vector: index is 1-based");
  }
  SeqVec e(std::max(len, m), 0.0);
  e[m - 1] = 1.0;
  return e;
}

}  // namespace cesaro
