#include "cesaro/isomaps.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cesaro/errors.hpp"
#include "cesaro/rng.hpp"
#include "sampling.hpp"

namespace cesaro {

static_assert(std::numeric_limits<long double>::digits >= 64,
              "dyadic blocks need a 64-bit long double mantissa for exact inversion");

namespace {

namespace mp = boost::multiprecision;
using MpFloat = mp::cpp_bin_float_100;
using MpInt = mp::cpp_int;

constexpr double kRel = 1e-12;

void check_coefficients(std::span<const double> c, bool nonneg) {
  for (double v : c) {
    if (!std::isfinite(v)) throw ArgumentError("coefficients must be finite");
    if (nonneg && v < 0.0) throw ArgumentError("coefficients must be nonnegative");
  }
}

double sum_of(std::span<const double> c) {
  double s = 0.0;
  for (double v : c) s += v;
  return s;
}

// c_k 2^-k, exact up to underflow.
double weighted(std::span<const double> c, std::size_t k) { return std::ldexp(c[k], -static_cast<int>(k)); }

}  // namespace

SeqVec thm2_embed(std::span<const double> c) {
  if (c.empty()) throw ArgumentError("thm2_embed: need at least one coefficient");
  if (c.size() > kThm2DenseMax) {
    throw RangeError("thm2_embed: " + std::to_string(c.size()) + " coefficients exceed the dense limit " +
                     std::to_string(kThm2DenseMax) + "; use the sparse norm");
  }
  check_coefficients(c, true);
  const std::size_t n = c.size() - 1;
  SeqVec x(std::size_t{1} << n, 0.0);
  for (std::size_t i = 0; i <= n; ++i) x[(std::size_t{1} << i) - 1] = weighted(c, i);
  return x;
}

double thm2_norm_sparse(std::span<const double> c) {
  if (c.size() > 1000) throw RangeError("thm2_norm_sparse: at most 1000 coefficients");
  check_coefficients(c, false);
  double m = 0.0, s = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    m = std::max(m, std::fabs(weighted(c, i)));
    s += i == 0 ? m : std::ldexp(m, static_cast<int>(i) - 1);
  }
  return s;
}

IndexSelection thm2_select(std::span<const double> c) {
  if (c.empty()) throw ArgumentError("thm2_select: need at least one coefficient");
  check_coefficients(c, true);
  IndexSelection sel;
  std::size_t k = c.size() - 1;
  sel.I.push_back(k);
  for (;;) {
    const double cur = weighted(c, k);
    std::optional<std::size_t> next;
    for (std::size_t j = k; j-- > 0;) {
      if (cur < weighted(c, j)) {
        next = j;
        break;
      }
    }
    if (!next) break;
    k = *next;
    sel.I.push_back(k);
  }
  const std::size_t l = sel.I.size() - 1;
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t ki = sel.I[i], kn = sel.I[i + 1];
    double run = 0.0;
    for (std::size_t j = kn + 1; j <= ki; ++j) {
      sel.run_max = sel.run_max && weighted(c, ki) >= weighted(c, j);
      run += c[j];
    }
    sel.run_sums = sel.run_sums && run <= 2.0 * c[ki] * (1 + 1e-15);
    sel.strict_rise = sel.strict_rise && weighted(c, ki) < weighted(c, kn);
    if (c[ki] < 1.5 * c[kn]) sel.I1.push_back(ki);
  }
  double tail = 0.0;
  for (std::size_t j = 0; j <= sel.I[l]; ++j) {
    sel.last_max = sel.last_max && weighted(c, sel.I[l]) >= weighted(c, j);
    tail += c[j];
  }
  sel.run_sums = sel.run_sums && tail <= 2.0 * c[sel.I[l]] * (1 + 1e-15);
  return sel;
}

Thm2Bounds thm2_bounds(std::span<const double> c) {
  const IndexSelection sel = thm2_select(c);
  Thm2Bounds b;
  b.upper = sum_of(c);
  b.lower = b.upper / 36.0;
  b.norm = thm2_norm_sparse(c);
  double s = 0.0;
  for (std::size_t ki : sel.I1) {
    const auto pos = static_cast<std::size_t>(std::find(sel.I.begin(), sel.I.end(), ki) - sel.I.begin());
    s += c[sel.I[pos + 1]];
  }
  b.certificate_lb = c.back() + 0.25 * s;
  const double slack = 1 + kRel;
  b.holds = b.lower <= b.norm * slack && b.norm <= b.upper * slack && b.certificate_lb <= b.norm * slack;
  return b;
}

C0Check cor2_c0_check(std::span<const double> c) {
  if (c.empty()) throw ArgumentError("cor2_c0_check: need at least one coefficient");
  if (c.size() > kThm2DenseMax + 1) {
    throw RangeError("cor2_c0_check: at most " + std::to_string(kThm2DenseMax + 1) + " coefficients");
  }
  check_coefficients(c, false);
  const std::size_t n = c.size() - 1;
  SeqVec x(std::size_t{1} << n, 0.0);
  double mx = 0.0, prefix = 0.0, sparse = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    x[(std::size_t{1} << i) - 1] = std::ldexp(std::fabs(c[i]), static_cast<int>(i));
    mx = std::max(mx, std::fabs(c[i]));
    prefix += std::ldexp(std::fabs(c[i]), static_cast<int>(i));
    sparse = std::max(sparse, std::ldexp(prefix, -static_cast<int>(i)));
  }
  C0Check out;
  out.norm = base_norm_seq(SeqSpaceSpec::ces_inf(), x);
  if (std::fabs(out.norm - sparse) > kRel * std::max(1.0, sparse)) {
    throw InternalError("cor2_c0_check: dense and dyadic sup disagree");
  }
  out.max = mx;
  out.ratio = mx == 0.0 ? 0.0 : out.norm / mx;
  return out;
}

double DyadicBlocks::oplus_norm() const {
  long double s = 0.0L;
  for (const auto& blk : d) {
    long double m = 0.0L;
    for (long double v : blk) m = std::max(m, std::fabs(v));
    s += m;
  }
  return static_cast<double>(s);
}

DyadicBlocks cor3_T(std::span<const double> c) {
  check_coefficients(c, false);
  std::size_t m = 0;
  while ((std::size_t{2} << m) - 1 < c.size()) ++m;
  DyadicBlocks out;
  for (std::size_t n = 0; n <= m; ++n) {
    const std::size_t width = std::size_t{1} << n;
    std::vector<long double> blk(width, 0.0L);
    for (std::size_t j = 1; j <= width; ++j) {
      const std::size_t k = j - 1 + width;
      if (k <= c.size()) blk[j - 1] = static_cast<long double>(k) * static_cast<long double>(c[k - 1]);
    }
    out.d.push_back(std::move(blk));
  }
  return out;
}

SeqVec cor3_T_inv(const DyadicBlocks& blocks) {
  SeqVec c;
  for (std::size_t n = 0; n < blocks.d.size(); ++n) {
    const std::size_t width = std::size_t{1} << n;
    if (blocks.d[n].size() != width) throw ArgumentError("cor3_T_inv: block n must have 2^n entries");
    for (std::size_t j = 1; j <= width; ++j) {
      const std::size_t k = j - 1 + width;
      c.push_back(static_cast<double>(blocks.d[n][j - 1] / static_cast<long double>(k)));
    }
  }
  return c;
}

namespace {

MpFloat phi_mp(const ConcaveFn& phi, const MpInt& n) {
  const MpFloat t(n);
  switch (phi.kind()) {
    case ConcaveFn::Kind::power:
      if (phi.alpha() == 1.0) return t;
      return mp::pow(t, MpFloat(phi.alpha()));
    case ConcaveFn::Kind::affine:
      return MpFloat(phi.affine_intercept()) + MpFloat(phi.affine_slope()) * t;
    case ConcaveFn::Kind::piecewise_linear: {
      const auto& kn = phi.knots();
      if (t >= MpFloat(kn.back().t)) {
        return MpFloat(kn.back().value) + MpFloat(phi.tail_slope()) * (t - MpFloat(kn.back().t));
      }
      const double td = n.convert_to<double>();
      auto it = std::upper_bound(kn.begin(), kn.end(), td, [](double v, const Knot& k) { return v < k.t; });
      const Knot& hi = *it;
      const Knot& lo = *(it - 1);
      return MpFloat(lo.value) +
             (MpFloat(hi.value) - MpFloat(lo.value)) * (t - MpFloat(lo.t)) / (MpFloat(hi.t) - MpFloat(lo.t));
    }
  }
  return t;
}

}  // namespace

bool BlockScheme::invariant_holds() const {
  return std::all_of(invariant.begin(), invariant.end(), [](bool b) { return b; }) &&
         std::all_of(maximal.begin(), maximal.end(), [](bool b) { return b; });
}

std::optional<std::uint64_t> BlockScheme::boundary(std::size_t k) const {
  if (k == 0 || k > boundaries.size()) throw RangeError("block boundary index out of range");
  const MpInt v(boundaries[k - 1]);
  if (v > MpInt(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
  return v.convert_to<std::uint64_t>();
}

double BlockScheme::right_constant() const { return 2.0 / (phi2 - 1.0) + 4.0; }

BlockScheme thm5_blocks(const ConcaveFn& phi, std::size_t K) {
  if (phi.domain() != Domain::half_line) throw ArgumentError("thm5_blocks: phi must live on [0, inf)");
  if (phi.bounded()) throw DegenerateError("thm5_blocks: bounded phi (the space is l_inf)");
  if (std::fabs(phi.eval(1.0) - 1.0) > 1e-12) throw ArgumentError("thm5_blocks: phi must satisfy phi(1) = 1");
  if (K == 0 || K > 64) throw RangeError("thm5_blocks: need 1 <= K <= 64");
  BlockScheme out;
  out.phi2 = phi.eval(2.0);
  MpInt nk = 1;
  out.boundaries.push_back(nk.str());
  for (std::size_t k = 1; k <= K; ++k) {
    const MpFloat base = phi_mp(phi, nk);
    const MpFloat cap = mp::ldexp(MpFloat(1), static_cast<int>(k));
    // pow in 100 digits can overshoot an exact tie (sqrt(9) - 1 = 2) by an ulp
    const MpFloat cap_tie = cap * (1 + MpFloat("1e-90"));
    const auto fits = [&](const MpInt& i) { return phi_mp(phi, i) - base <= cap_tie; };
    MpInt lo = nk + 1;
    if (!fits(lo)) throw InternalError("thm5_blocks: phi(n+1) - phi(n) > 1 contradicts phi(1) = 1");
    MpInt step = 2;
    MpInt hi = nk + step;
    while (fits(hi)) {
      lo = hi;
      step *= 2;
      hi = nk + step;
    }
    while (hi - lo > 1) {
      const MpInt mid = (lo + hi) / 2;
      if (fits(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const MpFloat gap = phi_mp(phi, lo) - base;
    out.gaps.push_back(gap.convert_to<double>());
    out.invariant.push_back(cap / 2 <= gap && gap <= cap_tie);
    out.maximal.push_back(phi_mp(phi, lo + 1) - base > cap_tie);
    nk = lo;
    out.boundaries.push_back(nk.str());
  }
  return out;
}

double thm5_oplus_norm(const BlockScheme& scheme, std::span<const double> x) {
  const std::size_t N = x.size();
  const auto last = scheme.boundary(scheme.boundaries.size());
  if (last && *last < N) {
    throw RangeError("thm5_oplus_norm: section longer than the block scheme (n_{K+1} = " +
                     std::to_string(*last) + ")");
  }
  double s = 0.0;
  for (std::size_t k = 1; k <= scheme.K(); ++k) {
    const std::uint64_t a = *scheme.boundary(k);
    if (a > N) break;
    const auto b_opt = scheme.boundary(k + 1);
    const std::uint64_t b = b_opt ? std::min<std::uint64_t>(*b_opt, N) : N;
    double m = 0.0;
    for (std::uint64_t i = a; i <= b; ++i) m = std::max(m, std::fabs(x[i - 1]));
    s += std::ldexp(m, static_cast<int>(k));
  }
  return s;
}

VerifyReport thm5_check(const ConcaveFn& phi, std::size_t K, std::size_t n_max, std::size_t trials,
                        std::uint64_t seed) {
  const BlockScheme scheme = thm5_blocks(phi, K);
  VerifyReport rep;
  rep.suite = "thm5";
  rep.seed = seed;
  rep.tolerances = {{"relative", kRel}};
  {
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("thm5-blocks")).add(phi.describe()).add(std::uint64_t{K}).hex();
    double bad = 0.0;
    for (std::size_t k = 0; k < scheme.K(); ++k) bad += (scheme.invariant[k] && scheme.maximal[k]) ? 0.0 : 1.0;
    c.values = {{"K", static_cast<double>(K)}, {"violations", bad}};
    c.pass = bad == 0.0;
    rep.add(std::move(c));
  }
  const double C = scheme.right_constant();
  const auto spec = SeqSpaceSpec::lorentz(phi);
  const Rng base(seed, 0x7175);
  double max_right = 0.0, max_left = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const auto n = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n_max)));
    const SeqVec x = detail::random_seq(rng, n);
    const double oplus = thm5_oplus_norm(scheme, x);
    const double tl = tandori_norm_seq(spec, x);
    const double right = oplus / tl, left = tl / oplus;
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("thm5")).add(phi.describe()).add(x).hex();
    c.values = {{"oplus", oplus}, {"tandori_lorentz", tl}, {"right_constant", C}};
    c.ratios = {{"right", right}, {"left", left}};
    c.pass = right <= C * (1 + kRel);
    max_right = std::max(max_right, right);
    max_left = std::max(max_left, left);
    rep.add(std::move(c));
  }
  rep.summary = {{"right_constant", C},
                 {"max_right_ratio", max_right},
                 {"empirical_left_constant", max_left},
                 {"invariant_holds", scheme.invariant_holds() ? 1.0 : 0.0}};
  return rep;
}

VerifyReport thm4a_ratios(const ConcaveFn& phi, std::size_t n_max, std::size_t trials, std::uint64_t seed) {
  if (n_max == 0) throw ArgumentError("thm4a_ratios: N must be >= 1");
  VerifyReport rep;
  rep.suite = "thm4a";
  rep.seed = seed;
  const auto lorentz = SeqSpaceSpec::lorentz(phi);
  const auto marc = SeqSpaceSpec::marcinkiewicz(phi);
  const Rng base(seed, 0x4a4a);
  double lo1 = std::numeric_limits<double>::infinity(), hi1 = 0.0;
  double lo2 = std::numeric_limits<double>::infinity(), hi2 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const auto n = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n_max)));
    const SeqVec x = detail::random_seq(rng, n);
    const double ces = base_norm_seq(lorentz, cesaro_seq(x, 16 * n));
    double l1w = 0.0, linfw = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double p = phi.eval(static_cast<double>(k));
      l1w += std::fabs(x[k - 1]) * p / static_cast<double>(k);
      linfw = std::max(linfw, std::fabs(x[k - 1]) * p);
    }
    const double tm = tandori_norm_seq(marc, x);
    const double r1 = ces / l1w, r2 = tm / linfw;
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("thm4a")).add(phi.describe()).add(x).hex();
    c.values = {{"cesaro_lorentz", ces}, {"l1_phi_n_over_n", l1w}, {"tandori_marcinkiewicz", tm},
                {"linf_phi", linfw}};
    c.ratios = {{"cesaro_over_l1", r1}, {"tandori_over_linf", r2}};
    c.pass = std::isfinite(r1) && std::isfinite(r2) && r1 > 0.0 && r2 > 0.0;
    lo1 = std::min(lo1, r1);
    hi1 = std::max(hi1, r1);
    lo2 = std::min(lo2, r2);
    hi2 = std::max(hi2, r2);
    rep.add(std::move(c));
  }
  rep.summary = {{"cesaro_min", lo1}, {"cesaro_max", hi1}, {"tandori_min", lo2}, {"tandori_max", hi2}};
  return rep;
}

std::vector<double> haar_H(const StepFn& f, unsigned n) {
  if (f.domain() != FnDomain::unit) throw ArgumentError("haar_H: f must live on [0, 1]");
  if (n > 30) throw RangeError("haar_H: level at most 30");
  const std::size_t cells = std::size_t{1} << n;
  const double h = std::ldexp(1.0, -static_cast<int>(n));
  std::vector<double> out(cells, 0.0);
  const auto& x = f.breakpoints();
  for (std::size_t j = 0; j < f.cells(); ++j) {
    const double a = x[j], b = x[j + 1], c = f.values()[j];
    if (c == 0.0) continue;
    auto k = static_cast<std::size_t>(std::floor(std::ldexp(a, static_cast<int>(n))));
    for (; k < cells && static_cast<double>(k) * h < b; ++k) {
      const double lo = std::max(a, static_cast<double>(k) * h);
      const double hi = std::min(b, static_cast<double>(k + 1) * h);
      if (hi > lo) out[k] += c * (hi - lo);
    }
  }
  return out;
}

StepFn dyadic_T(std::span<const double> x) {
  const std::size_t cells = x.size();
  if (cells == 0 || (cells & (cells - 1)) != 0) throw ArgumentError("dyadic_T: length must be a power of 2");
  const int n = std::countr_zero(cells);
  std::vector<double> bps(cells + 1), vals(cells);
  for (std::size_t k = 0; k <= cells; ++k) bps[k] = std::ldexp(static_cast<double>(k), -n);
  for (std::size_t k = 0; k < cells; ++k) vals[k] = std::ldexp(x[k], n);
  return StepFn(bps, vals, FnDomain::unit);
}

std::optional<unsigned> dyadic_level(const StepFn& f) {
  for (unsigned n = 0; n <= 52; ++n) {
    bool ok = true;
    for (double b : f.breakpoints()) {
      const double s = std::ldexp(b, static_cast<int>(n));
      ok = ok && s == std::floor(s);
    }
    if (ok) return n;
  }
  return std::nullopt;
}

MartingaleCheck martingale_check(const StepFn& f, unsigned n_max) {
  MartingaleCheck out;
  out.f_norm = f.integral_abs();
  out.level = dyadic_level(f);
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto h = haar_H(f, n);
    double hn = 0.0;
    for (double v : h) hn += std::fabs(v);
    const double err = l1_distance(dyadic_T(h), f);
    out.h_norms.push_back(hn);
    out.errors.push_back(err);
    out.contraction = out.contraction && hn <= out.f_norm * (1 + kRel);
    if (out.level && n >= *out.level) out.exact_from_level = out.exact_from_level && err == 0.0;
    if (n > 0) out.monotone = out.monotone && err <= out.errors[n - 1] * (1 + kRel);
  }
  return out;
}

}  // namespace cesaro
