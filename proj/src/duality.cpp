#include "cesaro/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/rng.hpp"
#include "json.hpp"
#include "sampling.hpp"

namespace cesaro {

namespace {
constexpr double kPivotTol = 1e-12;
constexpr double kWitnessTol = 1e-10;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<double> abs_padded(std::span<const double> f, std::size_t n) {
  if (f.size() > n) {
    throw ArgumentError("dual_norm: vector longer than the ball section (" + std::to_string(f.size()) +
                        " > " + std::to_string(n) + ")");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::isfinite(f[i])) throw ArgumentError("dual_norm: entries must be finite");
    out[i] = std::fabs(f[i]);
  }
  return out;
}

std::vector<double> weight_values(const SeqWeight& w, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = w.at(k + 1);
    if (!(out[k] > 0.0) || !std::isfinite(out[k])) {
      throw ArgumentError("ball weights must be finite and strictly positive");
    }
  }
  return out;
}

// Rows whose slack vanishes at x.
std::vector<std::size_t> active_rows(const LinearProgram& lp, const std::vector<double>& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    double ax = 0.0, scale = std::fabs(lp.rhs[i]);
    for (std::size_t j = 0; j < x.size(); ++j) {
      ax += lp.rows[i][j] * x[j];
      scale = std::max(scale, std::fabs(lp.rows[i][j] * x[j]));
    }
    if (std::fabs(lp.rhs[i] - ax) <= kWitnessTol * std::max(1.0, scale)) out.push_back(i);
  }
  return out;
}

double dual_objective(const LinearProgram& lp, const LpSolution& s) {
  double v = 0.0;
  for (std::size_t i = 0; i < lp.rhs.size(); ++i) v += lp.rhs[i] * s.dual[i];
  return v;
}

}  // namespace

void LinearProgram::add_row(std::vector<double> a, double b) {
  if (a.size() != objective.size()) throw ArgumentError("LP row has the wrong length");
  rows.push_back(std::move(a));
  rhs.push_back(b);
}

std::string LinearProgram::to_json() const {
  nlohmann::ordered_json j;
  j["objective"] = objective;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    nlohmann::ordered_json r;
    r["a"] = rows[i];
    r["b"] = rhs[i];
    rs.push_back(std::move(r));
  }
  j["rows"] = std::move(rs);
  return j.dump() + "\n";
}

// Tableau in the usual dictionary form: row i < m reads
// x_B[i] = D[i][n] - sum_j D[i][j] x_N[j]; row m holds the negated reduced
// costs and the objective value in column n.
LpSolution simplex_solve(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.variables();
  if (lp.rhs.size() != m) throw ArgumentError("LP: rows and rhs differ in length");
  const std::size_t w = n + 1;
  std::vector<double> D((m + 1) * w, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rows[i].size() != n) throw ArgumentError("LP row has the wrong length");
    if (!(lp.rhs[i] >= 0.0) || !std::isfinite(lp.rhs[i])) {
      throw ArgumentError("LP: right-hand sides must be finite and >= 0");
    }
    std::copy(lp.rows[i].begin(), lp.rows[i].end(), D.begin() + static_cast<std::ptrdiff_t>(i * w));
    D[i * w + n] = lp.rhs[i];
  }
  for (std::size_t j = 0; j < n; ++j) D[m * w + j] = -lp.objective[j];

  std::vector<std::size_t> B(m), N(n);
  for (std::size_t i = 0; i < m; ++i) B[i] = n + i;
  for (std::size_t j = 0; j < n; ++j) N[j] = j;

  LpSolution sol;
  const std::size_t max_pivots = 50 * (m + n) + 1000;
  std::vector<std::size_t> nz;
  nz.reserve(w);
  for (;;) {
    // Bland: entering column with the smallest variable id.
    std::size_t s = kNone;
    const double* obj = &D[m * w];
    for (std::size_t j = 0; j < n; ++j) {
      if (obj[j] < -kPivotTol && (s == kNone || N[j] < N[s])) s = j;
    }
    if (s == kNone) break;
    std::size_t r = kNone;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double a = D[i * w + s];
      if (a <= kPivotTol) continue;
      const double ratio = D[i * w + n] / a;
      if (r == kNone || ratio < best || (ratio == best && B[i] < B[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == kNone) throw InternalError("simplex: LP is unbounded, the ball certificate failed");
    if (++sol.pivots > max_pivots) throw InternalError("simplex: pivot limit exceeded");

    double* pr = &D[r * w];
    const double inv = 1.0 / pr[s];
    nz.clear();
    for (std::size_t j = 0; j < w; ++j) {
      if (j != s && pr[j] != 0.0) nz.push_back(j);
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r) continue;
      double* pi = &D[i * w];
      const double a = pi[s];
      if (a == 0.0) continue;
      const double f = a * inv;
      for (std::size_t j : nz) pi[j] -= pr[j] * f;
      pi[s] = -f;
    }
    for (std::size_t j : nz) pr[j] *= inv;
    pr[s] = inv;
    std::swap(B[r], N[s]);
  }

  sol.value = D[m * w + n];
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (B[i] < n) sol.x[B[i]] = std::max(0.0, D[i * w + n]);
  }
  sol.dual.assign(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (N[j] >= n) sol.dual[N[j] - n] = D[m * w + j];
  }
  sol.basis = B;
  return sol;
}

BallSpec BallSpec::ces_inf(const SeqWeight& v, std::size_t n) {
  BallSpec b;
  b.kind = Kind::ces_inf;
  b.n = n;
  const auto vv = weight_values(v, n);
  b.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) b.weights[k] = static_cast<double>(k + 1) / vv[k];
  return b;
}

BallSpec BallSpec::ces_inf_from_w(const SeqWeight& w, std::size_t n) {
  BallSpec b;
  b.kind = Kind::ces_inf;
  b.n = n;
  const auto ww = weight_values(w, n);
  b.weights.resize(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) b.weights[k] = acc += ww[k];
  return b;
}

BallSpec BallSpec::tandori_l1(const SeqWeight& w, std::size_t n) {
  BallSpec b;
  b.kind = Kind::tandori_l1;
  b.n = n;
  b.weights = weight_values(w, n);
  return b;
}

BallSpec BallSpec::l1(std::size_t n) {
  BallSpec b;
  b.kind = Kind::l1;
  b.n = n;
  return b;
}

BallSpec BallSpec::linf(std::size_t n) {
  BallSpec b;
  b.kind = Kind::linf;
  b.n = n;
  return b;
}

BallSpec BallSpec::func_ces_inf(FuncWeight w) {
  BallSpec b;
  b.kind = Kind::func_ces_inf;
  b.fweight = std::move(w);
  return b;
}

std::string BallSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::ces_inf:
      out << "ces_inf_ball(N=" << n << ")";
      break;
    case Kind::tandori_l1:
      out << "tandori_l1_ball(N=" << n << ")";
      break;
    case Kind::l1:
      out << "l1_ball(N=" << n << ")";
      break;
    case Kind::linf:
      out << "linf_ball(N=" << n << ")";
      break;
    case Kind::func_ces_inf:
      out << "func_ces_inf_ball(" << fweight.describe() << ")";
      break;
  }
  return out.str();
}

LinearProgram ball_lp(const BallSpec& ball, std::span<const double> f) {
  if (ball.kind == BallSpec::Kind::func_ces_inf) {
    throw ArgumentError("func_ces_inf ball needs a step function");
  }
  const std::size_t n = ball.n;
  if (n == 0) throw ArgumentError("ball section must have N >= 1");
  const auto af = abs_padded(f, n);
  LinearProgram lp;
  switch (ball.kind) {
    case BallSpec::Kind::l1:
      lp.objective = af;
      lp.add_row(std::vector<double>(n, 1.0), 1.0);
      break;
    case BallSpec::Kind::linf:
      lp.objective = af;
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> a(n, 0.0);
        a[k] = 1.0;
        lp.add_row(std::move(a), 1.0);
      }
      break;
    case BallSpec::Kind::ces_inf:
      lp.objective = af;
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> a(n, 0.0);
        std::fill(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k + 1), 1.0);
        lp.add_row(std::move(a), ball.weights[k]);
      }
      break;
    case BallSpec::Kind::tandori_l1: {
      // variables g_1..g_N, u_1..u_N
      lp.objective.assign(2 * n, 0.0);
      std::copy(af.begin(), af.end(), lp.objective.begin());
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> a(2 * n, 0.0);
        a[k] = 1.0;
        a[n + k] = -1.0;
        lp.add_row(std::move(a), 0.0);
      }
      for (std::size_t k = 0; k + 1 < n; ++k) {
        std::vector<double> a(2 * n, 0.0);
        a[n + k + 1] = 1.0;
        a[n + k] = -1.0;
        lp.add_row(std::move(a), 0.0);
      }
      std::vector<double> a(2 * n, 0.0);
      std::copy(ball.weights.begin(), ball.weights.end(), a.begin() + static_cast<std::ptrdiff_t>(n));
      lp.add_row(std::move(a), 1.0);
      break;
    }
    case BallSpec::Kind::func_ces_inf:
      break;
  }
  return lp;
}

LinearProgram ball_lp(const BallSpec& ball, const StepFn& f) {
  if (ball.kind != BallSpec::Kind::func_ces_inf) {
    throw ArgumentError("sequence ball used with a step function");
  }
  const auto& x = f.breakpoints();
  const std::size_t k = f.cells();
  LinearProgram lp;
  lp.objective.resize(k);
  for (std::size_t j = 0; j < k; ++j) lp.objective[j] = std::fabs(f.values()[j]);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<double> a(k, 0.0);
    std::fill(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(j + 1), 1.0);
    lp.add_row(std::move(a), ball.fweight.cumulative(x[j + 1]));
  }
  return lp;
}

double ball_gauge(const BallSpec& ball, std::span<const double> g) {
  switch (ball.kind) {
    case BallSpec::Kind::l1: {
      double s = 0.0;
      for (double v : g) s += std::fabs(v);
      return s;
    }
    case BallSpec::Kind::linf: {
      double s = 0.0;
      for (double v : g) s = std::max(s, std::fabs(v));
      return s;
    }
    case BallSpec::Kind::ces_inf: {
      double s = 0.0, best = 0.0;
      for (std::size_t k = 0; k < g.size() && k < ball.n; ++k) {
        s += std::fabs(g[k]);
        best = std::max(best, s / ball.weights[k]);
      }
      return best;
    }
    case BallSpec::Kind::tandori_l1: {
      double run = 0.0, s = 0.0;
      for (std::size_t k = std::min(g.size(), ball.n); k-- > 0;) {
        run = std::max(run, std::fabs(g[k]));
        s += ball.weights[k] * run;
      }
      return s;
    }
    case BallSpec::Kind::func_ces_inf:
      throw ArgumentError("ball_gauge: use the function overload");
  }
  return 0.0;
}

DualWitness dual_norm(const BallSpec& ball, std::span<const double> f) {
  const LinearProgram lp = ball_lp(ball, f);
  const LpSolution sol = simplex_solve(lp);
  DualWitness out;
  out.g.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(ball.n));
  out.value = sol.value;
  for (std::size_t k = 0; k < f.size(); ++k) out.pairing += std::fabs(f[k]) * out.g[k];
  out.active_constraints = active_rows(lp, sol.x);
  out.violation = ball_gauge(ball, out.g) - 1.0;
  out.dual_bound = dual_objective(lp, sol);
  out.pivots = sol.pivots;
  return out;
}

DualWitness dual_norm(const BallSpec& ball, const StepFn& f) {
  const LinearProgram lp = ball_lp(ball, f);
  const LpSolution sol = simplex_solve(lp);
  DualWitness out;
  out.g = sol.x;
  out.value = sol.value;
  const auto& x = f.breakpoints();
  std::vector<double> dens(f.cells());
  double prefix = 0.0, gauge = 0.0;
  for (std::size_t j = 0; j < f.cells(); ++j) {
    out.pairing += std::fabs(f.values()[j]) * out.g[j];
    dens[j] = out.g[j] / (x[j + 1] - x[j]);
    prefix += out.g[j];
    gauge = std::max(gauge, prefix / lp.rhs[j]);
  }
  out.g_fn = StepFn(x, dens, f.domain(), f.length());
  out.active_constraints = active_rows(lp, sol.x);
  out.violation = gauge - 1.0;
  out.dual_bound = dual_objective(lp, sol);
  out.pivots = sol.pivots;
  return out;
}

namespace {

struct WitnessCheck {
  bool ok;
  double pairing_gap;
};

WitnessCheck check_witness(const DualWitness& d) {
  const double gap = std::fabs(d.pairing - d.value) / std::max(1.0, std::fabs(d.value));
  return {d.violation <= kWitnessTol && gap <= kWitnessTol, gap};
}

std::vector<double> alexiewicz_v(const SeqWeight& w, std::size_t n) {
  std::vector<double> v(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += w.at(k + 1);
    v[k] = static_cast<double>(k + 1) / acc;
  }
  return v;
}

double ratio_of(double lp, double closed) {
  if (lp == 0.0 && closed == 0.0) return 1.0;
  return lp / closed;
}

}  // namespace

VerifyReport verify_alexiewicz(const SeqWeight& w, std::size_t n_max, std::size_t trials,
                               std::uint64_t seed, double tol) {
  if (n_max == 0) throw ArgumentError("verify_alexiewicz: N must be >= 1");
  VerifyReport rep;
  rep.suite = "alexiewicz";
  rep.seed = seed;
  rep.tolerances = {{"relative_gap", tol}, {"witness", kWitnessTol}};
  const Rng base(seed, 0xa1e7);
  double max9 = 0.0, max10 = 0.0, max_viol = -1.0, max_pivots = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const auto n = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n_max)));
    const SeqVec f = detail::random_seq(rng, n);

    const auto v = SeqWeight::values(alexiewicz_v(w, n));
    const double ces = base_norm_seq(SeqSpaceSpec::ces_inf(v), f);
    const double tan = base_norm_seq(SeqSpaceSpec::tandori_l1(w), f);
    const DualWitness d9 = dual_norm(BallSpec::tandori_l1(w, n), f);
    const DualWitness d10 = dual_norm(BallSpec::ces_inf_from_w(w, n), f);
    const double gap9 = relative_gap(d9.value, ces);
    const double gap10 = relative_gap(d10.value, tan);
    const auto c9 = check_witness(d9);
    const auto c10 = check_witness(d10);

    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("alexiewicz")).add(w.describe()).add(f).hex();
    c.values = {{"n", static_cast<double>(n)},
                {"lp_tandori_ball", d9.value},
                {"ces_inf_norm", ces},
                {"lp_ces_inf_ball", d10.value},
                {"tandori_norm", tan},
                {"gap_ces_inf", gap9},
                {"gap_tandori", gap10},
                {"witness_violation", std::max(d9.violation, d10.violation)}};
    c.ratios = {{"ces_inf", ratio_of(d9.value, ces)}, {"tandori", ratio_of(d10.value, tan)}};
    c.pass = gap9 <= tol && gap10 <= tol && c9.ok && c10.ok;
    max9 = std::max(max9, gap9);
    max10 = std::max(max10, gap10);
    max_viol = std::max({max_viol, d9.violation, d10.violation});
    max_pivots = std::max({max_pivots, static_cast<double>(d9.pivots), static_cast<double>(d10.pivots)});
    rep.add(std::move(c));
  }
  rep.summary = {{"max_gap_ces_inf", max9},
                 {"max_gap_tandori", max10},
                 {"max_witness_violation", max_viol},
                 {"max_pivots", max_pivots}};
  return rep;
}

VerifyReport verify_weighted_function_duality(const FuncWeight& w, std::size_t cells,
                                              std::size_t trials, std::uint64_t seed, double tol) {
  if (cells == 0) throw ArgumentError("verify_weighted_function_duality: need >= 1 cell");
  VerifyReport rep;
  rep.suite = "weighted-func-duality";
  rep.seed = seed;
  rep.tolerances = {{"relative_gap", tol}, {"witness", kWitnessTol}};
  const Rng base(seed, 0xd0a1);
  const BallSpec ball = BallSpec::func_ces_inf(w);
  const auto tandori = FuncSpaceSpec::tandori_l1(w);
  double max_gap = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const StepFn f = detail::random_halfline_step(rng, cells);
    const DualWitness d = dual_norm(ball, f);
    const double exact = norm_fn(tandori, f);
    const double gap = relative_gap(d.value, exact);
    const auto wc = check_witness(d);
    CaseRecord c;
    c.inputs_digest = Digest()
                          .add(std::string("weighted-func-duality"))
                          .add(w.describe())
                          .add(f.breakpoints())
                          .add(f.values())
                          .hex();
    c.values = {{"cells", static_cast<double>(f.cells())},
                {"lp", d.value},
                {"tandori_l1", exact},
                {"gap", gap},
                {"witness_violation", d.violation}};
    c.ratios = {{"lp_over_exact", ratio_of(d.value, exact)}};
    c.pass = gap <= tol && wc.ok;
    max_gap = std::max(max_gap, gap);
    rep.add(std::move(c));
  }
  rep.summary = {{"max_gap", max_gap}};
  return rep;
}

std::string HolderSpec::describe() const {
  std::ostringstream out;
  switch (pair) {
    case HolderPair::l1_linf:
      out << "l1/linf";
      break;
    case HolderPair::lp_lq:
      out << "l" << p << "/l" << p / (p - 1.0);
      break;
    case HolderPair::ces_inf_tandori:
      out << "ces_inf(v)/tandori_l1(" << w.describe() << ")";
      break;
    case HolderPair::tandori_ces_inf:
      out << "tandori_l1(" << w.describe() << ")/ces_inf(v)";
      break;
    case HolderPair::func_ces_inf_tandori:
      out << "Ces_inf(v)/tandori_L1(" << fw.describe() << ")";
      break;
  }
  return out.str();
}

VerifyReport holder_check(const HolderSpec& spec, std::size_t trials, std::uint64_t seed, double tol) {
  if (spec.pair == HolderPair::lp_lq && !(spec.p > 1.0 && std::isfinite(spec.p))) {
    throw ArgumentError("holder_check: lp/lq needs 1 < p < inf");
  }
  if (spec.n == 0) throw ArgumentError("holder_check: N must be >= 1");
  VerifyReport rep;
  rep.suite = "holder";
  rep.seed = seed;
  rep.tolerances = {{"ratio_slack", tol}};
  const Rng base(seed, 0x401d + static_cast<std::uint64_t>(spec.pair));
  const std::string id = spec.describe();
  double worst = 0.0, max_lp_gap = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    double lhs = 0.0, nf = 0.0, ng = 0.0, lp_gap = 0.0;
    Digest dig;
    dig.add(std::string("holder")).add(id);
    if (spec.pair == HolderPair::func_ces_inf_tandori) {
      const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(spec.n)));
      const double len = std::exp2(rng.uniform(-3.0, 6.0));
      const auto grid = detail::random_grid(rng, k, len);
      auto fv = detail::random_values(rng, k);
      auto gv = detail::random_values(rng, k);
      if (t % 50 == 7) std::fill(fv.begin(), fv.end(), 0.0);
      const StepFn f(grid, fv, FnDomain::half_line), g(grid, gv, FnDomain::half_line);
      for (std::size_t j = 0; j < k; ++j) lhs += std::fabs(fv[j] * gv[j]) * (grid[j + 1] - grid[j]);
      nf = norm_fn(FuncSpaceSpec::ces_inf(spec.fw), f);
      ng = norm_fn(FuncSpaceSpec::tandori_l1(spec.fw), g);
      const double lp = dual_norm(BallSpec::func_ces_inf(spec.fw), g).value;
      lp_gap = relative_gap(lp, ng);
      dig.add(grid).add(fv).add(gv);
    } else {
      const auto n = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(spec.n)));
      SeqVec f = detail::random_seq(rng, n);
      const SeqVec g = detail::random_seq(rng, n);
      if (t % 50 == 7) std::fill(f.begin(), f.end(), 0.0);
      for (std::size_t k = 0; k < n; ++k) lhs += std::fabs(f[k] * g[k]);
      switch (spec.pair) {
        case HolderPair::l1_linf:
          nf = base_norm_seq(SeqSpaceSpec::lp(1.0), f);
          ng = base_norm_seq(SeqSpaceSpec::lp(std::numeric_limits<double>::infinity()), g);
          break;
        case HolderPair::lp_lq:
          nf = base_norm_seq(SeqSpaceSpec::lp(spec.p), f);
          ng = base_norm_seq(SeqSpaceSpec::lp(spec.p / (spec.p - 1.0)), g);
          break;
        case HolderPair::ces_inf_tandori: {
          nf = base_norm_seq(SeqSpaceSpec::ces_inf(SeqWeight::values(alexiewicz_v(spec.w, n))), f);
          ng = base_norm_seq(SeqSpaceSpec::tandori_l1(spec.w), g);
          lp_gap = relative_gap(dual_norm(BallSpec::ces_inf_from_w(spec.w, n), g).value, ng);
          break;
        }
        case HolderPair::tandori_ces_inf: {
          nf = base_norm_seq(SeqSpaceSpec::tandori_l1(spec.w), f);
          ng = base_norm_seq(SeqSpaceSpec::ces_inf(SeqWeight::values(alexiewicz_v(spec.w, n))), g);
          lp_gap = relative_gap(dual_norm(BallSpec::tandori_l1(spec.w, n), g).value, ng);
          break;
        }
        case HolderPair::func_ces_inf_tandori:
          break;
      }
      dig.add(f).add(g);
    }
    const double denom = nf * ng;
    const double ratio = denom == 0.0 ? 0.0 : lhs / denom;
    CaseRecord c;
    c.inputs_digest = dig.hex();
    c.values = {{"pairing", lhs}, {"norm_x", nf}, {"norm_dual", ng}, {"lp_gap", lp_gap}};
    c.ratios = {{"holder", ratio}};
    c.pass = ratio <= 1.0 + tol && lp_gap <= 1e-9;
    worst = std::max(worst, ratio);
    max_lp_gap = std::max(max_lp_gap, lp_gap);
    rep.add(std::move(c));
  }
  rep.summary = {{"max_ratio", worst}, {"max_lp_gap", max_lp_gap}};
  return rep;
}

}  // namespace cesaro
