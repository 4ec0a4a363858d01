#include "cesaro/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <map>

#include "cesaro/duality.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/isomaps.hpp"
#include "cesaro/rng.hpp"
#include "cesaro/seqspace.hpp"
#include "sampling.hpp"

namespace cesaro {
namespace {

constexpr double kRel = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct SuiteDef {
  std::size_t trials;
  std::function<VerifyReport(std::uint64_t, std::size_t)> run;
};

VerifyReport blank(const std::string& suite, std::uint64_t seed) {
  VerifyReport r;
  r.suite = suite;
  r.seed = seed;
  return r;
}

// Appends a sub-report; its summary keys get a label prefix.
void absorb(VerifyReport& into, const VerifyReport& part, const std::string& label) {
  for (const CaseRecord& c : part.cases) into.add(c);
  for (const auto& [k, v] : part.summary) into.summary[label + "." + k] = v;
  for (const auto& [k, v] : part.tolerances) into.tolerances[k] = v;
  into.overall = into.overall && part.overall;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t k) { return Rng::mix(seed + Rng::mix(k + 1)); }

std::string fmt(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a);
  return buf;
}

// Lacunary sandwich ---------------------------------------------------------

VerifyReport suite_thm2(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("thm2", seed);
  rep.tolerances = {{"relative", kRel}};
  const Rng base(seed, 0x7402);
  double min_ratio = kInf, max_dense_gap = 0.0, c0_lo = kInf, c0_hi = 0.0, violations = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const auto len = static_cast<std::size_t>(rng.integer(1, 31));
    // c_i 2^(s i) moves the weighted maxima around so the greedy runs vary
    const double s = rng.uniform(-0.5, 1.5);
    SeqVec c = detail::random_nonneg_seq(rng, len);
    for (std::size_t i = 0; i < len; ++i) c[i] *= std::exp2(s * static_cast<double>(i));
    const Thm2Bounds b = thm2_bounds(c);
    const IndexSelection sel = thm2_select(c);
    CaseRecord rec;
    rec.inputs_digest = Digest().add(std::string("thm2")).add(c).hex();
    rec.values = {{"lower", b.lower},
                  {"norm", b.norm},
                  {"upper", b.upper},
                  {"certificate_lb", b.certificate_lb},
                  {"indices", static_cast<double>(sel.I.size())}};
    rec.ratios = {{"norm_over_sum", b.norm / b.upper}};
    rec.pass = b.holds && sel.holds();
    if (len <= kThm2DenseMax) {
      // long double sum of the dense majorant; 2^15 terms in double drift by ~1e-12
      const SeqVec maj = majorant_seq(thm2_embed(c));
      long double acc = 0.0L;
      for (double v : maj) acc += v;
      const double dense = static_cast<double>(acc);
      const double gap = relative_gap(dense, b.norm);
      rec.values["dense_gap"] = gap;
      rec.pass = rec.pass && gap <= kRel;
      max_dense_gap = std::max(max_dense_gap, gap);
      const C0Check z = cor2_c0_check(c);
      rec.values["c0_norm"] = z.norm;
      rec.values["c0_max"] = z.max;
      c0_lo = std::min(c0_lo, z.ratio);
      c0_hi = std::max(c0_hi, z.ratio);
    }
    if (!rec.pass) violations += 1.0;
    min_ratio = std::min(min_ratio, b.norm / b.upper);
    rep.add(std::move(rec));
  }
  rep.summary = {{"violations", violations},
                 {"min_norm_over_sum", min_ratio},
                 {"lower_constant", 1.0 / 36.0},
                 {"max_dense_gap", max_dense_gap},
                 {"c0_min_ratio", c0_lo},
                 {"c0_max_ratio", c0_hi}};
  return rep;
}

// Dyadic block operator -----------------------------------------------------

VerifyReport suite_cor3(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("cor3", seed);
  rep.tolerances = {{"relative", kRel}};
  const Rng base(seed, 0xc073);
  const auto tl1 = SeqSpaceSpec::tandori_l1();
  double lo = kInf, hi = 0.0, inverse_failures = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const auto n = static_cast<std::size_t>(rng.integer(1, 1023));
    SeqVec c(n);
    for (double& v : c) v = rng.bernoulli(0.3) ? 0.0 : rng.uniform() * std::exp2(rng.uniform(-20.0, 20.0));
    const DyadicBlocks T = cor3_T(c);
    const double tc = T.oplus_norm();
    const double nc = tandori_norm_seq(tl1, c);
    const SeqVec back = cor3_T_inv(T);
    const bool exact = back.size() >= n && std::memcmp(back.data(), c.data(), n * sizeof(double)) == 0 &&
                       std::all_of(back.begin() + static_cast<std::ptrdiff_t>(n), back.end(),
                                   [](double v) { return v == 0.0; });
    CaseRecord rec;
    rec.inputs_digest = Digest().add(std::string("cor3")).add(c).hex();
    rec.values = {{"tandori", nc}, {"oplus", tc}, {"inverse_exact", exact ? 1.0 : 0.0}};
    const double r = tc > 0.0 ? nc / tc : 1.0;
    rec.ratios = {{"tandori_over_oplus", r}};
    rec.pass = exact && tc / 72.0 <= nc * (1 + kRel) && nc <= 2.0 * tc * (1 + kRel);
    if (!exact) inverse_failures += 1.0;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    rep.add(std::move(rec));
  }
  rep.summary = {{"min_ratio", lo}, {"max_ratio", hi}, {"inverse_failures", inverse_failures}};
  return rep;
}

// Lorentz blocks and coincidence ratios -------------------------------------

VerifyReport suite_thm5(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("thm5", seed);
  std::uint64_t k = 0;
  for (double a : {0.3, 0.5, 0.7}) {
    absorb(rep, thm5_check(ConcaveFn::power(a), 40, 512, trials, sub_seed(seed, k++)), "power" + fmt(a));
  }
  return rep;
}

VerifyReport suite_thm4a(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("thm4a", seed);
  std::uint64_t k = 0;
  for (double a : {0.3, 0.5, 0.7}) {
    absorb(rep, thm4a_ratios(ConcaveFn::power(a), 256, trials, sub_seed(seed, k++)), "power" + fmt(a));
  }
  return rep;
}

// Weighted partitions -------------------------------------------------------

// Step function supported in [lo, hi] with log-uniform breakpoints.
StepFn window_step(Rng& rng, double lo, double hi, double length) {
  const int m = static_cast<int>(rng.integer(1, 12));
  std::vector<double> cuts;
  for (int k = 0; k <= m; ++k) cuts.push_back(std::exp(rng.uniform(std::log(lo), std::log(hi))));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> x{0.0}, v;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (cuts[k] <= x.back()) continue;
    x.push_back(cuts[k]);
    v.push_back(k == 0 ? 0.0 : detail::random_entry(rng));
  }
  if (x.size() < 3 || std::all_of(v.begin(), v.end(), [](double y) { return y == 0.0; })) {
    x = {0.0, lo, hi};
    v = {0.0, 1.0};
  }
  return StepFn(x, v, FnDomain::half_line, length);
}

VerifyReport suite_prop6(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("prop6", seed);
  constexpr double kResidual = 1e-9;
  constexpr double kLimit = 0x1.0p30;
  rep.tolerances = {{"residual", kResidual}, {"relative", kRel}};
  struct Case {
    std::string id;
    FuncWeight w;
  };
  const std::vector<Case> weights{{"unit", FuncWeight()}, {"inv_sqrt", FuncWeight::power(0.5, -0.5)}};
  for (std::size_t wi = 0; wi < weights.size(); ++wi) {
    const FuncPartition part = prop6_partition(weights[wi].w, 2.0, -10, 10, kLimit);
    const double res = part.max_relative_residual();
    CaseRecord pc;
    pc.inputs_digest = Digest().add(std::string("prop6-partition")).add(weights[wi].id).hex();
    pc.values = {{"max_relative_residual", res}, {"scale", part.scale}, {"t_lo", part.points.front()},
                 {"t_hi", part.points.back()}};
    pc.pass = res <= kResidual;
    rep.add(std::move(pc));

    const Rng base(seed, 0x6060 + wi);
    double right_max = 0.0, left_max = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = base.split(t);
      const StepFn f = window_step(rng, part.points.front(), part.points.back(), kLimit);
      CaseRecord rec;
      rec.inputs_digest = Digest().add(std::string("prop6")).add(weights[wi].id).add(f.breakpoints()).add(f.values()).hex();
      rec.pass = true;
      for (double p : {1.0, 2.0}) {
        const double lhs = std::pow(oplus_norm_fn(part, f, p), p);
        const double tn = std::pow(tandori_norm_fn(FuncSpaceSpec::lp(p, part.weight), f), p);
        const double right = lhs / (part.ratio * tn);
        const std::string tag = p == 1.0 ? "p1" : "p2";
        rec.values["oplus_pow_" + tag] = lhs;
        rec.values["tandori_pow_" + tag] = tn;
        rec.ratios["right_" + tag] = right;
        rec.ratios["left_" + tag] = tn / lhs;
        rec.pass = rec.pass && right <= 1.0 + kRel;
        right_max = std::max(right_max, right);
        left_max = std::max(left_max, tn / lhs);
      }
      rep.add(std::move(rec));
    }
    rep.summary[weights[wi].id + ".max_residual"] = res;
    rep.summary[weights[wi].id + ".max_right_ratio"] = right_max;
    rep.summary[weights[wi].id + ".empirical_left_constant"] = left_max;
  }
  return rep;
}

// Interval thinning ---------------------------------------------------------

VerifyReport suite_prop8(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("prop8", seed);
  rep.tolerances = {{"relative", kRel}};
  const ConcaveFn phi = ConcaveFn::power(0.5);
  const Conjugate ps = psi(phi);
  const auto psi_fn = [&ps](double t) { return ps(t); };

  std::vector<Interval> dec, inc;
  for (int n = 1; n <= 12; ++n) dec.push_back({std::ldexp(1.0, -2 * n - 1), std::ldexp(1.0, -2 * n)});
  for (int n = 1; n <= 8; ++n) inc.push_back({std::ldexp(1.0, 2 * n), std::ldexp(1.0, 2 * n + 1)});

  std::uint64_t k = 0;
  for (const auto& [label, list] : {std::pair{std::string("decreasing"), dec}, std::pair{std::string("increasing"), inc}}) {
    const ThinResult thin = prop8_thin(list, psi_fn);
    // recheck the certificate from scratch on the emitted sublist
    bool ok = true;
    const auto& kept = thin.intervals;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      double s = 0.0;
      if (thin.decreasing) {
        for (std::size_t j = i + 1; j < kept.size(); ++j) s += ps(kept[j].b);
      } else {
        for (std::size_t j = 0; j < i; ++j) s += ps(kept[j].b);
      }
      ok = ok && s <= ps(kept[i].a);
    }
    for (const auto& c : thin.certificate) ok = ok && c.holds;
    CaseRecord tc;
    tc.inputs_digest = Digest().add(std::string("prop8-thin")).add(label).hex();
    tc.values = {{"input", static_cast<double>(list.size())},
                 {"kept", static_cast<double>(kept.size())},
                 {"surplus", thin.surplus}};
    tc.pass = ok;
    rep.add(std::move(tc));
    absorb(rep, verify_block_c0(phi, kept, trials, sub_seed(seed, k++)), label);
  }
  return rep;
}

// Cesaro-Lorentz embedding --------------------------------------------------

VerifyReport suite_thm8(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("thm8", seed);
  constexpr double kAdd = 1e-7;
  constexpr double kAnchor = 1e-9;
  rep.tolerances = {{"additive", kAdd}, {"anchor", kAnchor}};
  {
    // alpha = 1: w(t) = ln(1/t)
    const ConcaveFn id = ConcaveFn::power(1.0, Domain::unit_interval);
    double worst = 0.0;
    for (int k = 1; k <= 60; ++k) {
      const double t = std::exp2(-0.5 * k);
      const double err = std::fabs(thm8_weight(id, t) - std::log(1.0 / t));
      worst = std::max(worst, err);
    }
    for (double t : {0.3, 0.6, 0.9, 0.99}) worst = std::max(worst, std::fabs(thm8_weight(id, t) - std::log(1.0 / t)));
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("thm8-anchor")).hex();
    c.values = {{"max_abs_error", worst}};
    c.pass = worst <= kAnchor;
    rep.add(std::move(c));
    rep.summary["anchor_max_error"] = worst;
  }
  std::uint64_t k = 0;
  for (double a : {0.3, 0.5, 0.7}) {
    const ConcaveFn phi = ConcaveFn::power(a, Domain::unit_interval);
    const Rng base(sub_seed(seed, k++), 0x7808);
    double reverse = 0.0, slack = kInf;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = base.split(t);
      const StepFn f = detail::random_unit_step(rng, 32);
      const double lhs = cesaro_lorentz_norm(phi, f);
      const double rhs = thm8_pairing(phi, f);
      CaseRecord c;
      c.inputs_digest = Digest().add(std::string("thm8")).add(a).add(f.breakpoints()).add(f.values()).hex();
      c.values = {{"cesaro_lorentz", lhs}, {"weighted_l1", rhs}};
      c.ratios = {{"embedding", lhs / rhs}, {"reverse", rhs / lhs}};
      c.pass = lhs <= rhs + kAdd && std::isfinite(rhs / lhs);
      reverse = std::max(reverse, rhs / lhs);
      slack = std::min(slack, rhs - lhs);
      rep.add(std::move(c));
    }
    rep.summary["power" + fmt(a) + ".max_reverse_ratio"] = reverse;
    rep.summary["power" + fmt(a) + ".min_slack"] = slack;
  }
  return rep;
}

// Duality ------------------------------------------------------------------------

VerifyReport suite_alexiewicz(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("alexiewicz", seed);
  std::vector<double> geo(256);
  for (std::size_t n = 0; n < geo.size(); ++n) geo[n] = std::ldexp(1.0, static_cast<int>(n));
  const std::vector<std::pair<std::string, SeqWeight>> weights{
      {"unit", SeqWeight()}, {"power-0.5", SeqWeight::power(-0.5)}, {"geometric", SeqWeight::values(geo)}};
  std::uint64_t k = 0;
  for (const auto& [id, w] : weights) absorb(rep, verify_alexiewicz(w, 256, trials, sub_seed(seed, k++)), id);
  return rep;
}

VerifyReport suite_func_duality(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("weighted-func-duality", seed);
  const std::vector<std::pair<std::string, FuncWeight>> weights{
      {"unit", FuncWeight()},
      {"inv_sqrt", FuncWeight::power(1.0, -0.5)},
      {"step", FuncWeight::step({0.0, 0.3, 0.6}, {2.0, 0.5})}};
  std::uint64_t k = 0;
  for (const auto& [id, w] : weights) {
    absorb(rep, verify_weighted_function_duality(w, 256, trials, sub_seed(seed, k++)), id);
  }
  return rep;
}

VerifyReport suite_holder(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("holder", seed);
  std::vector<std::pair<std::string, HolderSpec>> specs;
  const auto make = [](HolderPair pair, double p, SeqWeight w) {
    HolderSpec s;
    s.pair = pair;
    s.p = p;
    s.w = std::move(w);
    return s;
  };
  specs.push_back({"l1_linf", make(HolderPair::l1_linf, 2.0, {})});
  for (double p : {1.5, 2.0, 3.0}) specs.push_back({"lp_lq" + fmt(p), make(HolderPair::lp_lq, p, {})});
  for (const auto& [id, w] : {std::pair{std::string("unit"), SeqWeight()},
                              std::pair{std::string("power-0.5"), SeqWeight::power(-0.5)}}) {
    specs.push_back({"ces_inf_tandori." + id, make(HolderPair::ces_inf_tandori, 2.0, w)});
    specs.push_back({"tandori_ces_inf." + id, make(HolderPair::tandori_ces_inf, 2.0, w)});
  }
  for (const auto& [id, w] : {std::pair{std::string("unit"), FuncWeight()},
                              std::pair{std::string("inv_sqrt"), FuncWeight::power(1.0, -0.5)}}) {
    HolderSpec s = make(HolderPair::func_ces_inf_tandori, 2.0, {});
    s.fw = w;
    specs.push_back({"func_ces_inf_tandori." + id, s});
  }
  std::uint64_t k = 0;
  double worst = 0.0;
  for (const auto& [id, s] : specs) {
    const VerifyReport part = holder_check(s, trials, sub_seed(seed, k++));
    absorb(rep, part, id);
    worst = std::max(worst, part.summary.at("max_ratio"));
  }
  rep.summary["max_ratio"] = worst;
  return rep;
}

// Dyadic averaging --------------------------------------------------------------

VerifyReport suite_haar(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("haar", seed);
  rep.tolerances = {{"relative", kRel}};
  constexpr unsigned kLevels = 12;
  const Rng base(seed, 0x4aa7);
  double nonmonotone = 0.0, max_final = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const bool dyadic = t % 2 == 0;
    StepFn f = StepFn::zero();
    if (dyadic) {
      const auto lev = static_cast<unsigned>(rng.integer(0, 10));
      const std::size_t cells = std::size_t{1} << lev;
      std::vector<double> x(cells + 1), v(cells);
      for (std::size_t j = 0; j <= cells; ++j) x[j] = std::ldexp(static_cast<double>(j), -static_cast<int>(lev));
      const bool nonneg = rng.bernoulli(0.5);
      for (double& y : v) y = nonneg ? std::fabs(detail::random_entry(rng)) : detail::random_entry(rng);
      f = StepFn(x, v);
    } else {
      f = detail::random_unit_step(rng, 24);
    }
    const MartingaleCheck m = martingale_check(f, kLevels);
    bool iso = true;
    bool nonneg = std::all_of(f.values().begin(), f.values().end(), [](double v) { return v >= 0.0; });
    if (nonneg) {
      for (double h : m.h_norms) iso = iso && std::fabs(h - m.f_norm) <= kRel * std::max(1.0, m.f_norm) * 16;
    }
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("haar")).add(f.breakpoints()).add(f.values()).hex();
    c.values = {{"f_norm", m.f_norm},
                {"final_error", m.errors.back()},
                {"level", m.level ? static_cast<double>(*m.level) : -1.0},
                {"monotone", m.monotone ? 1.0 : 0.0}};
    if (m.f_norm > 0.0) c.ratios = {{"final_error_over_norm", m.errors.back() / m.f_norm}};
    c.pass = m.contraction && m.exact_from_level && iso;
    if (!m.monotone) nonmonotone += 1.0;
    if (m.f_norm > 0.0) max_final = std::max(max_final, m.errors.back() / m.f_norm);
    rep.add(std::move(c));
  }
  rep.summary = {{"nonmonotone_cases", nonmonotone}, {"max_final_relative_error", max_final}};
  return rep;
}

// Indices ---------------------------------------------------------------------------

VerifyReport suite_indices(std::uint64_t seed, std::size_t) {
  VerifyReport rep = blank("indices", seed);
  constexpr double kIndex = 0.02;
  constexpr double kC = 1e-6;
  rep.tolerances = {{"index", kIndex}, {"q_constant", kC}};
  double worst_index = 0.0, worst_c = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double a = 0.1 * k;
    const ConcaveFn phi = ConcaveFn::power(a);
    const IndexEstimate e = estimate_indices(phi);
    const QCheck q = check_q_less_one(phi);
    const double dp = std::fabs(e.p_lower - a), dq = std::fabs(e.q_upper - a);
    const double dc = std::fabs(q.best_C - 1.0 / (1.0 - a));
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("indices")).add(a).hex();
    c.values = {{"alpha", a}, {"p", e.p_lower}, {"q", e.q_upper}, {"best_C", q.best_C},
                {"expected_C", 1.0 / (1.0 - a)}};
    c.ratios = {{"p_over_alpha", e.p_lower / a}, {"q_over_alpha", e.q_upper / a}};
    c.pass = dp <= kIndex && dq <= kIndex && dc <= kC && q.holds;
    worst_index = std::max({worst_index, dp, dq});
    worst_c = std::max(worst_c, dc);
    rep.add(std::move(c));
  }
  rep.summary = {{"max_index_error", worst_index}, {"max_C_error", worst_c}};
  return rep;
}

// Embeddings ---------------------------------------------------------------------------

VerifyReport suite_embeddings(std::uint64_t seed, std::size_t trials) {
  VerifyReport rep = blank("embeddings", seed);
  rep.tolerances = {{"relative", kRel}};
  const ConcaveFn sq = ConcaveFn::power(0.5);
  const std::vector<std::pair<std::string, SeqSpaceSpec>> seq_specs{
      {"l1", SeqSpaceSpec::lp(1.0)},
      {"l2", SeqSpaceSpec::lp(2.0)},
      {"linf", SeqSpaceSpec::lp(kInf)},
      {"l2_pow0.5", SeqSpaceSpec::lp(2.0, SeqWeight::power(0.5))},
      {"lorentz0.5", SeqSpaceSpec::lorentz(sq)},
      {"marcinkiewicz0.5", SeqSpaceSpec::marcinkiewicz(sq)}};
  const std::vector<std::pair<std::string, FuncSpaceSpec>> fn_specs{
      {"L1", FuncSpaceSpec::lp(1.0)},
      {"L2", FuncSpaceSpec::lp(2.0)},
      {"lorentz0.5", FuncSpaceSpec::lorentz(sq)},
      {"marcinkiewicz0.5", FuncSpaceSpec::marcinkiewicz(sq)}};

  // tilde X -> X (all specs) and X -> CX for lp, p > 1, with Hardy's constant p'
  const Rng base(seed, 0xe3b);
  double min_tandori = kInf, max_hardy = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.split(t);
    const auto n = static_cast<std::size_t>(rng.integer(1, 256));
    const SeqVec a = detail::random_seq(rng, n);
    const StepFn f = detail::random_halfline_step(rng, 16);
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("embeddings")).add(a).add(f.breakpoints()).add(f.values()).hex();
    c.pass = true;
    for (const auto& [id, spec] : seq_specs) {
      const double b = base_norm_seq(spec, a), tn = tandori_norm_seq(spec, a);
      c.ratios["seq." + id + ".tandori_over_base"] = tn / b;
      c.pass = c.pass && b <= tn * (1 + kRel);
      min_tandori = std::min(min_tandori, tn / b);
    }
    for (double p : {2.0, 3.0}) {
      const auto spec = SeqSpaceSpec::lp(p);
      const double r = cesaro_norm_seq(spec, a) / base_norm_seq(spec, a);
      c.ratios["seq.l" + fmt(p) + ".cesaro_over_base"] = r;
      c.pass = c.pass && r <= p / (p - 1.0) * (1 + kRel);
      max_hardy = std::max(max_hardy, r * (p - 1.0) / p);
    }
    for (const auto& [id, spec] : fn_specs) {
      const double b = base_norm_fn(spec, f), tn = tandori_norm_fn(spec, f);
      c.ratios["fn." + id + ".tandori_over_base"] = tn / b;
      c.pass = c.pass && b <= tn * (1 + kRel);
      min_tandori = std::min(min_tandori, tn / b);
    }
    rep.add(std::move(c));
  }

  // ||chi_[a,b]|| in tilde X equals phi_X(b) for symmetric X
  double worst_interval = 0.0;
  for (const auto& [id, spec] : seq_specs) {
    if (!spec.symmetric()) continue;
    double worst = 0.0;
    for (std::size_t b = 1; b <= 64; ++b) {
      for (std::size_t a = 1; a <= b; ++a) {
        SeqVec chi(b, 0.0);
        std::fill(chi.begin() + static_cast<std::ptrdiff_t>(a - 1), chi.end(), 1.0);
        worst = std::max(worst, relative_gap(tandori_norm_seq(spec, chi), fundamental_seq(spec, b)));
      }
    }
    CaseRecord c;
    c.inputs_digest = Digest().add(std::string("interval-identity")).add(id).hex();
    c.values = {{"max_relative_gap", worst}};
    c.pass = worst <= kRel;
    worst_interval = std::max(worst_interval, worst);
    rep.add(std::move(c));
  }
  rep.summary = {{"min_tandori_over_base", min_tandori},
                 {"max_cesaro_over_hardy", max_hardy},
                 {"max_interval_gap", worst_interval}};
  return rep;
}

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> r{
      {"thm2", {10000, suite_thm2}},
      {"cor3", {10000, suite_cor3}},
      {"thm5", {1000, suite_thm5}},
      {"thm4a", {1000, suite_thm4a}},
      {"prop6", {1000, suite_prop6}},
      {"prop8", {1000, suite_prop8}},
      {"thm8", {1000, suite_thm8}},
      {"alexiewicz", {1000, suite_alexiewicz}},
      {"weighted-func-duality", {200, suite_func_duality}},
      {"holder", {1000, suite_holder}},
      {"haar", {1000, suite_haar}},
      {"indices", {1, suite_indices}},
      {"embeddings", {1000, suite_embeddings}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm2",  "cor3",       "thm5",       "thm4a",
                                              "prop6", "prop8",      "thm8",       "alexiewicz",
                                              "weighted-func-duality", "holder",   "haar",
                                              "indices", "embeddings"};
  return names;
}

bool is_suite(const std::string& name) { return registry().count(name) != 0; }

std::size_t default_trials(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ArgumentError("unknown suite '" + name + "'");
  return it->second.trials;
}

VerifyReport run_suite(const std::string& name, std::uint64_t seed, std::size_t trials) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ArgumentError("unknown suite '" + name + "'");
  VerifyReport rep = it->second.run(seed, trials == 0 ? it->second.trials : trials);
  rep.suite = name;
  rep.seed = seed;
  return rep;
}

VerifyReport verify_block_c0(const ConcaveFn& phi, const std::vector<Interval>& kept, std::size_t trials,
                             std::uint64_t seed) {
  VerifyReport rep = blank("prop8", seed);
  rep.tolerances = {{"relative", kRel}};
  double worst = 0.0, left_violations = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto parts = random_blocks(kept, seed, t);
    std::vector<double> norms;
    for (const StepFn& x : parts) norms.push_back(cesaro_marcinkiewicz_norm(phi, x));
    std::vector<StepFn> prefix;
    double mx = 0.0, right = 0.0;
    bool left = true;
    Digest d;
    d.add(std::string("prop8-blocks"));
    for (std::size_t m = 0; m < parts.size(); ++m) {
      prefix.push_back(parts[m]);
      d.add(parts[m].breakpoints()).add(parts[m].values());
      mx = std::max(mx, norms[m]);
      const double total = cesaro_marcinkiewicz_norm(phi, sum_disjoint(prefix));
      left = left && mx <= total * (1 + kRel);
      right = std::max(right, total / mx);
    }
    CaseRecord c;
    c.inputs_digest = d.hex();
    c.values = {{"blocks", static_cast<double>(parts.size())}, {"max_block_norm", mx}};
    c.ratios = {{"sum_over_max", right}};
    c.pass = left && std::isfinite(right);
    if (!left) left_violations += 1.0;
    worst = std::max(worst, right);
    rep.add(std::move(c));
  }
  rep.summary = {{"empirical_right_constant", worst}, {"left_violations", left_violations}};
  return rep;
}

}  // namespace cesaro
