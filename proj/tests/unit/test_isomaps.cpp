#include <algorithm>
#include <cmath>
#include <cstring>

#include "cesaro/errors.hpp"
#include "cesaro/isomaps.hpp"
#include "cesaro/rng.hpp"
#include "doctest.h"

using namespace cesaro;

namespace {

// sum_m max_{k >= m} |x_k| by the definition.
double tandori_brute(const SeqVec& x) {
  double s = 0.0;
  for (std::size_t m = 0; m < x.size(); ++m) {
    double best = 0.0;
    for (std::size_t k = m; k < x.size(); ++k) best = std::max(best, std::fabs(x[k]));
    s += best;
  }
  return s;
}

std::vector<double> random_coeffs(Rng& rng, std::size_t len) {
  std::vector<double> c(len);
  const int mode = static_cast<int>(rng.integer(0, 3));
  for (std::size_t i = 0; i < len; ++i) {
    switch (mode) {
      case 0:
        c[i] = rng.uniform();
        break;
      case 1:
        c[i] = std::exp2(rng.uniform(-12.0, 12.0));
        break;
      case 2:
        c[i] = std::ldexp(rng.uniform(0.5, 1.0), static_cast<int>(i));  // weighted values near flat
        break;
      default:
        c[i] = rng.bernoulli(0.4) ? rng.uniform() : 0.0;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("lacunary embedding examples") {
  CHECK(thm2_embed(std::vector<double>{1.0}) == SeqVec{1.0});
  CHECK(thm2_embed(std::vector<double>{1.0, 1.0}) == SeqVec{1.0, 0.5});
  std::vector<double> last(6, 0.0);
  last.back() = 1.0;
  const SeqVec x = thm2_embed(last);
  CHECK(x.size() == 32);
  CHECK(x[31] == 1.0 / 32.0);
  CHECK(tandori_norm_seq(SeqSpaceSpec::tandori_l1(), x) == 1.0);
  CHECK(thm2_norm_sparse(last) == 1.0);
  CHECK_THROWS_AS(thm2_embed(std::vector<double>(16, 1.0)), RangeError);
  CHECK_THROWS_AS(thm2_embed(std::vector<double>{-1.0}), ArgumentError);
}

TEST_CASE("sparse lacunary norm matches the dense definition") {
  Rng rng(50, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto len = static_cast<std::size_t>(rng.integer(1, 12));
    const auto c = random_coeffs(rng, len);
    const SeqVec x = thm2_embed(c);
    CHECK(thm2_norm_sparse(c) == doctest::Approx(tandori_brute(x)).epsilon(1e-12));
  }
}

TEST_CASE("greedy index selection examples") {
  CHECK(thm2_select(std::vector<double>{1.0, 0.0, 0.0}).I == std::vector<std::size_t>{2, 0});
  CHECK(thm2_select(std::vector<double>{1.0, 1.0, 1.0}).I == std::vector<std::size_t>{2, 1, 0});
  CHECK(thm2_select(std::vector<double>{5.0}).I == std::vector<std::size_t>{0});
  // equal weighted values do not start a new index
  CHECK(thm2_select(std::vector<double>{1.0, 2.0, 4.0}).I == std::vector<std::size_t>{2});
}

TEST_CASE("greedy selection certificates and the telescoping identity") {
  Rng rng(51, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto len = static_cast<std::size_t>(rng.integer(1, 31));
    const auto c = random_coeffs(rng, len);
    const IndexSelection sel = thm2_select(c);
    CHECK(sel.holds());
    // norm = c_{k_0} + sum_i (c_{k_{i+1}} - 2^{k_{i+1} - k_i} c_{k_i})
    double tele = c[sel.I[0]];
    for (std::size_t i = 0; i + 1 < sel.I.size(); ++i) {
      const int d = static_cast<int>(sel.I[i + 1]) - static_cast<int>(sel.I[i]);
      tele += c[sel.I[i + 1]] - std::ldexp(c[sel.I[i]], d);
    }
    const Thm2Bounds b = thm2_bounds(c);
    CHECK(b.norm == doctest::Approx(tele).epsilon(1e-12));
    CHECK(b.holds);
  }
}

TEST_CASE("lacunary bounds examples") {
  const Thm2Bounds b = thm2_bounds(std::vector<double>{1.0, 1.0});
  CHECK(b.norm == 1.5);
  CHECK(b.lower == doctest::Approx(2.0 / 36.0));
  CHECK(b.upper == 2.0);
  const Thm2Bounds e = thm2_bounds(std::vector<double>{0.0, 0.0, 1.0});
  CHECK(e.norm == 1.0);
  CHECK(e.upper == 1.0);
  CHECK(e.holds);
}

TEST_CASE("c0 block in ces_inf") {
  for (std::size_t i = 0; i < 10; ++i) {
    std::vector<double> c(i + 1, 0.0);
    c[i] = 1.0;
    const C0Check r = cor2_c0_check(c);
    CHECK(r.norm == 1.0);
    CHECK(r.ratio == 1.0);
  }
  CHECK(cor2_c0_check(std::vector<double>{1.0, 1.0}).ratio == 1.5);
  CHECK(cor2_c0_check(std::vector<double>{0.0, 0.0}).ratio == 0.0);
}

TEST_CASE("dyadic block operator examples") {
  const DyadicBlocks t1 = cor3_T(unit_vector(1));
  REQUIRE(t1.d.size() == 1);
  CHECK(t1.d[0][0] == 1.0L);
  CHECK(t1.oplus_norm() == 1.0);
  const DyadicBlocks t3 = cor3_T(unit_vector(3));
  REQUIRE(t3.d.size() == 2);
  CHECK(t3.d[1][1] == 3.0L);
  CHECK(t3.oplus_norm() == 3.0);
  CHECK(tandori_norm_seq(SeqSpaceSpec::tandori_l1(), unit_vector(3)) == 3.0);
  // padding to 2^(m+1) - 1
  CHECK(cor3_T_inv(cor3_T(SeqVec{1.0, 2.0, 3.0, 4.0})).size() == 7);
}

TEST_CASE("dyadic block sandwich and exact inverse") {
  Rng rng(52, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 1023));
    SeqVec c(n);
    for (double& v : c) v = rng.bernoulli(0.3) ? 0.0 : rng.uniform() * std::exp2(rng.uniform(-20.0, 20.0));
    const DyadicBlocks T = cor3_T(c);
    const double tc = T.oplus_norm();
    const double nc = tandori_norm_seq(SeqSpaceSpec::tandori_l1(), c);
    CHECK(tc / 72.0 <= nc * (1 + 1e-12));
    CHECK(nc <= 2.0 * tc * (1 + 1e-12));
    SeqVec back = cor3_T_inv(T);
    REQUIRE(back.size() >= n);
    CHECK(std::memcmp(back.data(), c.data(), n * sizeof(double)) == 0);
    CHECK(std::all_of(back.begin() + static_cast<std::ptrdiff_t>(n), back.end(), [](double v) { return v == 0.0; }));
  }
}

TEST_CASE("block scheme examples") {
  const BlockScheme lin = thm5_blocks(ConcaveFn::power(1.0), 20);
  for (std::size_t k = 1; k <= 21; ++k) CHECK(*lin.boundary(k) == (std::uint64_t{1} << k) - 1);
  CHECK(lin.invariant_holds());
  CHECK(thm5_oplus_norm(lin, unit_vector(1)) == 2.0);
  CHECK(thm5_oplus_norm(lin, SeqVec(5, 0.0)) == 0.0);

  const auto sq = ConcaveFn::power(0.5);
  const BlockScheme one = thm5_blocks(sq, 1);
  CHECK(*one.boundary(2) == 9);  // sqrt(i) - 1 <= 2 iff i <= 9

  CHECK_THROWS_AS(thm5_blocks(ConcaveFn::piecewise_linear({{0, 0}, {1, 1}}), 3), DegenerateError);
  CHECK_THROWS_AS(thm5_blocks(ConcaveFn::power(0.5, Domain::unit_interval), 3), ArgumentError);
  CHECK_THROWS_AS(thm5_blocks(ConcaveFn::affine(0.0, 2.0), 3), ArgumentError);
  CHECK_THROWS_AS(thm5_oplus_norm(lin, SeqVec(std::size_t{1} << 22, 1.0)), RangeError);
}

TEST_CASE("block scheme against a direct integer scan") {
  for (double a : {0.3, 0.5, 0.7}) {
    const auto phi = ConcaveFn::power(a);
    const BlockScheme s = thm5_blocks(phi, 6);
    std::uint64_t nk = 1;
    for (std::size_t k = 1; k <= 6; ++k) {
      std::uint64_t i = nk + 1;
      while (std::pow(static_cast<double>(i + 1), a) - std::pow(static_cast<double>(nk), a) <= std::ldexp(1.0, static_cast<int>(k))) ++i;
      CHECK(*s.boundary(k + 1) == i);
      nk = i;
    }
  }
}

TEST_CASE("block scheme invariant to K = 40") {
  for (double a : {0.3, 0.5, 0.7}) {
    const BlockScheme s = thm5_blocks(ConcaveFn::power(a), 40);
    CHECK(s.K() == 40);
    CHECK(s.invariant_holds());
    if (a < 0.6) CHECK_FALSE(s.boundary(41).has_value());
  }
}

TEST_CASE("block norm bounds on random x") {
  for (double a : {0.3, 0.5, 0.7}) {
    const auto rep = thm5_check(ConcaveFn::power(a), 20, 128, 100, 3);
    CHECK(rep.overall);
    CHECK(rep.summary.at("max_right_ratio") <= rep.summary.at("right_constant"));
    CHECK(std::isfinite(rep.summary.at("empirical_left_constant")));
  }
}

TEST_CASE("coincidence ratios") {
  const auto phi = ConcaveFn::power(0.5);
  const SeqVec e1 = unit_vector(1);
  CHECK(phi.eval(1.0) / 1.0 == 1.0);
  CHECK(tandori_norm_seq(SeqSpaceSpec::marcinkiewicz(phi), e1) == doctest::Approx(1.0).epsilon(1e-15));
  const auto rep = thm4a_ratios(phi, 64, 100, 11);
  CHECK(rep.overall);
  CHECK(rep.summary.at("cesaro_min") > 0.0);
  CHECK(std::isfinite(rep.summary.at("cesaro_max")));
  CHECK(std::isfinite(rep.summary.at("tandori_max")));
  CHECK(rep.summary.at("tandori_min") > 0.0);
}

TEST_CASE("dyadic averaging examples") {
  const StepFn half = StepFn::indicator(0.0, 0.5);
  CHECK(haar_H(half, 1) == std::vector<double>{0.5, 0.0});
  const StepFn back = dyadic_T(std::vector<double>{0.5, 0.0});
  CHECK(l1_distance(back, half) == 0.0);
  CHECK(*dyadic_level(half) == 1);
  CHECK_FALSE(dyadic_level(StepFn::indicator(0.0, 1.0 / 3.0)).has_value());
  CHECK_THROWS_AS(dyadic_T(std::vector<double>{1.0, 2.0, 3.0}), ArgumentError);
}

TEST_CASE("martingale check") {
  Rng rng(53, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned lev = static_cast<unsigned>(rng.integer(0, 6));
    const std::size_t cells = std::size_t{1} << lev;
    std::vector<double> x(cells + 1), v(cells);
    for (std::size_t k = 0; k <= cells; ++k) x[k] = std::ldexp(static_cast<double>(k), -static_cast<int>(lev));
    const bool nonneg = trial % 2 == 0;
    for (double& y : v) y = rng.uniform(nonneg ? 0.0 : -1.0, 1.0);
    const StepFn f(x, v);
    const MartingaleCheck m = martingale_check(f, 8);
    CHECK(m.exact_from_level);
    CHECK(m.contraction);
    for (unsigned n = lev; n <= 8; ++n) CHECK(m.errors[n] == 0.0);
    if (nonneg) {
      for (double h : m.h_norms) CHECK(h == doctest::Approx(m.f_norm).epsilon(1e-14));
    }
  }
  // non-dyadic breakpoint: error shrinks but never vanishes
  const MartingaleCheck third = martingale_check(StepFn::indicator(0.0, 1.0 / 3.0), 12);
  CHECK_FALSE(third.level.has_value());
  CHECK(third.errors.back() > 0.0);
  CHECK(third.errors.back() < 1e-3);
  // L1 errors of the averages need not decrease
  const StepFn bumps({0, 0.375, 0.5, 0.875, 1.0}, {0, 4, 0, -4});
  const MartingaleCheck mb = martingale_check(bumps, 3);
  CHECK(mb.errors[0] == doctest::Approx(1.0));
  CHECK(mb.errors[1] == doctest::Approx(1.5));
  CHECK_FALSE(mb.monotone);
}
