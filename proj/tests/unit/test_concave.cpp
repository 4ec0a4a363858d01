#include <cmath>
#include <sstream>

#include "cesaro/concave.hpp"
#include "cesaro/errors.hpp"
#include "doctest.h"

using namespace cesaro;

TEST_CASE("concave eval examples") {
  CHECK(ConcaveFn::power(0.5).eval(4.0) == doctest::Approx(2.0));
  CHECK(ConcaveFn::affine(1.0, 0.0).eval(7.0) == 1.0);
  const auto pl = ConcaveFn::piecewise_linear({{0, 0}, {1, 1}, {3, 2}});
  CHECK(pl.eval(2.0) == doctest::Approx(1.5));
  CHECK(pl.eval(10.0) == 2.0);
  CHECK_THROWS_AS(ConcaveFn::power(0.5).eval(-1.0), DomainError);
  CHECK_THROWS_AS(ConcaveFn::power(0.5, Domain::unit_interval).eval(1.5), DomainError);
}

TEST_CASE("piecewise-linear validation rejects non-concave data") {
  CHECK_THROWS_AS(ConcaveFn::piecewise_linear({{0, 0}, {1, 1}, {2, 3}}), ArgumentError);
  CHECK_THROWS_AS(ConcaveFn::piecewise_linear({{0, 0}, {1, 1}, {2, 0.5}}), ArgumentError);
  CHECK_THROWS_AS(ConcaveFn::piecewise_linear({{0, 0}, {1, 1}, {1, 2}}), ArgumentError);
  CHECK_THROWS_AS(ConcaveFn::piecewise_linear({{0.5, 0}, {1, 1}}), ArgumentError);
  CHECK_THROWS_AS(ConcaveFn::piecewise_linear({{0, 0}, {1, 1}}, 2.0), ArgumentError);
  CHECK_THROWS_AS(ConcaveFn::power(1.5), ArgumentError);
}

TEST_CASE("psi examples") {
  const Conjugate p1 = psi(ConcaveFn::power(0.5));
  for (double t : {0.01, 1.0, 9.0}) CHECK(p1(t) == doctest::Approx(std::sqrt(t)));
  CHECK(p1.at_zero() == 0.0);
  const Conjugate p2 = psi(ConcaveFn::affine(1.0, 0.0));
  CHECK(p2(3.5) == 3.5);
  const Conjugate p3 = psi(ConcaveFn::power(1.0));
  CHECK(p3(0.25) == 1.0);
  CHECK(p3(100.0) == 1.0);
  CHECK(p3.at_zero() == 1.0);
  CHECK(p3.origin_rule() == OriginRule::right_limit);
  CHECK_THROWS_AS(psi(ConcaveFn::affine(0.0, 0.0)), DegenerateError);
  CHECK_THROWS_AS(psi(ConcaveFn::piecewise_linear({{0, 0}, {1, 0}, {2, 0}})), DegenerateError);
}

TEST_CASE("psi is increasing and psi(t)/t nonincreasing") {
  for (const auto& phi : {ConcaveFn::power(0.3), ConcaveFn::affine(2.0, 0.5),
                          ConcaveFn::piecewise_linear({{0, 0}, {1, 2}, {4, 3}}, 0.1)}) {
    const Conjugate p(phi);
    double prev = 0.0, prev_ratio = INFINITY;
    for (double t : log_grid(1e-6, 1e6, 2)) {
      const double v = p(t);
      CHECK(v >= prev * (1 - 1e-14));
      CHECK(v / t <= prev_ratio * (1 + 1e-14));
      prev = v;
      prev_ratio = v / t;
    }
  }
}

namespace {
// Brute-force phibar on a dense uniform-in-log grid, independent of log_grid.
double brute_phibar(const ConcaveFn& phi, double s) {
  double best = 0.0;
  for (int i = -4000; i <= 4000; ++i) {
    const double t = std::exp(i * 0.01);
    best = std::max(best, phi.eval(s * t) / phi.eval(t));
  }
  return best;
}
}  // namespace

TEST_CASE("dilation function examples") {
  const auto& g = default_t_grid();
  for (double a : {0.2, 0.5, 1.0}) {
    for (double s : {0.01, 0.5, 3.0, 1e4}) {
      CHECK(dilation_function(ConcaveFn::power(a), s, g) == doctest::Approx(std::pow(s, a)).epsilon(1e-12));
    }
  }
  CHECK(dilation_function(ConcaveFn::affine(1.0, 0.0), 10.0, g) == 1.0);
  const auto pl = ConcaveFn::piecewise_linear({{0, 0}, {1, 1}});
  CHECK(dilation_function(pl, 2.0, g) == doctest::Approx(2.0));
  CHECK(brute_phibar(pl, 2.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(dilation_function(pl, 2.0, {}), ArgumentError);
}

TEST_CASE("dilation function is submultiplicative on sampled pairs") {
  const auto& g = default_t_grid();
  const auto pl = ConcaveFn::piecewise_linear({{0, 0}, {1, 1}, {5, 2}, {20, 3}}, 0.01);
  for (double s1 : {0.1, 0.5, 2.0, 7.0}) {
    for (double s2 : {0.2, 3.0, 11.0}) {
      const double lhs = dilation_function(pl, s1 * s2, g);
      const double rhs = dilation_function(pl, s1, g) * dilation_function(pl, s2, g);
      CHECK(lhs <= rhs * (1 + 1e-9));
      CHECK(dilation_function(pl, s1, g) == doctest::Approx(brute_phibar(pl, s1)).epsilon(0.03));
    }
  }
}

TEST_CASE("index estimates") {
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    const IndexEstimate e = estimate_indices(ConcaveFn::power(a));
    CHECK(std::fabs(e.p_lower - a) <= 0.02);
    CHECK(std::fabs(e.q_upper - a) <= 0.02);
    CHECK(e.p_lower <= e.q_upper + 1e-12);
  }
  const auto e1 = estimate_indices(ConcaveFn::power(1.0));
  CHECK(std::fabs(e1.p_lower - 1.0) <= 0.02);
  const auto e0 = estimate_indices(ConcaveFn::affine(1.0, 0.0));
  CHECK(std::fabs(e0.p_lower) <= 0.02);
  CHECK(std::fabs(e0.q_upper) <= 0.02);
  CHECK(!e0.grid_spec.empty());
}

TEST_CASE("q < 1 integral criterion") {
  const QCheck half = check_q_less_one(ConcaveFn::power(0.5));
  CHECK(half.holds);
  CHECK(half.best_C == doctest::Approx(2.0).epsilon(1e-8));
  for (double a : {0.1, 0.3, 0.7, 0.9}) {
    const QCheck q = check_q_less_one(ConcaveFn::power(a));
    CHECK(q.holds);
    CHECK(std::fabs(q.best_C - 1.0 / (1.0 - a)) <= 1e-6);
  }
  const QCheck one = check_q_less_one(ConcaveFn::power(1.0));
  CHECK_FALSE(one.holds);
  CHECK(std::isinf(one.best_C));
  const QCheck flat = check_q_less_one(ConcaveFn::affine(1.0, 0.0));
  CHECK(flat.holds);
  CHECK(flat.best_C == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("concave file loader") {
  std::istringstream good("#concave v1\n#domain unit\n0 0\n0.5 1\n1 1.5\n");
  const ConcaveFn f = load_concave(good);
  CHECK(f.domain() == Domain::unit_interval);
  CHECK(f.eval(0.75) == doctest::Approx(1.25));
  std::istringstream bad("#concave v1\n0 0\n1 1\n2 3\n");
  CHECK_THROWS_AS(load_concave(bad), ArgumentError);
  std::istringstream noheader("0 0\n1 1\n");
  CHECK_THROWS_AS(load_concave(noheader), ArgumentError);
}
