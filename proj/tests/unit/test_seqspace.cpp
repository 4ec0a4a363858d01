#include <cmath>
#include <numeric>

#include "cesaro/errors.hpp"
#include "cesaro/rng.hpp"
#include "cesaro/seqspace.hpp"
#include "doctest.h"

using namespace cesaro;

namespace {
void check_vec(const SeqVec& got, const SeqVec& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-15));
}

SeqVec random_vec(Rng& rng, std::size_t n) {
  SeqVec a(n);
  for (double& x : a) x = rng.bernoulli(0.3) ? 0.0 : rng.uniform(-2.0, 2.0);
  return a;
}

// Direct O(N^2) definitions used as oracles.
double oracle_tandori_l1(const SeqVec& a, const SeqWeight& w) {
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    double m = 0.0;
    for (std::size_t k = n; k < a.size(); ++k) m = std::max(m, std::fabs(a[k]));
    s += w.at(n + 1) * m;
  }
  return s;
}

double oracle_ces_inf(const SeqVec& a, std::size_t extend) {
  double best = 0.0;
  for (std::size_t n = 1; n <= a.size() + extend; ++n) {
    double s = 0.0;
    for (std::size_t k = 0; k < std::min(n, a.size()); ++k) s += std::fabs(a[k]);
    best = std::max(best, s / n);
  }
  return best;
}

std::vector<SeqSpaceSpec> all_specs() {
  return {SeqSpaceSpec::lp(1.0),
          SeqSpaceSpec::lp(2.0, SeqWeight::power(0.5)),
          SeqSpaceSpec::lp(INFINITY),
          SeqSpaceSpec::lorentz(ConcaveFn::power(0.5)),
          SeqSpaceSpec::marcinkiewicz(ConcaveFn::power(0.3)),
          SeqSpaceSpec::ces_inf(),
          SeqSpaceSpec::tandori_l1(SeqWeight::power(-0.5)),
          SeqSpaceSpec::lp(3.0).with_transform(SeqSpaceSpec::Transform::cesaro),
          SeqSpaceSpec::lorentz(ConcaveFn::power(0.7)).with_transform(SeqSpaceSpec::Transform::tandori)};
}
}  // namespace

TEST_CASE("transform examples") {
  check_vec(cesaro_seq(SeqVec{1, 0, 0}), {1, 0.5, 1.0 / 3});
  check_vec(cesaro_seq(SeqVec{1, 1, 1}), {1, 1, 1});
  check_vec(cesaro_seq(SeqVec{0, -2, 0}), {0, 1, 2.0 / 3});
  check_vec(copson_seq(SeqVec{1, 0, 0}), {1, 0, 0});
  check_vec(copson_seq(SeqVec{1, 1}), {1.5, 0.5});
  check_vec(copson_seq(SeqVec{0, 0, 1}), {1.0 / 3, 1.0 / 3, 1.0 / 3});
  check_vec(majorant_seq(SeqVec{1, 3, 2}), {3, 3, 2});
  check_vec(majorant_seq(unit_vector(3, 5)), {1, 1, 1, 0, 0});
  check_vec(majorant_seq(SeqVec{4, 2, 2, 1}), {4, 2, 2, 1});
  check_vec(rearrange_seq(SeqVec{1, 3, 2}), {3, 2, 1});
  check_vec(rearrange_seq(SeqVec{0, 0}), {0, 0});
  check_vec(rearrange_seq(SeqVec{-5, 4}), {5, 4});
  check_vec(dilate_seq(SeqVec{1, 2}, 2, DilationDirection::expand), {1, 1, 2, 2});
  check_vec(dilate_seq(SeqVec{1, 2, 3, 4}, 2, DilationDirection::contract), {1.5, 3.5});
  check_vec(dilate_seq(SeqVec{1, 2, 3}, 2, DilationDirection::contract), {1.5, 1.5});
  check_vec(dilate_seq(SeqVec{1, 2, 3}, 1, DilationDirection::expand), {1, 2, 3});
  check_vec(dilate_seq(SeqVec{1, 2, 3}, 1, DilationDirection::contract), {1, 2, 3});
}

TEST_CASE("base norm examples") {
  CHECK(base_norm_seq(SeqSpaceSpec::lorentz(ConcaveFn::power(1.0)), unit_vector(1)) == 1.0);
  CHECK(base_norm_seq(SeqSpaceSpec::marcinkiewicz(ConcaveFn::power(1.0)), SeqVec{1, 1}) == 2.0);
  CHECK(base_norm_seq(SeqSpaceSpec::marcinkiewicz(ConcaveFn::power(0.5)), unit_vector(1)) == 1.0);
  // brute force over n <= 1e6 for the same value
  double best = 0.0;
  for (int n = 1; n <= 1000000; ++n) best = std::max(best, std::sqrt(n) / n);
  CHECK(best == 1.0);
  CHECK(base_norm_seq(SeqSpaceSpec::lorentz(ConcaveFn::power(0.5)), unit_vector(1)) ==
        doctest::Approx(std::sqrt(2.0) - 1.0));
  CHECK_THROWS_AS(SeqSpaceSpec::lp(0.5), ArgumentError);
  CHECK_THROWS_AS(base_norm_seq(SeqSpaceSpec::lp(1.0, SeqWeight::values({1, 2})), SeqVec{1, 1, 1}),
                  RangeError);
}

TEST_CASE("cesaro and tandori norm examples") {
  const auto ces = SeqSpaceSpec::ces_inf();
  const auto tan = SeqSpaceSpec::tandori_l1();
  CHECK(norm_seq(ces, unit_vector(1)) == 1.0);
  for (int m = 1; m <= 20; ++m) CHECK(norm_seq(tan, unit_vector(m)) == m);
  for (int k = 1; k <= 50; ++k) {
    SeqVec a(k);
    double h = 0.0;
    for (int n = 1; n <= k; ++n) {
      a[n - 1] = 1.0 / n;
      h += 1.0 / n;
    }
    CHECK(norm_seq(tan, a) == doctest::Approx(h).epsilon(1e-14));
  }
  for (int i = 0; i <= 10; ++i) {
    const std::size_t pos = std::size_t{1} << i;
    SeqVec a = unit_vector(pos);
    a[pos - 1] = std::ldexp(1.0, i);
    CHECK(norm_seq(ces, a) == 1.0);
    CHECK(oracle_ces_inf(a, 4 * pos) == 1.0);
  }
}

TEST_CASE("fundamental function examples") {
  for (std::size_t n : {1u, 4u, 9u, 100u}) {
    CHECK(fundamental_seq(SeqSpaceSpec::lp(2.0), n) == doctest::Approx(std::sqrt(double(n))));
    CHECK(fundamental_seq(SeqSpaceSpec::ces_inf(), n) == 1.0);
    CHECK(fundamental_seq(SeqSpaceSpec::tandori_l1(), n) == double(n));
  }
}

TEST_CASE("norms agree with direct oracles") {
  Rng rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const SeqVec a = random_vec(rng, 1 + rng.integer(0, 60));
    const SeqWeight w = SeqWeight::power(rng.uniform(-1.0, 1.0));
    CHECK(norm_seq(SeqSpaceSpec::tandori_l1(w), a) == doctest::Approx(oracle_tandori_l1(a, w)).epsilon(1e-12));
    CHECK(norm_seq(SeqSpaceSpec::ces_inf(), a) == doctest::Approx(oracle_ces_inf(a, 3 * a.size())).epsilon(1e-12));
  }
}

TEST_CASE("structural invariants") {
  Rng rng(12, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const SeqVec a = random_vec(rng, 1 + rng.integer(0, 40));
    const SeqVec m = majorant_seq(a);
    check_vec(majorant_seq(m), m);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(m[i] >= std::fabs(a[i]));
      if (i > 0) CHECK(m[i] <= m[i - 1]);
    }
    SeqVec abs_sorted(a.size());
    std::transform(a.begin(), a.end(), abs_sorted.begin(), [](double x) { return std::fabs(x); });
    std::sort(abs_sorted.begin(), abs_sorted.end());
    SeqVec r = rearrange_seq(a);
    std::reverse(r.begin(), r.end());
    CHECK(r == abs_sorted);

    // ideal property and left half of the embedding
    SeqVec b = a;
    for (double& x : b) x = std::fabs(x) + rng.uniform(0.0, 1.0);
    for (const auto& spec : all_specs()) {
      CHECK(norm_seq(spec, a) <= norm_seq(spec, b) * (1 + 1e-12));
      if (spec.transform == SeqSpaceSpec::Transform::none) {
        CHECK(tandori_norm_seq(spec, a) >= base_norm_seq(spec, a) * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("symmetric lower bound for lp") {
  for (double p : {1.5, 2.0, 4.0}) {
    const auto spec = SeqSpaceSpec::lp(p);
    for (std::size_t n = 1; n <= 1000; ++n) {
      const double bound = std::pow(double(n), 1.0 / p - 1.0) / 2.0;
      SeqVec e = unit_vector(n, 2 * n);
      CHECK(base_norm_seq(spec, copson_seq(e)) >= bound);
      CHECK(base_norm_seq(spec, cesaro_seq(e)) >= bound);
    }
  }
}

TEST_CASE("dilation norm bounds on weighted lp") {
  Rng rng(13, 0);
  for (double alpha : {-0.25, 0.0, 0.5}) {
    for (double p : {1.0, 2.0}) {
      const auto spec = SeqSpaceSpec::lp(p, SeqWeight::power(alpha));
      for (std::size_t m : {2u, 3u, 5u}) {
        const double c = std::pow(double(m), 1.0 / p) * std::max(1.0, std::pow(double(m), alpha));
        for (int t = 0; t < 50; ++t) {
          const SeqVec a = random_vec(rng, 1 + rng.integer(0, 30));
          const double na = base_norm_seq(spec, a);
          if (na == 0.0) continue;
          CHECK(base_norm_seq(spec, dilate_seq(a, m, DilationDirection::expand)) <= c * na * (1 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("interval indicators in Tandori spaces") {
  const std::vector<SeqSpaceSpec> specs{SeqSpaceSpec::lp(1.0), SeqSpaceSpec::lp(2.5),
                                        SeqSpaceSpec::lorentz(ConcaveFn::power(0.4)),
                                        SeqSpaceSpec::marcinkiewicz(ConcaveFn::power(0.6))};
  for (const auto& spec : specs) {
    REQUIRE(spec.symmetric());
    for (std::size_t a = 1; a <= 64; ++a) {
      for (std::size_t b = a; b <= 64; ++b) {
        SeqVec chi(b, 0.0);
        for (std::size_t k = a; k <= b; ++k) chi[k - 1] = 1.0;
        CHECK(tandori_norm_seq(spec, chi) == doctest::Approx(fundamental_seq(spec, b)).epsilon(1e-12));
      }
    }
  }
}
