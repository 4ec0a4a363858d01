#pragma once

// Random inputs shared by the verification suites.

#include <algorithm>
#include <cmath>
#include <vector>

#include "cesaro/funcspace.hpp"
#include "cesaro/rng.hpp"
#include "cesaro/seqspace.hpp"

namespace cesaro::detail {

/// Magnitudes spread over a few decades, random signs, ~25% zeros.
inline double random_entry(Rng& rng) {
  if (rng.bernoulli(0.25)) return 0.0;
  const double mag = std::exp(rng.uniform(-3.0, 3.0));
  return rng.bernoulli(0.5) ? mag : -mag;
}

/// Length-n vector with at least one nonzero entry.
inline SeqVec random_seq(Rng& rng, std::size_t n) {
  SeqVec a(n);
  for (double& x : a) x = random_entry(rng);
  if (std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; })) {
    a[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1))] = 1.0;
  }
  return a;
}

inline SeqVec random_nonneg_seq(Rng& rng, std::size_t n) {
  SeqVec a = random_seq(rng, n);
  for (double& x : a) x = std::fabs(x);
  return a;
}

/// Sorted grid 0 = x_0 < ... < x_k = len with k cells.
inline std::vector<double> random_grid(Rng& rng, std::size_t k, double len) {
  std::vector<double> x{0.0, len};
  while (x.size() < k + 1) {
    const double t = rng.uniform(0.0, len);
    if (t > 0.0 && std::find(x.begin(), x.end(), t) == x.end()) x.push_back(t);
  }
  std::sort(x.begin(), x.end());
  return x;
}

inline std::vector<double> random_values(Rng& rng, std::size_t k) {
  std::vector<double> c(k);
  for (double& v : c) v = random_entry(rng);
  if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) c[0] = 1.0;
  return c;
}

/// Step function on [0, 1) with up to max_cells cells.
inline StepFn random_unit_step(Rng& rng, std::size_t max_cells) {
  const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(max_cells)));
  return StepFn(random_grid(rng, k, 1.0), random_values(rng, k), FnDomain::unit);
}

/// Step function on [0, len) inside the truncated half-line, len in [1/8, 64].
inline StepFn random_halfline_step(Rng& rng, std::size_t max_cells) {
  const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(max_cells)));
  const double len = std::exp2(rng.uniform(-3.0, 6.0));
  return StepFn(random_grid(rng, k, len), random_values(rng, k), FnDomain::half_line);
}

}  // namespace cesaro::detail
