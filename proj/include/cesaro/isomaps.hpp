#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cesaro/concave.hpp"
#include "cesaro/funcspace.hpp"
#include "cesaro/report.hpp"
#include "cesaro/seqspace.hpp"

namespace cesaro {

// Lacunary basis 2^-i e_{2^i} in the Tandori space l1~ (unit weight).

/// Largest coefficient count for the dense realization (ambient 2^14).
inline constexpr std::size_t kThm2DenseMax = 15;

/// Dense vector of sum_i c_i 2^-i e_{2^i}, i = 0..n, length 2^n.
SeqVec thm2_embed(std::span<const double> c);

/// ||sum_i c_i 2^-i e_{2^i}||_{l1~} from the coefficients alone:
/// M_0 + sum_{i>=1} 2^(i-1) M_i with M_i = max_{j>=i} |c_j| 2^-j.
double thm2_norm_sparse(std::span<const double> c);

struct IndexSelection {
  std::vector<std::size_t> I;   // n = k_0 > k_1 > ... > k_l
  std::vector<std::size_t> I1;  // k_i (0 <= i < l) with c_{k_i} < 3/2 c_{k_{i+1}}
  // Evaluated inequalities of the construction.
  bool run_max = true;      // 2^-k_i c_{k_i} >= 2^-k c_k on (k_{i+1}, k_i]
  bool last_max = true;     // 2^-k_l c_{k_l} >= 2^-k c_k on [0, k_l]
  bool strict_rise = true;  // 2^-k_i c_{k_i} < 2^-k_{i+1} c_{k_{i+1}}
  bool run_sums = true;     // sum over (k_{i+1}, k_i] <= 2 c_{k_i}, sum over [0, k_l] <= 2 c_{k_l}
  bool holds() const { return run_max && last_max && strict_rise && run_sums; }
};

/// Greedy index selection: k_0 = n and
/// k_{i+1} = max{k < k_i : 2^-k_i c_{k_i} < 2^-k c_k}; equal weighted values
/// do not start a new index.
IndexSelection thm2_select(std::span<const double> c);

struct Thm2Bounds {
  double lower;           // sum c / 36
  double norm;            // ||x||_{l1~}
  double upper;           // sum c
  double certificate_lb;  // c_n + 1/4 sum_j c_{k_{i_j + 1}}
  bool holds;             // lower <= norm <= upper and certificate_lb <= norm (1e-12 rel.)
};
Thm2Bounds thm2_bounds(std::span<const double> c);

struct C0Check {
  double norm;  // ||sum c_i 2^i e_{2^i}||_{ces_inf}
  double max;   // max |c_i|
  double ratio;
};
/// Dense evaluation for up to kThm2DenseMax coefficients, checked against
/// sup_j 2^-j sum_{i<=j} 2^i |c_i|.
C0Check cor2_c0_check(std::span<const double> c);

/// Blocks d^(n)_j = (j - 1 + 2^n) c_{j - 1 + 2^n}, j = 1..2^n. Entries are
/// kept in long double so the inverse is bit-exact for indices below 2^11.
struct DyadicBlocks {
  std::vector<std::vector<long double>> d;
  /// sum_n max_j |d^(n)_j|.
  double oplus_norm() const;
};

/// Pads c with zeros to length 2^(m+1) - 1.
DyadicBlocks cor3_T(std::span<const double> c);
/// Divides by the same coordinate factors; returns length 2^(m+1) - 1.
SeqVec cor3_T_inv(const DyadicBlocks& blocks);

/// n_1 = 1, n_{k+1} = sup{i > n_k : phi(i) - phi(n_k) <= 2^k}, computed in
/// multiprecision (n_k grows like 2^(k / alpha) for t^alpha).
struct BlockScheme {
  std::vector<std::string> boundaries;  // n_1..n_{K+1}, decimal
  std::vector<double> gaps;             // phi(n_{k+1}) - phi(n_k), k = 1..K
  std::vector<bool> invariant;          // 2^(k-1) <= gap_k <= 2^k
  std::vector<bool> maximal;            // phi(n_{k+1} + 1) - phi(n_k) > 2^k
  double phi2 = 0.0;                    // phi(2)

  std::size_t K() const { return gaps.size(); }
  bool invariant_holds() const;
  /// n_k (1-based k) if it fits in 64 bits.
  std::optional<std::uint64_t> boundary(std::size_t k) const;
  /// 2 / (phi(2) - 1) + 4.
  double right_constant() const;
};

/// Requires phi on [0, inf), unbounded, with phi(1) = 1; K <= 64.
BlockScheme thm5_blocks(const ConcaveFn& phi, std::size_t K);

/// sum_k 2^k max_{n_k <= i <= n_{k+1}} |x_i| over the blocks meeting [1, N].
double thm5_oplus_norm(const BlockScheme& scheme, std::span<const double> x);

/// Random x: ||x||_{lambda_phi~} / ||x||_oplus (left constant, reported) and
/// ||x||_oplus / ||x||_{lambda_phi~} against the explicit right constant.
VerifyReport thm5_check(const ConcaveFn& phi, std::size_t K, std::size_t n_max, std::size_t trials,
                        std::uint64_t seed);

/// Ratios ||C|x| ||_{lambda_phi} / sum |x_n| phi(n)/n and
/// ||x||_{m_phi~} / sup |x_n| phi(n) on random x. The Cesaro image is taken
/// on 16 N coordinates so most of its tail is included.
VerifyReport thm4a_ratios(const ConcaveFn& phi, std::size_t n_max, std::size_t trials,
                          std::uint64_t seed);

/// H_n f = (int_{B_n^k} f)_{k=1..2^n}, B_n^k = [(k-1)/2^n, k/2^n).
std::vector<double> haar_H(const StepFn& f, unsigned n);
/// T_n x = sum_k 2^n x_k chi_{B_n^k}.
StepFn dyadic_T(std::span<const double> x);
/// Smallest n with every breakpoint of f in 2^-n Z, if any n <= 52 works.
std::optional<unsigned> dyadic_level(const StepFn& f);

struct MartingaleCheck {
  std::vector<double> errors;  // ||T_n H_n f - f||_{L1}, n = 0..n_max
  std::vector<double> h_norms; // ||H_n f||_{l1}
  double f_norm = 0.0;         // ||f||_{L1}
  std::optional<unsigned> level;
  bool exact_from_level = true;  // errors vanish for n >= level
  bool contraction = true;       // ||H_n f|| <= ||f||
  bool monotone = true;          // errors nonincreasing (reported, not required)
};
MartingaleCheck martingale_check(const StepFn& f, unsigned n_max);

}  // namespace cesaro
