#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cesaro/funcspace.hpp"
#include "cesaro/report.hpp"
#include "cesaro/seqspace.hpp"

namespace cesaro {

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so that x = 0 is
/// feasible. Rows are dense.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;

  std::size_t variables() const { return objective.size(); }
  void add_row(std::vector<double> a, double b);
  /// {"objective": [...], "rows": [{"a": [...], "b": ...}, ...]}
  std::string to_json() const;
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
  /// Shadow prices y >= 0 with A^T y >= c at optimum; b.y bounds the value.
  std::vector<double> dual;
  /// Basic variable per row (ids >= variables() are slacks).
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

/// Dense tableau simplex with Bland's rule. Pivots only on entries larger
/// than 1e-12 in magnitude. Throws InternalError when the problem turns out
/// unbounded, which the ball constructions rule out.
LpSolution simplex_solve(const LinearProgram& lp);

/// Polyhedral unit ball in the positive cone, after the reduction g -> |g|.
struct BallSpec {
  enum class Kind { ces_inf, tandori_l1, l1, linf, func_ces_inf };

  Kind kind = Kind::l1;
  std::size_t n = 0;
  /// ces_inf: caps W(n) = n / v(n) of the prefix sums. tandori_l1: w_1..w_N.
  std::vector<double> weights;
  /// func_ces_inf: the weight w with v(x) = x / W(x).
  FuncWeight fweight;

  /// {g : sup_n v(n) (1/n) sum_{k<=n} |g_k| <= 1} on the first N coordinates.
  static BallSpec ces_inf(const SeqWeight& v, std::size_t n);
  /// Same ball with v(n) = n / (w_1 + ... + w_n) given through w.
  static BallSpec ces_inf_from_w(const SeqWeight& w, std::size_t n);
  /// {g : sum_n w_n sup_{k>=n} |g_k| <= 1}.
  static BallSpec tandori_l1(const SeqWeight& w, std::size_t n);
  static BallSpec l1(std::size_t n);
  static BallSpec linf(std::size_t n);
  /// {g : sup_x (1/W(x)) int_0^x |g| <= 1}, the unit ball of Ces_inf(v).
  static BallSpec func_ces_inf(FuncWeight w = {});

  std::string describe() const;
};

struct DualWitness {
  /// Sequence witness, or the cell masses y_j = int_{cell j} g.
  std::vector<double> g;
  /// Function witness y_j / |cell j| (func_ces_inf only).
  std::optional<StepFn> g_fn;
  double value = 0.0;
  /// sum |f| g recomputed from the witness.
  double pairing = 0.0;
  /// Constraint rows that hold with equality (1e-10 relative).
  std::vector<std::size_t> active_constraints;
  /// Ball gauge of the witness minus 1 (<= 1e-10 when feasible).
  double violation = 0.0;
  /// Upper bound from the LP dual solution.
  double dual_bound = 0.0;
  std::size_t pivots = 0;
};

/// LP encoding sup {sum |f_n| g_n : g >= 0 in the ball}. Arbitrary signs are
/// reduced to |f| by the ideal property of every ball here.
LinearProgram ball_lp(const BallSpec& ball, std::span<const double> f);
/// Function version over a grid: variables are the cell masses of g, the
/// constraints are the prefix caps W(x_j) at the grid points of f.
LinearProgram ball_lp(const BallSpec& ball, const StepFn& f);

/// sup over the ball, i.e. the Kothe dual norm of f.
DualWitness dual_norm(const BallSpec& ball, std::span<const double> f);
DualWitness dual_norm(const BallSpec& ball, const StepFn& f);

/// Gauge of g for the ball (its norm in the space the ball is the unit ball of).
double ball_gauge(const BallSpec& ball, std::span<const double> g);

/// Both identities for the weight w on random f of length <= N:
/// LP over the Tandori l1(w) ball = ces_inf(v) norm, and LP over the
/// ces_inf(v) ball = Tandori l1(w) norm, v(n) = n / W(n).
VerifyReport verify_alexiewicz(const SeqWeight& w, std::size_t n_max, std::size_t trials,
                               std::uint64_t seed, double tol = 1e-9);

/// LP over the Ces_inf(v) ball vs the exact Tandori L1(w) norm on random step
/// functions with at most `cells` cells on [0, L).
VerifyReport verify_weighted_function_duality(const FuncWeight& w, std::size_t cells,
                                              std::size_t trials, std::uint64_t seed,
                                              double tol = 1e-8);

enum class HolderPair {
  l1_linf,
  lp_lq,
  ces_inf_tandori,  // X = ces_inf(v), X' = Tandori l1(w)
  tandori_ces_inf,  // X = Tandori l1(w), X' = ces_inf(v)
  func_ces_inf_tandori,
};

struct HolderSpec {
  HolderPair pair = HolderPair::l1_linf;
  double p = 2.0;     // lp_lq only
  SeqWeight w;        // sequence pairs
  FuncWeight fw;      // function pair
  std::size_t n = 64;
  std::string describe() const;
};

/// sum |f g| <= ||f||_X ||g||_{X'} on random pairs; ratios are reported.
VerifyReport holder_check(const HolderSpec& spec, std::size_t trials, std::uint64_t seed,
                          double tol = 1e-9);

}  // namespace cesaro
