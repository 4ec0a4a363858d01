#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cesaro/concave.hpp"

namespace cesaro {

/// Finite section a_1..a_N of a sequence; entries past N are zero.
using SeqVec = std::vector<double>;

/// Positive weight sequence w_1, w_2, ... (1-based in the math, 0-based here).
class SeqWeight {
 public:
  /// w_n = 1.
  SeqWeight() = default;
  /// w_n = n^alpha.
  static SeqWeight power(double alpha);
  /// Explicit values; evaluating past the end is a range error.
  static SeqWeight values(std::vector<double> w);

  /// Weight at the 1-based index n.
  double at(std::size_t n) const;
  bool is_unit() const { return kind_ == Kind::unit; }
  bool is_power() const { return kind_ == Kind::power; }
  double alpha() const { return alpha_; }
  /// Number of available explicit values (max size_t for generators).
  std::size_t available() const;
  std::string describe() const;

 private:
  enum class Kind { unit, power, explicit_values };
  Kind kind_ = Kind::unit;
  double alpha_ = 0.0;
  std::vector<double> values_;
};

struct SeqSpaceSpec {
  enum class Base { lp, lorentz, marcinkiewicz, ces_inf, tandori_l1 };
  enum class Transform { none, cesaro, tandori };

  Base base = Base::lp;
  double p = 1.0;                  // lp only; +inf allowed
  SeqWeight weight;                // lp: w, ces_inf: v, tandori_l1: w
  std::optional<ConcaveFn> phi;    // lorentz / marcinkiewicz
  Transform transform = Transform::none;

  static SeqSpaceSpec lp(double p, SeqWeight w = {});
  static SeqSpaceSpec lorentz(ConcaveFn phi);
  static SeqSpaceSpec marcinkiewicz(ConcaveFn phi);
  /// ces_inf(v) = C(l_inf(v)): sup_n v(n) (1/n) sum_{k<=n} |a_k|.
  static SeqSpaceSpec ces_inf(SeqWeight v = {});
  /// Tandori l1(w): sum_n w_n sup_{k>=n} |a_k|.
  static SeqSpaceSpec tandori_l1(SeqWeight w = {});

  SeqSpaceSpec with_transform(Transform t) const;
  /// True for the rearrangement-invariant bases (unweighted lp, lorentz,
  /// marcinkiewicz) with no transform.
  bool symmetric() const;
  std::string describe() const;
};

// Transforms. All act on |a| and return a vector of the stated length.

/// (C_d|a|)_n = (1/n) sum_{k<=n} |a_k| for n = 1..out_len (default N).
SeqVec cesaro_seq(std::span<const double> a, std::size_t out_len = 0);
/// (C_d^*|a|)_n = sum_{k>=n} |a_k| / k, n = 1..N.
SeqVec copson_seq(std::span<const double> a);
/// Decreasing majorant max_{n<=k<=N} |a_k|.
SeqVec majorant_seq(std::span<const double> a);
/// |a| sorted nonincreasing.
SeqVec rearrange_seq(std::span<const double> a);

enum class DilationDirection { expand, contract };
/// sigma_m (each entry repeated m times) or sigma_{1/m} (m-block averages,
/// last block zero-padded).
SeqVec dilate_seq(std::span<const double> a, std::size_t m, DilationDirection dir);

/// Norm of the untransformed base space. Exact on the finite section: for
/// ces_inf the prefix averages past N decrease (requires v(n)/n
/// nonincreasing past N, true for unit and n^alpha with alpha <= 1), and for
/// m_phi the factor phi(n)/n is nonincreasing, so the sup is attained at
/// some n <= N.
double base_norm_seq(const SeqSpaceSpec& spec, std::span<const double> a);
/// ||C_d|a| restricted to 1..N||_X.
double cesaro_norm_seq(const SeqSpaceSpec& spec, std::span<const double> a);
/// ||majorant(a)||_X.
double tandori_norm_seq(const SeqSpaceSpec& spec, std::span<const double> a);
/// Dispatch on spec.transform.
double norm_seq(const SeqSpaceSpec& spec, std::span<const double> a);

/// ||e_1 + ... + e_n|| in the (transformed) space.
double fundamental_seq(const SeqSpaceSpec& spec, std::size_t n);

/// Unit vector e_m (1-based) in a section of length max(len, m).
SeqVec unit_vector(std::size_t m, std::size_t len = 0);

}  // namespace cesaro
