#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cesaro {

inline constexpr const char* kReportSchema = "cesaro-lab-report v1";

struct CaseRecord {
  std::string inputs_digest;
  std::map<std::string, double> values;
  std::map<std::string, double> ratios;
  bool pass = true;

  bool operator==(const CaseRecord&) const = default;
};

/// Result of one verification suite. Maps keep key order fixed so the JSON
/// text is a pure function of the contents.
struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseRecord> cases;
  std::map<std::string, double> tolerances;
  /// Suite-level numbers (empirical constants, extremes).
  std::map<std::string, double> summary;
  bool overall = true;

  /// Appends a case and folds its flag into `overall`.
  void add(CaseRecord c);
  /// Min / max over every ratio of every case (NaN when there are none).
  double min_ratio() const;
  double max_ratio() const;

  /// Non-finite numbers are written as the strings "inf", "-inf", "nan".
  std::string to_json() const;
  /// Throws ArgumentError on a schema mismatch.
  static VerifyReport from_json(const std::string& text);

  bool operator==(const VerifyReport&) const = default;
};

/// FNV-1a over a byte stream, rendered as 16 hex digits.
class Digest {
 public:
  Digest& add(std::uint64_t v);
  Digest& add(double v);
  Digest& add(std::span<const double> v);
  Digest& add(const std::string& s);
  std::string hex() const;

 private:
  void bytes(const void* p, std::size_t n);
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

/// |a - b| / max(|a|, |b|), 0 when both vanish, inf when exactly one is infinite.
double relative_gap(double a, double b);

}  // namespace cesaro
