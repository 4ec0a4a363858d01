// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cesaro/report.hpp"
#include "cesaro/suites.hpp"

using namespace cesaro;

namespace {

constexpr std::uint64_t kSeed = 1;

constexpr double kThm2Budget = 10.0;
constexpr double kCor3Budget = 10.0;
constexpr double kAlexBudget = 60.0;
constexpr double kFuncDualBudget = 60.0;
constexpr double kAlexGap = 1e-9;
constexpr double kFuncDualGap = 1e-8;
constexpr double kResidual = 1e-9;
constexpr double kExactRel = 1e-12;
constexpr double kThm8Additive = 1e-7;
constexpr double kThm8Anchor = 1e-9;
constexpr double kIndexTol = 0.02;
constexpr double kQConstTol = 1e-6;
constexpr double kHolder = 1e-9;

struct Timed {
  VerifyReport rep;
  double seconds;
  std::string json;
};

std::map<std::string, Timed> runs;

const Timed& suite(const std::string& name) {
  auto it = runs.find(name);
  if (it != runs.end()) return it->second;
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep = run_suite(name, kSeed);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string json = rep.to_json();
  return runs.emplace(name, Timed{std::move(rep), s, std::move(json)}).first->second;
}

double get(const VerifyReport& r, const std::string& key) {
  auto it = r.summary.find(key);
  return it == r.summary.end() ? std::nan("") : it->second;
}

std::size_t passed(const VerifyReport& r) {
  std::size_t n = 0;
  for (const auto& c : r.cases) n += c.pass;
  return n;
}

int failures = 0;

void line(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

const std::vector<std::string> kAlphas = {"0.3", "0.5", "0.7"};

}  // namespace

int main() {
  {
    const Timed& t = suite("thm2");
    const auto& r = t.rep;
    const bool ok = r.overall && r.cases.size() == 10000 && get(r, "violations") == 0.0 &&
                    get(r, "lower_constant") == 1.0 / 36.0 && t.seconds < kThm2Budget;
    line(1, ok, "thm2 lacunary sandwich",
         fmt("%.0f/%.0f cases, min norm/sum %.4g, %.2f s", passed(r), r.cases.size(), get(r, "min_norm_over_sum"),
             t.seconds));
  }
  {
    const Timed& t = suite("cor3");
    const auto& r = t.rep;
    const bool ok = r.overall && r.cases.size() == 10000 && get(r, "inverse_failures") == 0.0 &&
                    get(r, "min_ratio") >= 1.0 / 72.0 && get(r, "max_ratio") <= 2.0 && t.seconds < kCor3Budget;
    line(2, ok, "cor3 block operator constants",
         fmt("%.0f/%.0f cases, ratio in [%.4g, %.4g]", passed(r), r.cases.size(), get(r, "min_ratio"),
             get(r, "max_ratio")) +
             fmt(", %.2f s", t.seconds));
  }
  {
    const Timed& t = suite("alexiewicz");
    const auto& r = t.rep;
    double gap = 0.0;
    for (const char* w : {"unit", "power-0.5", "geometric"}) {
      gap = std::max({gap, get(r, std::string(w) + ".max_gap_ces_inf"), get(r, std::string(w) + ".max_gap_tandori")});
    }
    const bool ok = r.overall && r.cases.size() == 3000 && gap <= kAlexGap && t.seconds < kAlexBudget;
    line(3, ok, "alexiewicz duality",
         fmt("%.0f/%.0f cases, max relative gap %.3g, %.2f s", passed(r), r.cases.size(), gap, t.seconds));
  }
  {
    const Timed& t = suite("weighted-func-duality");
    const auto& r = t.rep;
    double gap = 0.0;
    for (const char* w : {"unit", "inv_sqrt", "step"}) gap = std::max(gap, get(r, std::string(w) + ".max_gap"));
    const bool ok = r.overall && r.cases.size() == 600 && gap <= kFuncDualGap && t.seconds < kFuncDualBudget;
    line(4, ok, "weighted function duality",
         fmt("%.0f/%.0f cases, max relative gap %.3g, %.2f s", passed(r), r.cases.size(), gap, t.seconds));
  }
  {
    const auto& r = suite("thm5").rep;
    bool ok = r.overall;
    std::string detail;
    for (const auto& a : kAlphas) {
      const std::string p = "power" + a + ".";
      ok = ok && get(r, p + "invariant_holds") == 1.0 &&
           get(r, p + "max_right_ratio") <= get(r, p + "right_constant") * (1 + kExactRel);
      detail += "a=" + a + fmt(" right %.4g <= %.4g, left %.4g; ", get(r, p + "max_right_ratio"),
                               get(r, p + "right_constant"), get(r, p + "empirical_left_constant"));
    }
    line(5, ok, "thm5 Lorentz blocks", detail.substr(0, detail.size() - 2));
  }
  {
    const auto& r = suite("prop6").rep;
    bool ok = r.overall;
    std::string detail;
    for (const char* w : {"unit", "inv_sqrt"}) {
      const std::string p = std::string(w) + ".";
      ok = ok && get(r, p + "max_residual") <= kResidual && get(r, p + "max_right_ratio") <= 1.0 + kExactRel;
      detail += std::string(w) + fmt(" residual %.3g, right %.4g, left %.4g; ", get(r, p + "max_residual"),
                                     get(r, p + "max_right_ratio"), get(r, p + "empirical_left_constant"));
    }
    line(6, ok, "prop6 weighted partitions", detail.substr(0, detail.size() - 2));
  }
  {
    const auto& r = suite("thm8").rep;
    bool ok = r.overall && get(r, "anchor_max_error") <= kThm8Anchor;
    std::string detail = fmt("anchor error %.3g; ", get(r, "anchor_max_error"));
    for (const auto& a : kAlphas) {
      const std::string p = "power" + a + ".";
      ok = ok && get(r, p + "min_slack") >= -kThm8Additive && std::isfinite(get(r, p + "max_reverse_ratio"));
      detail += "a=" + a + fmt(" slack %.3g, reverse %.4g; ", get(r, p + "min_slack"), get(r, p + "max_reverse_ratio"));
    }
    line(7, ok, "thm8 Cesaro-Lorentz embedding", detail.substr(0, detail.size() - 2));
  }
  {
    const auto& r = suite("indices").rep;
    const bool ok = r.overall && r.cases.size() == 9 && get(r, "max_index_error") <= kIndexTol &&
                    get(r, "max_C_error") <= kQConstTol;
    line(8, ok, "dilation indices",
         fmt("index error %.3g, best_C error %.3g", get(r, "max_index_error"), get(r, "max_C_error")));
  }
  {
    const auto& r = suite("prop8").rep;
    bool ok = r.overall;
    std::string detail;
    for (const char* s : {"decreasing", "increasing"}) {
      const std::string p = std::string(s) + ".";
      ok = ok && get(r, p + "left_violations") == 0.0 && std::isfinite(get(r, p + "empirical_right_constant"));
      detail += std::string(s) + fmt(" right constant %.4g; ", get(r, p + "empirical_right_constant"));
    }
    line(9, ok, "prop8 interval thinning", fmt("%.0f/%.0f cases, ", passed(r), r.cases.size()) +
                                     detail.substr(0, detail.size() - 2));
  }
  {
    const auto& r = suite("holder").rep;
    double worst = 0.0;
    std::size_t pairs = 0;
    for (const auto& [k, v] : r.summary) {
      if (k.size() > 10 && k.compare(k.size() - 10, 10, ".max_ratio") == 0) {
        worst = std::max(worst, v);
        ++pairs;
      }
    }
    const bool ok = r.overall && pairs > 0 && worst <= 1.0 + kHolder;
    line(10, ok, "Hoelder pairing", fmt("%.0f pairs, %.0f cases, max ratio %.17g", pairs, r.cases.size(), worst));
  }
  {
    bool ok = true;
    std::string bad;
    for (const auto& n : suite_names()) {
      const std::string again = run_suite(n, kSeed).to_json();
      const std::string first = suite(n).json;
      if (again != first) {
        ok = false;
        bad += " " + n;
      }
    }
    line(11, ok, "determinism",
         ok ? fmt("%.0f suites byte-identical on rerun", suite_names().size()) : "differs:" + bad);
  }
  return failures;
}
