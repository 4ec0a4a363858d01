#include "cesaro/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <cstdio>
#include <limits>

#include "cesaro/errors.hpp"
#include "json.hpp"

namespace cesaro {

using nlohmann::ordered_json;

namespace {

ordered_json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double parse_number(const ordered_json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw ArgumentError("report: bad number '" + s + "'");
  }
  if (!j.is_number()) throw ArgumentError("report: expected a number");
  return j.get<double>();
}

ordered_json number_map(const std::map<std::string, double>& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : m) out[k] = number(v);
  return out;
}

std::map<std::string, double> parse_map(const ordered_json& j) {
  if (!j.is_object()) throw ArgumentError("report: expected an object");
  std::map<std::string, double> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = parse_number(it.value());
  return out;
}

}  // namespace

void VerifyReport::add(CaseRecord c) {
  overall = overall && c.pass;
  cases.push_back(std::move(c));
}

double VerifyReport::min_ratio() const {
  double r = std::numeric_limits<double>::quiet_NaN();
  for (const auto& c : cases) {
    for (const auto& [k, v] : c.ratios) {
      if (std::isnan(r) || v < r) r = v;
    }
  }
  return r;
}

double VerifyReport::max_ratio() const {
  double r = std::numeric_limits<double>::quiet_NaN();
  for (const auto& c : cases) {
    for (const auto& [k, v] : c.ratios) {
      if (std::isnan(r) || v > r) r = v;
    }
  }
  return r;
}

std::string VerifyReport::to_json() const {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["seed"] = seed;
  j["overall"] = overall ? "pass" : "fail";
  j["tolerances"] = number_map(tolerances);
  j["summary"] = number_map(summary);
  ordered_json arr = ordered_json::array();
  for (const auto& c : cases) {
    ordered_json cj;
    cj["inputs_digest"] = c.inputs_digest;
    cj["values"] = number_map(c.values);
    cj["ratios"] = number_map(c.ratios);
    cj["pass"] = c.pass;
    arr.push_back(std::move(cj));
  }
  j["cases"] = std::move(arr);
  return j.dump(1) + "\n";
}

VerifyReport VerifyReport::from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("report: invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("schema", "") != kReportSchema) {
      throw ArgumentError("report: schema mismatch (expected '" + std::string(kReportSchema) + "')");
    }
    VerifyReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto overall = j.at("overall").get<std::string>();
    if (overall != "pass" && overall != "fail") throw ArgumentError("report: bad overall flag");
    r.tolerances = parse_map(j.at("tolerances"));
    r.summary = parse_map(j.at("summary"));
    for (const auto& cj : j.at("cases")) {
      CaseRecord c;
      c.inputs_digest = cj.at("inputs_digest").get<std::string>();
      c.values = parse_map(cj.at("values"));
      c.ratios = parse_map(cj.at("ratios"));
      c.pass = cj.at("pass").get<bool>();
      r.cases.push_back(std::move(c));
    }
    r.overall = overall == "pass";
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("report: ") + e.what());
  }
}

void Digest::bytes(const void* p, std::size_t n) {
  const auto* b = static_cast<const unsigned char*>(p);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= b[i];
    h_ *= 0x100000001b3ULL;
  }
}

Digest& Digest::add(std::uint64_t v) {
  bytes(&v, sizeof v);
  return *this;
}

Digest& Digest::add(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  return add(bits);
}

Digest& Digest::add(std::span<const double> v) {
  add(static_cast<std::uint64_t>(v.size()));
  for (double x : v) add(x);
  return *this;
}

Digest& Digest::add(const std::string& s) {
  add(static_cast<std::uint64_t>(s.size()));
  bytes(s.data(), s.size());
  return *this;
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

double relative_gap(double a, double b) {
  if (a == b) return 0.0;
  if (std::isinf(a) || std::isinf(b)) return std::numeric_limits<double>::infinity();
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

}  // namespace cesaro
