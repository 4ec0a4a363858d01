#include <cmath>
#include <limits>

#include "cesaro/errors.hpp"
#include "cesaro/report.hpp"
#include "doctest.h"

using namespace cesaro;

TEST_CASE("report round trip") {
  VerifyReport r;
  r.suite = "demo";
  r.seed = 18446744073709551615ULL;
  r.tolerances = {{"relative", 1e-9}};
  r.summary = {{"big", std::numeric_limits<double>::infinity()}, {"third", 1.0 / 3.0}};
  CaseRecord a;
  a.inputs_digest = Digest().add(std::string("x")).hex();
  a.values = {{"v", 0.1}, {"neg", -std::numeric_limits<double>::infinity()}};
  a.ratios = {{"r", 0.5}};
  r.add(a);
  CaseRecord b = a;
  b.pass = false;
  b.ratios = {{"r", 2.0}};
  r.add(b);
  CHECK_FALSE(r.overall);
  CHECK(r.min_ratio() == 0.5);
  CHECK(r.max_ratio() == 2.0);

  const std::string text = r.to_json();
  CHECK(text.find("\"inf\"") != std::string::npos);
  const VerifyReport back = VerifyReport::from_json(text);
  CHECK(back == r);
  CHECK(back.to_json() == text);
}

TEST_CASE("report parsing errors") {
  CHECK_THROWS_AS(VerifyReport::from_json("not json"), ArgumentError);
  CHECK_THROWS_AS(VerifyReport::from_json("{\"schema\": \"other\"}"), ArgumentError);
  CHECK_THROWS_AS(VerifyReport::from_json("{\"schema\": \"cesaro-lab-report v1\"}"), ArgumentError);
}

TEST_CASE("digest") {
  // FNV-1a 64 of the empty input is the offset basis
  CHECK(Digest().hex() == "cbf29ce484222325");
  CHECK(Digest().add(1.0).hex() != Digest().add(-1.0).hex());
  CHECK(Digest().add(std::string("ab")).hex() == Digest().add(std::string("ab")).hex());
}

TEST_CASE("relative gap") {
  CHECK(relative_gap(0.0, 0.0) == 0.0);
  CHECK(relative_gap(1.0, 2.0) == 0.5);
  CHECK(std::isinf(relative_gap(1.0, std::numeric_limits<double>::infinity())));
}
