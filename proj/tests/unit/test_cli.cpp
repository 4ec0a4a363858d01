#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cesaro/cli.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/report.hpp"
#include "cesaro/suites.hpp"
#include "doctest.h"

using namespace cesaro;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp_path(const std::string& name) { return "cli_test_" + name; }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("space grammar") {
  CHECK(cli::parse_seq_space("lp:2").p == 2.0);
  CHECK(cli::parse_seq_space("lp:inf").p == std::numeric_limits<double>::infinity());
  CHECK(cli::parse_seq_space("lp:2:weight=pow(0.5)").weight.alpha() == 0.5);
  CHECK(cli::parse_seq_space("lorentz:power:0.5").base == SeqSpaceSpec::Base::lorentz);
  CHECK(cli::parse_seq_space("marcinkiewicz:power:0.3").phi->alpha() == 0.3);
  CHECK(cli::parse_seq_space("tandori_l1:w=pow(-0.5)").weight.is_power());
  CHECK(cli::parse_seq_space("ces:lp:2").transform == SeqSpaceSpec::Transform::cesaro);
  CHECK(cli::parse_seq_space("tandori:lorentz:power:0.5").transform == SeqSpaceSpec::Transform::tandori);
  CHECK(cli::parse_fn_space("ces_inf:w=pow(-0.5)", FnDomain::half_line).transform ==
        FuncSpaceSpec::Transform::cesaro);
  CHECK_THROWS_AS(cli::parse_seq_space("lp"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_seq_space("lp:two"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_seq_space("lp:2:weight=exp(1)"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_seq_space("lorentz:power"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_seq_space("ces_inf:w=pow(1)"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_seq_space("hardy"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_fn_space("lp:inf:weight=pow(1)", FnDomain::unit), ArgumentError);
}

TEST_CASE("sequence input") {
  CHECK(cli::parse_csv("1, 2.5,-3") == SeqVec{1.0, 2.5, -3.0});
  CHECK_THROWS_AS(cli::parse_csv(""), ArgumentError);
  CHECK_THROWS_AS(cli::parse_csv("1,,2"), ArgumentError);
  std::istringstream lines("# weights\n1\n\n2\n");
  CHECK(cli::load_seq(lines) == SeqVec{1.0, 2.0});
  std::istringstream arr(" [3, 4] ");
  CHECK(cli::load_seq(arr) == SeqVec{3.0, 4.0});
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(cli::load_seq(empty), ArgumentError);
}

TEST_CASE("norm command") {
  CHECK(run({"norm", "--space", "tandori_l1", "--seq", "0,1"}).out == "2\n");
  CHECK(run({"norm", "--space", "ces_inf", "--seq", "1"}).out == "1\n");
  CHECK(run({"norm", "--space", "lp:2", "--seq", "3,4"}).out == "5\n");
  const std::string step = tmp_path("step.json");
  write(step, R"({"breakpoints": [0, 4], "values": [1], "domain": "halfline:65536"})");
  CHECK(run({"norm", "--space", "lorentz:power:0.5", "--fn", step}).out == "2\n");
  // 15 significant digits
  CHECK(run({"norm", "--space", "lp:1", "--seq", "0.1,0.2"}).out == "0.3\n");
  CHECK(run({"norm", "--space", "lp:2", "--seq", "1,1"}).out == "1.4142135623731\n");
  std::remove(step.c_str());
}

TEST_CASE("dual norms through the LP") {
  // (0, 1, 3): ces_inf norm 4/3, Tandori l1 norm 9
  CHECK(run({"norm", "--space", "tandori_l1", "--seq", "0,1,3", "--dual"}).out == "1.33333333333333\n");
  CHECK(run({"norm", "--space", "ces_inf", "--seq", "0,1,3", "--dual"}).out == "9\n");
  CHECK(run({"norm", "--space", "lp:1", "--seq", "1,-5,2", "--dual"}).out == "5\n");
  CHECK(run({"norm", "--space", "lp:inf", "--seq", "1,-5,2", "--dual"}).out == "8\n");
  const std::string step = tmp_path("dual.json");
  const std::string wit = tmp_path("witness.json");
  const std::string lp = tmp_path("lp.json");
  write(step, R"({"breakpoints": [0, 4], "values": [1], "domain": "halfline:65536"})");
  const Run r = run({"norm", "--space", "ces_inf", "--fn", step, "--dual", "--witness", wit, "--lp-dump", lp});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  CHECK(slurp(wit).find("\"g_fn\"") != std::string::npos);
  CHECK(slurp(lp).find("\"objective\"") != std::string::npos);
  CHECK(run({"norm", "--space", "lp:2", "--seq", "1", "--dual"}).code == cli::usage);
  for (const auto& p : {step, wit, lp}) std::remove(p.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::usage);
  CHECK(run({"frobnicate"}).code == cli::usage);
  CHECK(run({"norm", "--space", "lp:1"}).code == cli::usage);
  CHECK(run({"norm", "--space", "lp:1", "--seq", "1", "--fn", "x.json"}).code == cli::usage);
  CHECK(run({"norm", "--space", "nope", "--seq", "1"}).code == cli::usage);
  CHECK(run({"norm", "--space", "lp:1", "--fn", "missing.json"}).code == cli::usage);
  CHECK(run({"verify", "nope"}).code == cli::usage);
  // a weight file shorter than the sequence is a range error
  const std::string v = tmp_path("v.txt");
  write(v, "1\n1\n");
  const Run r = run({"norm", "--space", "ces_inf:v=" + v, "--seq", "1,2,3,4"});
  CHECK(r.code == cli::domain);
  CHECK_FALSE(r.err.empty());
  std::remove(v.c_str());
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("verify and report commands") {
  const std::string a = tmp_path("a.json");
  const std::string b = tmp_path("b.json");
  const Run r1 = run({"verify", "thm2", "--seed", "7", "--trials", "200", "--out", a});
  CHECK(r1.code == 0);
  CHECK(r1.out == "thm2: pass (200/200 cases)\n");
  CHECK(run({"verify", "indices", "--out", b}).code == 0);
  // stdout report equals the file report
  CHECK(run({"verify", "thm2", "--seed", "7", "--trials", "200"}).out == slurp(a));

  const Run merged = run({"report", a, b});
  CHECK(merged.code == 0);
  std::istringstream rows(merged.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(rows, line)) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "suite,seed,cases,passed,min_ratio,max_ratio,overall");
  CHECK(lines[1].rfind("thm2,7,200,200,", 0) == 0);
  CHECK(lines[2].rfind("indices,1,9,9,", 0) == 0);
  CHECK(lines[1].substr(lines[1].size() - 5) == ",pass");

  CHECK(run({"report"}).out == "suite,seed,cases,passed,min_ratio,max_ratio,overall\n");

  // a failing report keeps its own overall column
  VerifyReport bad = VerifyReport::from_json(slurp(b));
  bad.suite = "broken";
  CaseRecord c;
  c.pass = false;
  bad.add(c);
  write(a, bad.to_json());
  const Run mixed = run({"report", a, b});
  CHECK(mixed.out.find("broken,1,10,9,") != std::string::npos);
  CHECK(mixed.out.find(",fail\n") != std::string::npos);
  CHECK(mixed.out.find("indices,1,9,9,1,1,pass\n") != std::string::npos);

  write(a, "{\"schema\": \"something else\"}");
  CHECK(run({"report", a}).code == cli::usage);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("transform command") {
  CHECK(run({"transform", "--op", "cesaro", "--seq", "1,2,3"}).out == "1,1.5,2\n");
  CHECK(run({"transform", "--op", "majorant", "--seq", "1,-3,2"}).out == "3,3,2\n");
  CHECK(run({"transform", "--op", "rearrange", "--seq", "1,-3,2"}).out == "3,2,1\n");
  CHECK(run({"transform", "--op", "copson", "--seq", "2,2"}).out == "3,1\n");
  CHECK(run({"transform", "--op", "shuffle", "--seq", "1"}).code == cli::usage);
}

TEST_CASE("suite list") {
  const Run r = run({"suites"});
  CHECK(r.code == 0);
  for (const auto& n : suite_names()) CHECK(r.out.find(n + "\n") != std::string::npos);
  CHECK(suite_names().size() == 13);
}

TEST_CASE("reports are reproducible") {
  for (const auto& n : suite_names()) {
    const std::size_t trials = n == "thm8" ? 20 : 50;
    const std::string a = run_suite(n, 99, trials).to_json();
    CHECK(a == run_suite(n, 99, trials).to_json());
    CHECK(VerifyReport::from_json(a).to_json() == a);
  }
  CHECK(run_suite("thm2", 1, 50).to_json() != run_suite("thm2", 2, 50).to_json());
  CHECK_THROWS_AS(run_suite("nope", 1), ArgumentError);
}
