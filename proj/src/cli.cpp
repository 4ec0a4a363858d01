#include "cesaro/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cesaro/duality.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/report.hpp"
#include "cesaro/suites.hpp"
#include "json.hpp"

namespace cesaro::cli {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ArgumentError("bad number for " + what + ": '" + text + "'");
  }
  if (used != t.size()) throw ArgumentError("bad number for " + what + ": '" + text + "'");
  return v;
}

std::string fmt15(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// "pow(<a>)" -> a
std::optional<double> parse_pow(const std::string& s) {
  if (s.rfind("pow(", 0) != 0 || s.back() != ')') return std::nullopt;
  return parse_real(s.substr(4, s.size() - 5), "pow exponent");
}

struct Parsed {
  std::string transform;  // "", "ces", "tandori"
  std::vector<std::string> parts;
};

Parsed tokenize(const std::string& text) {
  Parsed p;
  std::string rest = trim(text);
  for (const char* pre : {"ces:", "tandori:"}) {
    if (rest.rfind(pre, 0) == 0) {
      p.transform = std::string(pre).substr(0, std::string(pre).size() - 1);
      rest = rest.substr(std::string(pre).size());
      break;
    }
  }
  p.parts = split(rest, ':');
  if (p.parts.empty() || p.parts[0].empty()) throw ArgumentError("empty space spec");
  return p;
}

// key=value option at parts[i]
std::pair<std::string, std::string> key_value(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw ArgumentError("expected key=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

// Rejoins parts[i..] so file paths may contain ':'.
std::string rest_from(const std::vector<std::string>& parts, std::size_t i) {
  std::string s;
  for (std::size_t k = i; k < parts.size(); ++k) s += (k > i ? ":" : "") + parts[k];
  return s;
}

ConcaveFn parse_phi(const std::vector<std::string>& parts, Domain domain) {
  if (parts.size() < 3) throw ArgumentError("expected " + parts[0] + ":power:<a> or " + parts[0] + ":file:<path>");
  if (parts[1] == "power") {
    if (parts.size() != 3) throw ArgumentError("trailing fields in '" + rest_from(parts, 0) + "'");
    return ConcaveFn::power(parse_real(parts[2], "alpha"), domain);
  }
  if (parts[1] == "file") return load_concave_file(rest_from(parts, 2));
  throw ArgumentError("unknown concave family '" + parts[1] + "'");
}

SeqWeight seq_weight(const std::string& value) {
  if (const auto a = parse_pow(value)) return SeqWeight::power(*a);
  return SeqWeight::values(load_seq_file(value));
}

template <class Spec>
Spec apply_transform(Spec s, const std::string& t) {
  if (t == "ces") return s.with_transform(Spec::Transform::cesaro);
  if (t == "tandori") return s.with_transform(Spec::Transform::tandori);
  return s;
}

// Which polyhedral ball, if any, is the unit ball of the space.
std::optional<BallSpec> seq_ball(const std::string& text, std::size_t n) {
  const Parsed p = tokenize(text);
  if (!p.transform.empty()) return std::nullopt;
  const SeqSpaceSpec s = parse_seq_space(text);
  switch (s.base) {
    case SeqSpaceSpec::Base::lp:
      if (!s.weight.is_unit()) return std::nullopt;
      if (s.p == 1.0) return BallSpec::l1(n);
      if (std::isinf(s.p)) return BallSpec::linf(n);
      return std::nullopt;
    case SeqSpaceSpec::Base::ces_inf:
      return BallSpec::ces_inf(s.weight, n);
    case SeqSpaceSpec::Base::tandori_l1:
      return BallSpec::tandori_l1(s.weight, n);
    default:
      return std::nullopt;
  }
}

std::optional<BallSpec> fn_ball(const FuncSpaceSpec& s) {
  if (s.base == FuncSpaceSpec::Base::linf && s.transform == FuncSpaceSpec::Transform::cesaro) {
    return BallSpec::func_ces_inf(s.weight);
  }
  return std::nullopt;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw ArgumentError("cannot write " + path);
  o << text;
}

json witness_json(const DualWitness& w, const std::string& ball) {
  json j;
  j["ball"] = ball;
  j["value"] = w.value;
  j["pairing"] = w.pairing;
  j["dual_bound"] = w.dual_bound;
  j["violation"] = w.violation;
  j["pivots"] = w.pivots;
  j["active_constraints"] = w.active_constraints;
  j["g"] = w.g;
  if (w.g_fn) {
    j["g_fn"] = {{"breakpoints", w.g_fn->breakpoints()}, {"values", w.g_fn->values()}};
  }
  return j;
}

json step_json(const StepFn& f) {
  json j;
  j["breakpoints"] = f.breakpoints();
  j["values"] = f.values();
  j["domain"] = f.domain() == FnDomain::unit ? std::string("unit") : "halfline:" + fmt15(f.length());
  return j;
}

// Exit-code mapping shared by every subcommand.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return domain;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return domain;
  } catch (const DegenerateError& e) {
    err << "degenerate input: " << e.what() << "\n";
    return domain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return domain;
  }
}

}  // namespace

std::optional<BallSpec> ball_for_seq(const std::string& space, std::size_t n) { return seq_ball(space, n); }

std::optional<BallSpec> ball_for_fn(const FuncSpaceSpec& spec) { return fn_ball(spec); }

SeqSpaceSpec parse_seq_space(const std::string& text) {
  const Parsed p = tokenize(text);
  const auto& parts = p.parts;
  const std::string& kind = parts[0];
  SeqSpaceSpec s;
  if (kind == "lp") {
    if (parts.size() < 2 || parts.size() > 3) throw ArgumentError("expected lp:<p>[:weight=pow(<a>)]");
    SeqWeight w;
    if (parts.size() == 3) {
      const auto [k, v] = key_value(parts[2]);
      if (k != "weight") throw ArgumentError("unknown lp option '" + k + "'");
      const auto a = parse_pow(v);
      if (!a) throw ArgumentError("lp weight must be pow(<a>)");
      w = SeqWeight::power(*a);
    }
    s = SeqSpaceSpec::lp(parse_real(parts[1], "p"), w);
  } else if (kind == "lorentz") {
    s = SeqSpaceSpec::lorentz(parse_phi(parts, Domain::half_line));
  } else if (kind == "marcinkiewicz") {
    s = SeqSpaceSpec::marcinkiewicz(parse_phi(parts, Domain::half_line));
  } else if (kind == "ces_inf" || kind == "tandori_l1") {
    SeqWeight w;
    if (parts.size() >= 2) {
      const auto [k, v] = key_value(rest_from(parts, 1));
      const std::string want = kind == "ces_inf" ? "v" : "w";
      if (k != want) throw ArgumentError(kind + " takes the option " + want + "=");
      w = seq_weight(v);
    }
    s = kind == "ces_inf" ? SeqSpaceSpec::ces_inf(w) : SeqSpaceSpec::tandori_l1(w);
  } else {
    throw ArgumentError("unknown space '" + kind + "'");
  }
  return apply_transform(s, p.transform);
}

FuncSpaceSpec parse_fn_space(const std::string& text, FnDomain domain) {
  const Parsed p = tokenize(text);
  const auto& parts = p.parts;
  const std::string& kind = parts[0];
  const Domain phi_domain = domain == FnDomain::unit ? Domain::unit_interval : Domain::half_line;
  FuncSpaceSpec s;
  if (kind == "lp") {
    if (parts.size() < 2 || parts.size() > 3) throw ArgumentError("expected lp:<p>[:weight=pow(<b>)]");
    FuncWeight w;
    if (parts.size() == 3) {
      const auto [k, v] = key_value(parts[2]);
      const auto b = parse_pow(v);
      if (k != "weight" || !b) throw ArgumentError("lp weight must be weight=pow(<b>)");
      w = FuncWeight::power(1.0, *b);
    }
    const double pv = parse_real(parts[1], "p");
    if (std::isinf(pv) && parts.size() == 3) throw ArgumentError("lp:inf on functions takes no weight");
    s = std::isinf(pv) ? FuncSpaceSpec::linf() : FuncSpaceSpec::lp(pv, w);
  } else if (kind == "lorentz") {
    s = FuncSpaceSpec::lorentz(parse_phi(parts, phi_domain));
  } else if (kind == "marcinkiewicz") {
    s = FuncSpaceSpec::marcinkiewicz(parse_phi(parts, phi_domain));
  } else if (kind == "ces_inf" || kind == "tandori_l1") {
    FuncWeight w;
    if (parts.size() >= 2) {
      const auto [k, v] = key_value(rest_from(parts, 1));
      const auto b = parse_pow(v);
      if (!(k == "w" || k == "v") || !b) throw ArgumentError(kind + " on functions takes w=pow(<b>)");
      w = FuncWeight::power(1.0, *b);
    }
    s = kind == "ces_inf" ? FuncSpaceSpec::ces_inf(w) : FuncSpaceSpec::tandori_l1(w);
  } else {
    throw ArgumentError("unknown space '" + kind + "'");
  }
  return apply_transform(s, p.transform);
}

SeqVec parse_csv(const std::string& text) {
  SeqVec v;
  if (trim(text).empty()) throw ArgumentError("empty sequence");
  for (const std::string& tok : split(text, ',')) v.push_back(parse_real(tok, "sequence entry"));
  for (double x : v) {
    if (!std::isfinite(x)) throw ArgumentError("sequence entries must be finite");
  }
  return v;
}

SeqVec load_seq(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string t = trim(text);
  SeqVec v;
  if (!t.empty() && t.front() == '[') {
    try {
      v = json::parse(t).get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw ArgumentError(std::string("sequence file: ") + e.what());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const std::string l = trim(line);
      if (l.empty() || l.front() == '#') continue;
      v.push_back(parse_real(l, "sequence entry"));
    }
  }
  if (v.empty()) throw ArgumentError("sequence file: no entries");
  for (double x : v) {
    if (!std::isfinite(x)) throw ArgumentError("sequence entries must be finite");
  }
  return v;
}

SeqVec load_seq_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open sequence file: " + path);
  return load_seq(in);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cesaro and Tandori space toolkit", "cesaro_lab"};
  app.require_subcommand(1);

  std::string space, seq_csv, seq_file, fn_path, witness_path, lp_path;
  bool dual = false;
  auto* norm = app.add_subcommand("norm", "norm of a sequence or step function");
  norm->add_option("--space", space, "space spec")->required();
  auto* o_seq = norm->add_option("--seq", seq_csv, "comma separated entries");
  auto* o_seqf = norm->add_option("--seq-file", seq_file, "sequence file");
  auto* o_fn = norm->add_option("--fn", fn_path, "step function file");
  o_seq->excludes(o_seqf)->excludes(o_fn);
  o_seqf->excludes(o_fn);
  norm->add_flag("--dual", dual, "Koethe dual norm by LP (polyhedral spaces)");
  norm->add_option("--witness", witness_path, "write the dual witness as JSON");
  norm->add_option("--lp-dump", lp_path, "write the LP as JSON");

  std::string suite, out_path;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--trials", trials, "trial count (0: suite default)");
  verify->add_option("--out", out_path, "report path (default stdout)");

  std::vector<std::string> reports;
  std::string csv_path;
  auto* report = app.add_subcommand("report", "merge reports into a CSV table");
  report->add_option("reports", reports, "report files");
  report->add_option("--out", csv_path, "CSV path (default stdout)");

  std::string op, t_seq, t_seqf, t_fn;
  auto* transform = app.add_subcommand("transform", "apply C, C*, majorant or rearrangement");
  transform->add_option("--op", op, "cesaro | copson | majorant | rearrange")
      ->required()
      ->check(CLI::IsMember({"cesaro", "copson", "majorant", "rearrange"}));
  auto* t1 = transform->add_option("--seq", t_seq, "comma separated entries");
  auto* t2 = transform->add_option("--seq-file", t_seqf, "sequence file");
  auto* t3 = transform->add_option("--fn", t_fn, "step function file");
  t1->excludes(t2)->excludes(t3);
  t2->excludes(t3);

  app.add_subcommand("suites", "list suite names");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  if (*norm) {
    return guarded(err, [&] {
      const int given = (!seq_csv.empty()) + (!seq_file.empty()) + (!fn_path.empty());
      if (given != 1) throw ArgumentError("norm needs exactly one of --seq, --seq-file, --fn");
      if (!fn_path.empty()) {
        const StepFn f = load_step_file(fn_path);
        const FuncSpaceSpec spec = parse_fn_space(space, f.domain());
        if (!dual) {
          out << fmt15(norm_fn(spec, f)) << "\n";
          return int{ok};
        }
        const auto ball = fn_ball(spec);
        if (!ball) throw ArgumentError("--dual needs a polyhedral space (ces_inf on functions)");
        if (!lp_path.empty()) write_text(lp_path, ball_lp(*ball, f).to_json());
        const DualWitness w = dual_norm(*ball, f);
        if (!witness_path.empty()) write_text(witness_path, witness_json(w, ball->describe()).dump(1) + "\n");
        out << fmt15(w.value) << "\n";
        return int{ok};
      }
      const SeqVec a = seq_csv.empty() ? load_seq_file(seq_file) : parse_csv(seq_csv);
      if (!dual) {
        out << fmt15(norm_seq(parse_seq_space(space), a)) << "\n";
        return int{ok};
      }
      const auto ball = seq_ball(space, a.size());
      if (!ball) throw ArgumentError("--dual needs a polyhedral space: lp:1, lp:inf, ces_inf, tandori_l1");
      if (!lp_path.empty()) write_text(lp_path, ball_lp(*ball, a).to_json());
      const DualWitness w = dual_norm(*ball, a);
      if (!witness_path.empty()) write_text(witness_path, witness_json(w, ball->describe()).dump(1) + "\n");
      out << fmt15(w.value) << "\n";
      return int{ok};
    });
  }

  if (*verify) {
    return guarded(err, [&] {
      if (!is_suite(suite)) throw ArgumentError("unknown suite '" + suite + "'");
      const VerifyReport rep = run_suite(suite, seed, trials);
      const std::string text = rep.to_json();
      if (out_path.empty()) {
        out << text;
      } else {
        write_text(out_path, text);
        std::size_t passed = 0;
        for (const CaseRecord& c : rep.cases) passed += c.pass ? 1 : 0;
        out << suite << ": " << (rep.overall ? "pass" : "FAIL") << " (" << passed << "/" << rep.cases.size()
            << " cases)\n";
      }
      return rep.overall ? int{ok} : int{failed};
    });
  }

  if (*report) {
    return guarded(err, [&] {
      std::ostringstream csv;
      csv << "suite,seed,cases,passed,min_ratio,max_ratio,overall\n";
      for (const std::string& path : reports) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ArgumentError("cannot open report: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        const VerifyReport r = VerifyReport::from_json(buf.str());
        std::size_t passed = 0;
        for (const CaseRecord& c : r.cases) passed += c.pass ? 1 : 0;
        csv << r.suite << "," << r.seed << "," << r.cases.size() << "," << passed << "," << fmt15(r.min_ratio())
            << "," << fmt15(r.max_ratio()) << "," << (r.overall ? "pass" : "fail") << "\n";
      }
      if (csv_path.empty()) {
        out << csv.str();
      } else {
        write_text(csv_path, csv.str());
      }
      return int{ok};
    });
  }

  if (*transform) {
    return guarded(err, [&] {
      const int given = (!t_seq.empty()) + (!t_seqf.empty()) + (!t_fn.empty());
      if (given != 1) throw ArgumentError("transform needs exactly one of --seq, --seq-file, --fn");
      if (!t_fn.empty()) {
        const StepFn f = load_step_file(t_fn);
        if (op == "majorant") {
          out << step_json(majorant_fn(f)).dump(1) << "\n";
        } else if (op == "rearrange") {
          out << step_json(rearrange_fn(f)).dump(1) << "\n";
        } else {
          throw ArgumentError("--fn supports majorant and rearrange (C f and C* f are not step functions)");
        }
        return int{ok};
      }
      const SeqVec a = t_seq.empty() ? load_seq_file(t_seqf) : parse_csv(t_seq);
      SeqVec r;
      if (op == "cesaro") r = cesaro_seq(a);
      if (op == "copson") r = copson_seq(a);
      if (op == "majorant") r = majorant_seq(a);
      if (op == "rearrange") r = rearrange_seq(a);
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << fmt15(r[i]);
      out << "\n";
      return int{ok};
    });
  }

  for (const std::string& n : suite_names()) out << n << "\n";
  return ok;
}

}  // namespace cesaro::cli
