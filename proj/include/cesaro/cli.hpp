#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/duality.hpp"
#include "cesaro/funcspace.hpp"
#include "cesaro/seqspace.hpp"

namespace cesaro::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, domain = 3 };

/// Space grammar, optionally prefixed by `ces:` or `tandori:`:
///   lp:<p>[:weight=pow(<a>)]     p may be `inf`
///   lorentz:power:<a>  lorentz:file:<path>
///   marcinkiewicz:power:<a>  marcinkiewicz:file:<path>
///   ces_inf[:v=<file>|:v=pow(<a>)]  tandori_l1[:w=<file>|:w=pow(<a>)]
SeqSpaceSpec parse_seq_space(const std::string& text);
/// Same grammar for functions; weights are pow(<b>) only and ces_inf / tandori_l1
/// take `w=pow(<b>)` (W(x) = int_0^x t^b dt).
FuncSpaceSpec parse_fn_space(const std::string& text, FnDomain domain);

/// The polyhedral unit ball of a sequence space on the first n coordinates:
/// lp:1, lp:inf, ces_inf and tandori_l1 (no prefix). nullopt otherwise.
std::optional<BallSpec> ball_for_seq(const std::string& space, std::size_t n);
/// Functions: only ces_inf.
std::optional<BallSpec> ball_for_fn(const FuncSpaceSpec& spec);

/// "1, 2.5,-3" -> {1, 2.5, -3}.
SeqVec parse_csv(const std::string& text);
/// One real per line (blank and # lines skipped) or a single JSON array.
SeqVec load_seq(std::istream& in);
SeqVec load_seq_file(const std::string& path);

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cesaro::cli
