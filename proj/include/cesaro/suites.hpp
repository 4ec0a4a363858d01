#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cesaro/concave.hpp"
#include "cesaro/funcspace.hpp"
#include "cesaro/report.hpp"

namespace cesaro {

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Trial count used when run_suite gets trials == 0.
std::size_t default_trials(const std::string& name);

/// Runs a named verification suite. The report is a pure function of
/// (name, seed, trials). Unknown names throw ArgumentError.
VerifyReport run_suite(const std::string& name, std::uint64_t seed, std::size_t trials = 0);

/// Random disjoint blocks x_k on the kept intervals: for every prefix m,
/// max_k ||x_k|| <= ||x_1 + ... + x_m|| in CM_phi (checked) and the ratio
/// ||sum|| / max (reported as the empirical right constant).
VerifyReport verify_block_c0(const ConcaveFn& phi, const std::vector<Interval>& kept,
                             std::size_t trials, std::uint64_t seed);

}  // namespace cesaro
