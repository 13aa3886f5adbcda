#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricode/codes.hpp"

namespace toricode {

/// Settings for the self-verification run.  Defaults cover every family of
/// results the library computes, at sizes that finish in seconds.
struct VerifyOptions {
    std::vector<std::uint32_t> q_grid{3, 4, 5};
    std::vector<std::uint32_t> s_grid{2, 3, 4};
    /// Field sizes for the projective line and plane cross-checks.
    std::vector<std::uint32_t> line_plane_q_grid{3, 4, 5, 7};
    std::uint64_t point_cap = default_point_cap;
    std::uint64_t codeword_cap = default_codeword_cap;
    std::uint64_t entry_cap = default_entry_cap;
    std::uint64_t seed = 1;
    std::uint32_t sweep_samples = 1000;
    bool include_clutters = true;
    /// Name of a check that must report failure (exercises the failure
    /// path end to end); empty for a normal run.
    std::string inject_fault;
};

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;    // individual assertions executed
    std::uint64_t skipped = 0;  // subcases skipped, e.g. over a cap
    bool passed = false;
    std::string detail;  // first failure, or the reason cases were skipped
};

struct VerificationReport {
    VerifyOptions options;  // echoed so a report is self-describing
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Names of all checks run_verification performs, in execution order.
const std::vector<std::string>& verification_check_names();

/// Re-derives the library's computed results from independent directions
/// (closed formulas against exhaustive scans, profiles against series,
/// bounds against brute-force zero counts) and reports one result per
/// check.  Deterministic for fixed options, including the seeded random
/// sweep.
VerificationReport run_verification(const VerifyOptions& options = {});

}
