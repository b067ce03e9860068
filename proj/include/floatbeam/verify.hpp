#pragma once

#include <string>
#include <vector>

#include "floatbeam/config.hpp"

namespace floatbeam {

struct CheckResult {
    std::string id;      // A1..A10
    std::string name;
    bool pass = false;
    std::string detail;  // measured value vs threshold
};

struct VerifyOptions {
    // Test hook: negates the platform-side coupling block after assembly,
    // breaking the skew symmetry of G_g. The skew-adjointness check must
    // then fail.
    bool flip_coupling_sign = false;
};

// Runs the full property suite on the given configuration. Every check is
// self-contained and deterministic (randomness seeded from the config).
std::vector<CheckResult> run_verification(const RunConfig& cfg,
                                          const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace floatbeam
