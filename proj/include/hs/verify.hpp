#pragma once

#include <string>
#include <vector>

#include "hs/scalar.hpp"

namespace hs {

struct CheckResult {
    std::string name;
    bool pass = false;
    double delta = 0.0;
    double tol = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int depth = 256;
    int moduli = 8;           // |a| = 0.1 .. 0.1*moduli
    int phases = 8;
    int vectors_per_residue = 5;
    unsigned seed = 946;
    bool mutate_rho = false;  // perturbs the closed-form route to prove the
                              // recurrence cross-check can fail
};

/// Runs every module invariant at the grid defaults. A failed check is
/// reported, never skipped.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

}  // namespace hs
