#pragma once

#include <string>
#include <vector>

namespace bresse {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // measured value vs tolerance
};

// Pinned desk-scale verification batteries.
std::vector<CheckResult> verify_energy_suite();    // identities, baselines, monotonicity
std::vector<CheckResult> verify_spectrum_suite();  // abscissas, conjugate closure
std::vector<CheckResult> verify_limits_suite();    // singular limits
std::vector<CheckResult> verify_orders_suite();    // spatial/temporal convergence
std::vector<CheckResult> verify_oracle_suite();    // matrix exponential, DPL forms, reduction

// suite in {"energy", "limits", "spectrum", "all"}; throws ValidationError
// on an unknown suite name.
std::vector<CheckResult> verify_suite(const std::string& suite);

} // namespace bresse
