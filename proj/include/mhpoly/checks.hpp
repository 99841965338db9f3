#pragma once

#include <string>
#include <vector>

namespace mhpoly {

struct CheckResult {
    std::string name;
    bool pass;
    double measured;   // worst observed error (or violation count)
    double tolerance;  // pass iff measured <= tolerance
};

struct CheckReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct CheckOptions {
    // Fault-injection hook: added to every recurrence coefficient b_n inside
    // the cross-representation check, which must then fail.
    double b_coeff_perturbation = 0.0;
};

/// Runs the library-wide invariant suites (identities, cross-representation,
/// orthogonality, transform consistency, bounds) at the desk-scale
/// parameters a = 1.23 and (beta, c) = (1.23, 0.36). Deterministic.
CheckReport run_checks(const CheckOptions& options = {});

}  // namespace mhpoly
