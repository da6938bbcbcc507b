#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace becrad {

struct ValidationCheck {
    std::string name;
    double measured = 0.0;  // worst deviation over the check's grid
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

// Reported but never failing; documents behavior that is a physics signal,
// not an implementation defect.
struct ValidationDiagnostic {
    std::string name;
    double value = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::vector<ValidationDiagnostic> diagnostics;
    bool all_pass() const;
    std::string to_json() const;
};

struct ValidationOptions {
    // Relative error injected into the Bessel K1 values used by the K1
    // integral-representation check; a nonzero value must flip that check to
    // fail (canary proving the suite can catch a broken special function).
    double k1_perturbation = 0.0;
    unsigned long long seed = 0;  // reserved; the suite is deterministic
};

ValidationReport run_validation(const ValidationOptions& options = {});

}  // namespace becrad
