#pragma once

#include <string>
#include <vector>

namespace gonality {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    int jobs = 1;
};

/// Tricycle gonalities, the σ₂ divisor certificates, the skewered
/// upper-bound divisors and the Brill-Noether bound on those families.
std::vector<CheckResult> verify_families(const VerifyOptions& options = {});

} // namespace gonality
