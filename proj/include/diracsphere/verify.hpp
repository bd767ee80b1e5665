#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diracsphere {

struct CheckResult {
    std::string name;   // stable slug, e.g. "spectral_resolution"
    std::string claim;  // the quantitative statement being tested
    double residual = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::map<std::string, std::string> info; // extra fields, e.g. calibrated signs
};

struct VerifyConfig {
    int n = 2;
    int m_max = 3;
    int quad_degree = 0; // 0 = derive from m_max
    std::uint64_t seed = 42;
    std::optional<double> tol_override; // replaces every check bound when set
};

/// Runs the full invariant suite: the operator identities, orthogonality,
/// the addition/reproducing kernels, the boundary-integral theorems, the
/// spectral resolution, the three Sobolev estimates, and the projector
/// consistency. Deterministic for a fixed config.
std::vector<CheckResult> run_verification_suite(const VerifyConfig& config);

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace diracsphere
