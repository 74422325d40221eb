#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafwave/duffing.hpp"

namespace leafwave::cli {

struct CheckResult {
    std::string name;
    std::string type_label;
    double observed; // max error seen by the check
    double tolerance;
    bool pass;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool all_pass() const;
};

struct VerifyOptions {
    double residual_tol = 1e-8; // also bounds the energy drift check
    double ic_tol = 1e-10;
    double extrema_tol = 1e-8;
    double period_rel_tol = 1e-5;
    double trajectory_tol = 1e-5;
};

// Residual, energy, initial-condition, metadata (extrema + measured period)
// and RK4-trajectory checks for one type, or for all seven when type is
// absent.
VerifyReport run_verify(const std::optional<duffing::SolutionType>& type,
                        const duffing::WaveParams& params, const VerifyOptions& options = {});

// One PASS/FAIL line per check, notes appended.
std::string render_report(const VerifyReport& report);

} // namespace leafwave::cli
