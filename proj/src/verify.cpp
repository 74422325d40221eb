#include "leafwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "leafwave/leaf.hpp"
#include "leafwave/oracle.hpp"

namespace leafwave::cli {
namespace {

using duffing::SolutionType;
using duffing::WaveParams;

struct Collector {
    VerifyReport& report;
    std::string label;

    void add(const std::string& name, double observed, double tol) {
        report.checks.push_back({name, label, observed, tol, observed <= tol});
    }
};

void verify_type(SolutionType type, const WaveParams& params, const VerifyOptions& opt,
                 VerifyReport& report) {
    Collector out{report, duffing::to_string(type)};
    const auto coeffs = duffing::coefficients(type, params);
    const auto meta = duffing::metadata(type, params);
    auto value_at = [&](double t) { return duffing::evaluate(type, params, t); };

    // residual of the governing equation along the wave
    double worst = 0.0;
    for (int i = 0; i <= 512; ++i) {
        const double t = -10.0 + 20.0 * i / 512.0;
        worst = std::max(worst, std::abs(duffing::residual(type, params, t)));
    }
    out.add("residual", worst, opt.residual_tol);

    // energy E = v^2/2 + alpha x^2/2 + beta x^4/4 is a first integral
    auto energy = [&](double t) {
        const double x = value_at(t);
        const double v = duffing::first_derivative(type, params, t);
        return 0.5 * v * v + 0.5 * coeffs.alpha * x * x + 0.25 * coeffs.beta * x * x * x * x;
    };
    const double e0 = energy(0.0);
    worst = 0.0;
    for (int i = 1; i <= 1000; ++i)
        worst = std::max(worst, std::abs(energy(3.0 * meta.period * i / 1000.0) - e0));
    out.add("energy", worst, opt.residual_tol);

    // closed-form initial conditions vs the evaluators at t = 0
    const auto [x0, v0] = duffing::initial_conditions(type, params);
    const double ic_err = std::max(std::abs(x0 - value_at(0.0)),
                                   std::abs(v0 - duffing::first_derivative(type, params, 0.0)));
    out.add("initial_conditions", ic_err, opt.ic_tol);

    // metadata extrema against golden-section refinement over one period
    double lo_arg = 0.0, hi_arg = 0.0, lo_val = value_at(0.0), hi_val = lo_val;
    const int scan = 2000;
    for (int i = 1; i <= scan; ++i) {
        const double t = meta.period * i / scan;
        const double x = value_at(t);
        if (x < lo_val) { lo_val = x; lo_arg = t; }
        if (x > hi_val) { hi_val = x; hi_arg = t; }
    }
    const double cell = meta.period / scan;
    const double t_min = oracle::golden_section_min(value_at, lo_arg - cell, lo_arg + cell);
    const double t_max = oracle::golden_section_min([&](double t) { return -value_at(t); },
                                                    hi_arg - cell, hi_arg + cell);
    const double extrema_err = std::max(std::abs(value_at(t_min) - meta.x_min),
                                        std::abs(value_at(t_max) - meta.x_max));
    out.add("metadata_extrema", extrema_err, opt.extrema_tol);

    // measured period against the closed form
    const double horizon = std::max(12.0, 4.2 * meta.period);
    const double measured = oracle::empirical_period(value_at, 0.0, horizon, 0.01);
    out.add("period", std::abs(measured - meta.period) / meta.period, opt.period_rel_tol);
    if (type == SolutionType::V) {
        char note[160];
        std::snprintf(note, sizeof note,
                      "note: type V measured period %.8f equals pi_2/(2|omega|); the "
                      "alternative pi/(2|omega|) = %.8f does not fit the wave",
                      measured, 0.5 * 3.14159265358979323846 / std::abs(params.angular_frequency));
        report.notes.push_back(note);
    }

    // RK4 trajectory from the initial conditions must track the closed form
    const double span = 3.0 * meta.period;
    const auto traj = oracle::integrate_duffing(coeffs, x0, v0, span, 1e-4);
    worst = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); i += 16)
        worst = std::max(worst, std::abs(traj.states[i][0] - value_at(traj.times[i])));
    out.add("oracle_trajectory", worst, opt.trajectory_tol);
}

} // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_verify(const std::optional<SolutionType>& type, const WaveParams& params,
                        const VerifyOptions& options) {
    duffing::validate(params);
    VerifyReport report;
    if (type) {
        verify_type(*type, params, options, report);
    } else {
        for (SolutionType t : duffing::kAllTypes) verify_type(t, params, options, report);
    }
    return report;
}

std::string render_report(const VerifyReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        char line[160];
        std::snprintf(line, sizeof line, "%s %-18s type=%-3s max_err=%.3e (tol %.0e)\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.type_label.c_str(), c.observed,
                      c.tolerance);
        out += line;
    }
    for (const auto& n : report.notes) {
        out += n;
        out += '\n';
    }
    return out;
}

} // namespace leafwave::cli
