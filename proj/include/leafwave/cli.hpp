#pragma once

#include <optional>
#include <string>

#include "leafwave/duffing.hpp"

namespace leafwave::cli {

enum class OutputFormat { csv, json };

struct GridSpec {
    double t_start = -10.0;
    double t_end = 10.0;
    int steps = 21;
};

struct RunConfig {
    std::optional<duffing::SolutionType> type;
    duffing::WaveParams params{};
    GridSpec grid{};
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::csv;
};

// CSV body: header "t,x,v,a,residual", LF line ends, 9 significant digits.
std::string wave_csv(duffing::SolutionType type, const duffing::WaveParams& params,
                     const GridSpec& grid);

// JSON body: {"meta": {type, params, coefficients, metadata}, "samples": [...]}.
std::string wave_json(duffing::SolutionType type, const duffing::WaveParams& params,
                      const GridSpec& grid);

// Renders config.format to config.output_path (or returns the text when no
// path is set).  Throws std::invalid_argument without a type selector and
// std::runtime_error on an unwritable path.
std::string write_wave(const RunConfig& config);

// Value of the named leaf-function operation at 12 significant digits.
// name in {sleaf, cleaf, sleaf_int, cleaf_int, arcsleaf, arccleaf, pi_n}.
std::string eval_value(const std::string& name, int n, double t);

} // namespace leafwave::cli
