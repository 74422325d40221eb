#include "leafwave/cli.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "leafwave/leaf.hpp"

namespace leafwave::cli {
namespace {

std::string num9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

std::string wave_csv(duffing::SolutionType type, const duffing::WaveParams& params,
                     const GridSpec& grid) {
    const auto samples = duffing::sample_wave(type, params, grid.t_start, grid.t_end, grid.steps);
    std::string out = "t,x,v,a,residual\n";
    for (const auto& s : samples) {
        out += num9(s.t);
        out += ',';
        out += num9(s.x);
        out += ',';
        out += num9(s.v);
        out += ',';
        out += num9(s.a);
        out += ',';
        out += num9(s.residual);
        out += '\n';
    }
    return out;
}

std::string wave_json(duffing::SolutionType type, const duffing::WaveParams& params,
                      const GridSpec& grid) {
    const auto samples = duffing::sample_wave(type, params, grid.t_start, grid.t_end, grid.steps);
    const auto coeffs = duffing::coefficients(type, params);
    const auto meta = duffing::metadata(type, params);

    nlohmann::ordered_json doc;
    doc["meta"] = {
        {"type", duffing::to_string(type)},
        {"params",
         {{"A", params.amplitude}, {"omega", params.angular_frequency}, {"phi", params.phase}}},
        {"coefficients", {{"alpha", coeffs.alpha}, {"beta", coeffs.beta}}},
        {"metadata",
         {{"x_min", meta.x_min},
          {"x_max", meta.x_max},
          {"center", meta.center},
          {"amplitude", meta.amplitude},
          {"period", meta.period}}},
    };
    auto& arr = doc["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : samples)
        arr.push_back({{"t", s.t}, {"x", s.x}, {"v", s.v}, {"a", s.a}, {"residual", s.residual}});
    return doc.dump(2) + "\n";
}

std::string write_wave(const RunConfig& config) {
    if (!config.type) throw std::invalid_argument("wave output requires a solution type");
    const std::string body = config.format == OutputFormat::csv
                                 ? wave_csv(*config.type, config.params, config.grid)
                                 : wave_json(*config.type, config.params, config.grid);
    if (config.output_path) {
        std::ofstream out(*config.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + *config.output_path);
        out << body;
        if (!out) throw std::runtime_error("failed writing output file: " + *config.output_path);
    }
    return body;
}

std::string eval_value(const std::string& name, int n, double t) {
    if ((name == "sleaf_int" || name == "cleaf_int") && n != 2)
        throw std::domain_error("integral leaf functions are defined for n = 2");
    double v = 0.0;
    if (name == "sleaf")
        v = sleaf(n, t);
    else if (name == "cleaf")
        v = cleaf(n, t);
    else if (name == "sleaf_int")
        v = integral_sleaf2(t);
    else if (name == "cleaf_int")
        v = integral_cleaf2(t);
    else if (name == "arcsleaf")
        v = arcsleaf(n, t);
    else if (name == "arccleaf")
        v = arccleaf(n, t);
    else if (name == "pi_n")
        v = period_constant(n);
    else
        throw std::invalid_argument("unknown function name: " + name);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace leafwave::cli
