#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "leafwave/cli.hpp"
#include "leafwave/duffing.hpp"
#include "leafwave/leaf.hpp"
#include "leafwave/oracle.hpp"
#include "leafwave/tables.hpp"
#include "leafwave/verify.hpp"

namespace {

using namespace leafwave;

struct Cli {
    std::string type_name;
    cli::RunConfig config;
    std::string format_name = "csv";
    int table_id = 0;
    std::string eval_name;
    int eval_n = 2;
    double eval_t = 0.0;
    std::string out_path;
};

void add_param_flags(CLI::App* cmd, Cli& c) {
    cmd->add_option("--A", c.config.params.amplitude, "wave amplitude (nonzero)");
    cmd->add_option("--omega", c.config.params.angular_frequency,
                    "angular frequency (nonzero)");
    cmd->add_option("--phi", c.config.params.phase, "initial phase");
}

void add_type_flag(CLI::App* cmd, Cli& c, bool required) {
    auto* opt = cmd->add_option("--type", c.type_name, "solution type, one of I..VII");
    if (required) opt->required();
}

cli::VerifyOptions verify_options_from_env() {
    cli::VerifyOptions opt;
    if (const char* env = std::getenv("LEAFWAVE_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) opt.residual_tol = v;
    }
    return opt;
}

int run_tables(const Cli& c) {
    const auto table = cli::make_table(c.table_id);
    const std::string text = cli::render_table(table);
    if (!c.out_path.empty()) {
        std::FILE* f = std::fopen(c.out_path.c_str(), "wb");
        if (!f) throw std::runtime_error("cannot open output file: " + c.out_path);
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    } else {
        std::fputs(text.c_str(), stdout);
    }
    return 0;
}

int run_wave(Cli& c) {
    c.config.type = duffing::type_from_string(c.type_name);
    c.config.format = c.format_name == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;
    if (!c.out_path.empty()) c.config.output_path = c.out_path;
    const std::string body = cli::write_wave(c.config);
    if (!c.config.output_path) std::fputs(body.c_str(), stdout);
    return 0;
}

int run_coeffs(const Cli& c) {
    const auto type = duffing::type_from_string(c.type_name);
    const auto coeffs = duffing::coefficients(type, c.config.params);
    const auto [x0, v0] = duffing::initial_conditions(type, c.config.params);
    std::printf("type = %s\n", duffing::to_string(type).c_str());
    std::printf("alpha = %.12g\n", coeffs.alpha);
    std::printf("beta = %.12g\n", coeffs.beta);
    std::printf("x0 = %.12g\n", x0);
    std::printf("v0 = %.12g\n", v0);
    return 0;
}

int run_verify(const Cli& c) {
    std::optional<duffing::SolutionType> type;
    if (!c.type_name.empty()) type = duffing::type_from_string(c.type_name);
    const auto report = cli::run_verify(type, c.config.params, verify_options_from_env());
    std::fputs(cli::render_report(report).c_str(), stdout);
    return report.all_pass() ? 0 : 1;
}

int run_period(const Cli& c) {
    const auto type = duffing::type_from_string(c.type_name);
    const auto meta = duffing::metadata(type, c.config.params);
    auto f = [&](double t) { return duffing::evaluate(type, c.config.params, t); };
    const double horizon = std::max(12.0, 4.2 * meta.period);
    const double measured = oracle::empirical_period(f, 0.0, horizon, 0.01);
    std::printf("measured_period = %.12g\n", measured);
    std::printf("closed_form_period = %.12g\n", meta.period);
    std::printf("relative_error = %.3e\n", std::abs(measured - meta.period) / meta.period);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Cli c;
    CLI::App app{"leaf-function solutions of the cubic Duffing equation"};
    app.require_subcommand(1);

    auto* tables = app.add_subcommand("tables", "print one of the reference tables");
    tables->add_option("id", c.table_id, "table id, 1..5")->required()->check(CLI::Range(1, 5));
    tables->add_option("--out", c.out_path, "write to file instead of stdout");

    auto* eval = app.add_subcommand("eval", "evaluate a leaf function");
    eval->add_option("name", c.eval_name,
                     "sleaf|cleaf|sleaf_int|cleaf_int|arcsleaf|arccleaf|pi_n")
        ->required();
    eval->add_option("n", c.eval_n, "family index")->required();
    eval->add_option("t", c.eval_t, "argument (time, or x for the inverse functions)");

    auto* wave = app.add_subcommand("wave", "sample a solution to CSV or JSON");
    add_type_flag(wave, c, true);
    add_param_flags(wave, c);
    wave->add_option("--from", c.config.grid.t_start, "start time");
    wave->add_option("--to", c.config.grid.t_end, "end time");
    wave->add_option("--steps", c.config.grid.steps, "sample count (>= 2)");
    wave->add_option("--out", c.out_path, "output file");
    wave->add_option("--format", c.format_name, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* coeffs = app.add_subcommand("coeffs", "print the stiffness coefficients");
    add_type_flag(coeffs, c, true);
    add_param_flags(coeffs, c);

    auto* verify = app.add_subcommand("verify", "run the verification checks");
    add_type_flag(verify, c, false);
    add_param_flags(verify, c);

    auto* period = app.add_subcommand("period", "measure the wave period numerically");
    add_type_flag(period, c, true);
    add_param_flags(period, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tables->parsed()) return run_tables(c);
        if (eval->parsed()) {
            std::printf("%s\n", cli::eval_value(c.eval_name, c.eval_n, c.eval_t).c_str());
            return 0;
        }
        if (wave->parsed()) return run_wave(c);
        if (coeffs->parsed()) return run_coeffs(c);
        if (verify->parsed()) return run_verify(c);
        if (period->parsed()) return run_period(c);
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
