#include "leafwave/tables.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "leafwave/duffing.hpp"
#include "leafwave/leaf.hpp"

namespace leafwave::cli {
namespace {

std::vector<std::vector<double>> solution_rows(duffing::SolutionType type, double alpha,
                                               double beta, bool with_trig) {
    const duffing::WaveParams params{};
    std::vector<std::vector<double>> rows;
    for (int i = -10; i <= 10; ++i) {
        const double t = i;
        const double x = duffing::evaluate(type, params, t);
        const double a = duffing::second_derivative(type, params, t);
        const double combo = a + alpha * x + beta * x * x * x;
        std::vector<double> row{t, x, x * x * x, a, combo};
        if (with_trig) {
            const double fs = integral_sleaf2(t);
            row = {t, std::cos(fs), std::sin(fs), x, x * x * x, a, combo};
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

TableArtifact make_table(int table_id) {
    switch (table_id) {
        case 1: {
            TableArtifact t{1, {"n", "pi_n"}, {}};
            for (int n = 1; n <= 3; ++n)
                t.rows.push_back({static_cast<double>(n), period_constant(n)});
            return t;
        }
        case 2: {
            TableArtifact t{2, {"t", "sleaf_2", "cleaf_2", "int_sleaf_2", "int_cleaf_2"}, {}};
            for (int i = -10; i <= 10; ++i) {
                const double x = i;
                t.rows.push_back(
                    {x, sleaf(2, x), cleaf(2, x), integral_sleaf2(x), integral_cleaf2(x)});
            }
            return t;
        }
        case 3:
            return {3,
                    {"t", "x", "x^3", "d2x_dt2", "d2x_dt2-3x+4x^3"},
                    solution_rows(duffing::SolutionType::I, -3.0, 4.0, false)};
        case 4:
            return {4,
                    {"t", "x", "x^3", "d2x_dt2", "d2x_dt2+3x-4x^3"},
                    solution_rows(duffing::SolutionType::II, 3.0, -4.0, false)};
        case 5:
            return {5,
                    {"t", "cos_int_sleaf_2", "sin_int_sleaf_2", "x", "x^3", "d2x_dt2",
                     "d2x_dt2-3x+2x^3"},
                    solution_rows(duffing::SolutionType::III, -3.0, 2.0, true)};
        default:
            throw std::invalid_argument("table id must be in 1..5");
    }
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    if (s[0] == '-' && s.find_first_not_of("0.", 1) == std::string::npos)
        s.erase(0, 1); // normalize -0.000... to 0.000...
    return s;
}

std::string render_table(const TableArtifact& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += '\t';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            if (table.table_id == 1)
                out += format_fixed(row[i], i == 0 ? 0 : 3);
            else
                out += format_fixed(row[i], i == 0 ? 1 : 5);
        }
        out += '\n';
    }
    return out;
}

} // namespace leafwave::cli
