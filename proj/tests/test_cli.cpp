#include <doctest.h>

#include "test_support.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafwave/cli.hpp"
#include "leafwave/tables.hpp"
#include "leafwave/verify.hpp"

using namespace leafwave;
using cli::GridSpec;
using duffing::SolutionType;
using duffing::WaveParams;

namespace {

constexpr double kPi2 = 2.6220575542921198;

std::vector<std::vector<std::string>> split_csv(const std::string& body) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

int run_cli(const std::string& args, const std::string& env = {}) {
    const std::string cmd =
        env + std::string(LEAFWAVE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("format_fixed normalizes negative zero") {
    CHECK(cli::format_fixed(0.0, 5) == "0.00000");
    CHECK(cli::format_fixed(-1e-9, 5) == "0.00000");
    CHECK(cli::format_fixed(-0.0, 5) == "0.00000");
    CHECK(cli::format_fixed(-1.25, 5) == "-1.25000");
    CHECK(cli::format_fixed(3.14159265, 3) == "3.142");
}

TEST_CASE("table artifacts") {
    SUBCASE("table 1 rounds to the published constants") {
        const auto t1 = cli::make_table(1);
        CHECK(t1.rows.size() == 3);
        const std::string text = cli::render_table(t1);
        CHECK(text.find("3.142") != std::string::npos);
        CHECK(text.find("2.622") != std::string::npos);
        CHECK(text.find("2.429") != std::string::npos);
    }

    SUBCASE("table 2 shape and the t = 0 row") {
        const auto t2 = cli::make_table(2);
        CHECK(t2.rows.size() == 21);
        for (const auto& row : t2.rows) CHECK(row.size() == 5);
        const auto& mid = t2.rows[10];
        CHECK(mid[0] == 0.0);
        CHECK(cli::format_fixed(mid[1], 5) == "0.00000");
        CHECK(cli::format_fixed(mid[2], 5) == "1.00000");
        CHECK(cli::format_fixed(mid[3], 5) == "0.00000");
        CHECK(cli::format_fixed(mid[4], 5) == "0.00000");
    }

    SUBCASE("tables 3-5 carry vanishing combination columns") {
        for (int id : {3, 4, 5}) {
            const auto t = cli::make_table(id);
            CHECK(t.rows.size() == 21);
            for (const auto& row : t.rows) {
                CHECK(std::abs(row.back()) < 1e-8);
                CHECK(cli::format_fixed(row.back(), 5) == "0.00000");
            }
        }
        const auto t5 = cli::make_table(5);
        for (const auto& row : t5.rows) CHECK(row.size() == 7);
    }

    CHECK_THROWS_AS(cli::make_table(0), std::invalid_argument);
    CHECK_THROWS_AS(cli::make_table(6), std::invalid_argument);
}

TEST_CASE("wave CSV output") {
    const WaveParams p{1, 1, 0};

    SUBCASE("shape and golden x column") {
        const std::string body = cli::wave_csv(SolutionType::I, p, GridSpec{});
        const auto rows = split_csv(body);
        CHECK(rows.size() == 22); // header + 21 samples
        CHECK(rows[0] == std::vector<std::string>{"t", "x", "v", "a", "residual"});
        const auto t3 = cli::make_table(3);
        for (int i = 0; i < 21; ++i) {
            CHECK(std::stod(rows[i + 1][0]) == doctest::Approx(t3.rows[i][0]));
            CHECK(std::stod(rows[i + 1][1]) == testutil::within(t3.rows[i][1], 1e-8));
        }
        CHECK(body.find('\r') == std::string::npos); // LF only
    }

    SUBCASE("two-point grid") {
        const auto rows = split_csv(cli::wave_csv(SolutionType::II, p, {0.0, 1.0, 2}));
        CHECK(rows.size() == 3);
        CHECK(rows[1][0] == "0");
        CHECK(rows[2][0] == "1");
    }

    SUBCASE("type VII quarter-period grid shows the alternating extrema") {
        const auto rows = split_csv(cli::wave_csv(SolutionType::VII, p, {0.0, kPi2, 5}));
        const double e = std::sqrt(2.0) - 1.0;
        CHECK(std::abs(std::stod(rows[1][1])) < 1e-8);
        CHECK(std::stod(rows[2][1]) == testutil::within(e, 1e-8));
        CHECK(std::abs(std::stod(rows[3][1])) < 1e-8);
        CHECK(std::stod(rows[4][1]) == testutil::within(-e, 1e-8));
        CHECK(std::abs(std::stod(rows[5][1])) < 1e-8);
    }

    SUBCASE("round trip satisfies the governing equation at CSV precision") {
        const auto c = duffing::coefficients(SolutionType::VI, p);
        const auto rows = split_csv(cli::wave_csv(SolutionType::VI, p, GridSpec{}));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double x = std::stod(rows[i][1]);
            const double a = std::stod(rows[i][3]);
            CHECK(std::abs(a + c.alpha * x + c.beta * x * x * x) < 1e-6);
        }
    }

    SUBCASE("byte-identical across invocations") {
        const std::string one = cli::wave_csv(SolutionType::V, {2, 0.5, 0.3}, GridSpec{});
        const std::string two = cli::wave_csv(SolutionType::V, {2, 0.5, 0.3}, GridSpec{});
        CHECK(one == two);
    }
}

TEST_CASE("wave JSON output") {
    const std::string body = cli::wave_json(SolutionType::III, {2, 1, 0}, {0.0, 1.0, 3});
    const auto doc = nlohmann::json::parse(body);
    CHECK(doc["meta"]["type"] == "III");
    CHECK(doc["meta"]["params"]["A"] == 2.0);
    CHECK(doc["meta"]["params"]["omega"] == 1.0);
    CHECK(doc["meta"]["params"]["phi"] == 0.0);
    CHECK(doc["meta"]["coefficients"]["alpha"] == doctest::Approx(-3.0));
    CHECK(doc["meta"]["coefficients"]["beta"] == doctest::Approx(0.5));
    CHECK(doc["meta"]["metadata"]["period"] == testutil::within(kPi2, 1e-10));
    CHECK(doc["samples"].size() == 3);
    for (const auto& s : doc["samples"]) {
        CHECK(s.contains("t"));
        CHECK(s.contains("x"));
        CHECK(s.contains("v"));
        CHECK(s.contains("a"));
        CHECK(s.contains("residual"));
    }
}

TEST_CASE("write_wave") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "leafwave_test_io";
    fs::create_directories(dir);

    cli::RunConfig cfg;
    cfg.type = SolutionType::VII;
    cfg.grid = {0.0, kPi2, 5};
    cfg.output_path = (dir / "wave.csv").string();
    const std::string body = cli::write_wave(cfg);

    std::ifstream in(*cfg.output_path, std::ios::binary);
    std::stringstream read;
    read << in.rdbuf();
    CHECK(read.str() == body);

    cli::RunConfig missing_type;
    CHECK_THROWS_AS(cli::write_wave(missing_type), std::invalid_argument);

    cli::RunConfig bad_path = cfg;
    bad_path.output_path = (dir / "no_such_dir" / "wave.csv").string();
    CHECK_THROWS_AS(cli::write_wave(bad_path), std::runtime_error);

    fs::remove_all(dir);
}

TEST_CASE("eval_value prints 12 significant digits") {
    CHECK(cli::eval_value("sleaf", 2, 1.0) == "0.907683221405");
    CHECK(cli::eval_value("pi_n", 2, 0.0) == "2.62205755429");
    CHECK(cli::eval_value("arcsleaf", 2, 1.0) == "1.31102877715");
    CHECK(cli::eval_value("cleaf_int", 2, 1.0) == "0.737043794947");
    CHECK_THROWS_AS(cli::eval_value("nope", 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cli::eval_value("arcsleaf", 2, 2.0), std::domain_error);
    CHECK_THROWS_AS(cli::eval_value("sleaf_int", 3, 0.0), std::domain_error);
}

TEST_CASE("verify report") {
    const auto report = cli::run_verify(SolutionType::VII, WaveParams{}, {});
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 6);
    const std::string text = cli::render_report(report);
    CHECK(text.find("PASS residual") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);

    const auto v = cli::run_verify(SolutionType::V, WaveParams{}, {});
    CHECK(v.notes.size() == 1);
    CHECK(cli::render_report(v).find("1.31102878") != std::string::npos);

    CHECK_THROWS_AS(cli::run_verify(SolutionType::I, {0.0, 1, 0}, {}), std::invalid_argument);
}

TEST_CASE("command line binary") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "leafwave_test_cli";
    fs::create_directories(dir);
    const std::string out = (dir / "wave.csv").string();

    CHECK(run_cli("tables 1") == 0);
    CHECK(run_cli("tables 9") == 2);
    const std::string table_out = (dir / "table2.txt").string();
    CHECK(run_cli("tables 2 --out " + table_out) == 0);
    CHECK(fs::exists(table_out));
    CHECK(run_cli("eval sleaf 2 1.0") == 0);
    CHECK(run_cli("eval bogus 2 1.0") == 2);
    CHECK(run_cli("eval arcsleaf 2 1.5") == 2);
    CHECK(run_cli("wave --type I --out " + out) == 0);
    CHECK(fs::exists(out));
    CHECK(run_cli("wave --type I --A 0 --out " + out) == 2);
    CHECK(run_cli("wave") == 2);
    CHECK(run_cli("coeffs --type VII --A 2") == 0);
    CHECK(run_cli("verify --type VII") == 0);
    // LEAFWAVE_TOL overrides the residual tolerance; an impossible demand fails
    CHECK(run_cli("verify --type VII", "LEAFWAVE_TOL=1e-30 ") == 1);
    CHECK(run_cli("verify --type VII", "LEAFWAVE_TOL=1e-4 ") == 0);

    SUBCASE("identical invocations produce byte-identical files") {
        const std::string out2 = (dir / "wave2.csv").string();
        CHECK(run_cli("wave --type VI --A 2 --omega 0.5 --phi 0.3 --out " + out) == 0);
        CHECK(run_cli("wave --type VI --A 2 --omega 0.5 --phi 0.3 --out " + out2) == 0);
        std::ifstream a(out, std::ios::binary), b(out2, std::ios::binary);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK(sa.str() == sb.str());
        CHECK(!sa.str().empty());
    }

    fs::remove_all(dir);
}
