#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "kgbem/cli.hpp"
#include "kgbem/field.hpp"

namespace fs = std::filesystem;
using kgbem::cli::cli_main;
using kgbem::cli::load_config;
using kgbem::Point2;

namespace {

struct TempDir {
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("kgbem_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path path;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        rows.push_back(cells);
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int rc = cli_main(args, out, err);
    if (err_text) *err_text = err.str();
    return rc;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("presets load and validate") {
    for (const char* name : {"example1a", "example1b", "example2"}) {
        const auto cfg = load_config(name);
        CHECK_NOTHROW(kgbem::cli::make_problem(cfg));
        CHECK(cfg.m.has_value());
        CHECK(cfg.probes.size() == 4);
        CHECK(cfg.m_list.size() == 5);
    }
    CHECK_THROWS_AS(load_config("no_such_preset_or_file"), std::domain_error);
}

TEST_CASE("format_double is plain and round-trips") {
    CHECK(kgbem::cli::format_double(1.0) == "1");
    CHECK(kgbem::cli::format_double(-0.5) == "-0.5");
    const double v = 0.017028592129868475;
    CHECK(std::stod(kgbem::cli::format_double(v)) == v);
}

TEST_CASE("solve writes densities and probes with the study-level error") {
    TempDir tmp;
    const int rc = run({"solve", "--config", "example1a", "--out", tmp.path.string()});
    CHECK(rc == 0);

    const auto densities = parse_csv(slurp(tmp.path / "densities.csv"));
    REQUIRE(densities.size() == 1 + 2 * 32);  // header + 2M rows per curve, M=16
    CHECK(densities[0] == std::vector<std::string>{"curve", "j", "t_j", "psi"});
    CHECK(densities[1][0] == "1");
    CHECK(densities[1 + 32][0] == "2");

    const auto probes = parse_csv(slurp(tmp.path / "probes.csv"));
    REQUIRE(probes.size() == 5);
    CHECK(probes[0] == std::vector<std::string>{"x1", "x2", "u", "abs_error"});
    // First probe is (0, 0.5); its error at M = 16 sits at the 1e-11 level.
    const double err = std::stod(probes[1][3]);
    CHECK(err > 1e-12);
    CHECK(err < 5e-11);
}

TEST_CASE("solve probe values round-trip bit-identically") {
    TempDir tmp;
    REQUIRE(run({"solve", "--config", "example1b", "--out", tmp.path.string()}) == 0);
    const auto cfg = load_config("example1b");
    const auto problem = kgbem::cli::make_problem(cfg);
    const auto sol = kgbem::solve_problem(problem, *cfg.m);

    const auto probes = parse_csv(slurp(tmp.path / "probes.csv"));
    REQUIRE(probes.size() == cfg.probes.size() + 1);
    for (std::size_t p = 0; p < cfg.probes.size(); ++p) {
        const double u_file = std::stod(probes[p + 1][2]);
        CHECK(u_file == kgbem::eval_interior(sol, cfg.probes[p]));
    }
}

TEST_CASE("solve is deterministic") {
    TempDir a, b;
    REQUIRE(run({"solve", "--config", "example1a", "--out", a.path.string()}) == 0);
    REQUIRE(run({"solve", "--config", "example1a", "--out", b.path.string()}) == 0);
    CHECK(slurp(a.path / "densities.csv") == slurp(b.path / "densities.csv"));
    CHECK(slurp(a.path / "probes.csv") == slurp(b.path / "probes.csv"));
}

TEST_CASE("malformed config exits 1 without partial files") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "broken.json";
    std::ofstream(cfg) << "{ not json";
    const fs::path out = tmp.path / "out";
    std::string err;
    CHECK(run({"solve", "--config", cfg.string(), "--out", out.string()}, &err) == 1);
    CHECK(!fs::exists(out / "densities.csv"));
    CHECK(!fs::exists(out / "probes.csv"));
}

TEST_CASE("schema violations exit 1") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "bad.json";
    std::ofstream(cfg) << R"({"physics": {"kappa": 1.0, "lambda1": 1.0, "lambda2": 1.0},
        "gamma1": {"kind": "banana"},
        "gamma2": {"kind": "circle", "r": 0.5},
        "data": {"kind": "fundamental", "y_star": [4, 0]}, "m": 8})";
    std::string err;
    CHECK(run({"solve", "--config", cfg.string(), "--out", (tmp.path / "o").string()},
              &err) == 1);
}

TEST_CASE("source point inside the domain exits 1 with a clear message") {
    TempDir tmp;
    const fs::path cfg = tmp.path / "inside.json";
    std::ofstream(cfg) << R"({"physics": {"kappa": 1.0, "lambda1": 1.0, "lambda2": 1.0},
        "gamma1": {"kind": "circle", "r": 2.0},
        "gamma2": {"kind": "circle", "r": 0.5},
        "data": {"kind": "fundamental", "y_star": [1.0, 0.0]},
        "m": 8, "probes": [[1.2, 0.0]]})";
    std::string err;
    CHECK(run({"solve", "--config", cfg.string(), "--out", (tmp.path / "o").string()},
              &err) == 1);
    CHECK(err.find("source point inside domain") != std::string::npos);
}

TEST_CASE("convergence report for exact data has abs_error rows") {
    TempDir tmp;
    const fs::path out = tmp.path / "conv.csv";
    REQUIRE(run({"convergence", "--config", "example1a", "--m-list", "4,8,16,32,64",
                 "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 1 + 5 * 4);  // header + |m_list| x |probes|
    CHECK(rows[0] == std::vector<std::string>{"M", "probe", "x1", "x2", "u", "abs_error"});
    // Errors shrink with M for each probe.
    for (int p = 0; p < 4; ++p) {
        const double first = std::stod(rows[1 + p][5]);
        const double last = std::stod(rows[1 + 4 * 4 + p][5]);
        CHECK(last < first);
        CHECK(last < 1e-13);
    }
}

TEST_CASE("convergence with non-exact data uses successive differences") {
    TempDir tmp;
    const fs::path out = tmp.path / "conv2.csv";
    REQUIRE(run({"convergence", "--config", "example2", "--m-list", "32,64", "--out",
                 out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 1 + 2 * 4);
    CHECK(rows[0] == std::vector<std::string>{"M", "probe", "x1", "x2", "u", "diff_prev"});
    for (int p = 0; p < 4; ++p) {
        CHECK(rows[1 + p][5].empty());          // no predecessor for the first M
        CHECK(!rows[1 + 4 + p][5].empty());
        CHECK(std::stod(rows[1 + 4 + p][5]) <= 1e-5);
    }
}

TEST_CASE("single-M convergence with non-exact data leaves the column empty") {
    TempDir tmp;
    const fs::path out = tmp.path / "conv3.csv";
    REQUIRE(run({"convergence", "--config", "example2", "--m-list", "8", "--out",
                 out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 5);
    for (int p = 0; p < 4; ++p) CHECK(rows[1 + p][5].empty());
}

TEST_CASE("descending m-list is rejected") {
    TempDir tmp;
    std::string err;
    CHECK(run({"convergence", "--config", "example1a", "--m-list", "8,4", "--out",
               (tmp.path / "x.csv").string()}, &err) == 1);
}

TEST_CASE("field grid separates annulus, hole and exterior") {
    TempDir tmp;
    const fs::path out = tmp.path / "field.csv";
    REQUIRE(run({"field", "--config", "example1b", "--grid", "50", "50", "--bbox",
                 "-2.2", "-2.2", "2.2", "2.2", "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 1 + 50 * 50);
    CHECK(rows[0] == std::vector<std::string>{"x1", "x2", "u"});
    int populated = 0, blank = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        REQUIRE(rows[r].size() == 3);
        const double x = std::stod(rows[r][0]);
        const double y = std::stod(rows[r][1]);
        const double rad = std::hypot(x, y);
        if (rows[r][2].empty()) {
            ++blank;
            CHECK((rad < 0.55 || rad > 1.95));
        } else {
            ++populated;
            CHECK(rad < 2.0);
            CHECK(rad > 0.5);
        }
    }
    CHECK(populated > 1000);
    CHECK(blank > 400);
}

TEST_CASE("grid fully outside the domain gives blank rows and exit 0") {
    TempDir tmp;
    const fs::path out = tmp.path / "field_out.csv";
    REQUIRE(run({"field", "--config", "example1b", "--grid", "3", "3", "--bbox", "5.0",
                 "5.0", "6.0", "6.0", "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 10);
    for (std::size_t r = 1; r < rows.size(); ++r) CHECK(rows[r][2].empty());
}

TEST_CASE("degenerate 1x1 grid equals the solve probe value bit for bit") {
    TempDir tmp;
    const fs::path out = tmp.path / "one.csv";
    REQUIRE(run({"field", "--config", "example1b", "--grid", "1", "1", "--bbox", "1.0",
                 "1.0", "1.0", "1.0", "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 2);

    TempDir solvedir;
    REQUIRE(run({"solve", "--config", "example1b", "--out", solvedir.path.string()}) == 0);
    const auto probes = parse_csv(slurp(solvedir.path / "probes.csv"));
    // Probe (1,1) is the first configured probe of example1b.
    CHECK(rows[1][2] == probes[1][2]);
}

TEST_CASE("unknown subcommand or missing options exit 1") {
    std::string err;
    CHECK(run({"frobnicate"}, &err) == 1);
    CHECK(run({"solve"}, &err) == 1);
}

}  // TEST_SUITE
