#include "kgbem/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgbem/errors.hpp"
#include "kgbem/field.hpp"

namespace kgbem::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Output formatting and atomic file writes
// ---------------------------------------------------------------------------

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::domain_error("cannot open output file " + tmp.string());
        f << content;
        if (!f) throw std::domain_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

Eigen::VectorXd parse_coeffs(const json& j, const char* key) {
    if (!j.contains(key)) return Eigen::VectorXd();
    const auto& arr = j.at(key);
    Eigen::VectorXd v(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) v[k] = arr[k].get<double>();
    return v;
}

ParametricCurve parse_curve(const json& j, const std::string& name) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::domain_error("curve " + name + " needs a \"kind\" field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "circle") return ParametricCurve::circle(j.at("r").get<double>());
    if (kind == "ellipse") {
        return ParametricCurve::ellipse(j.at("a").get<double>(), j.at("b").get<double>());
    }
    if (kind == "trig") {
        TrigSeries x1, x2;
        x1.constant = j.value("x1_const", 0.0);
        x1.cos_coeffs = parse_coeffs(j, "x1_cos");
        x1.sin_coeffs = parse_coeffs(j, "x1_sin");
        x2.constant = j.value("x2_const", 0.0);
        x2.cos_coeffs = parse_coeffs(j, "x2_cos");
        x2.sin_coeffs = parse_coeffs(j, "x2_sin");
        return ParametricCurve::trig(std::move(x1), std::move(x2));
    }
    throw std::domain_error("curve " + name + ": unknown kind \"" + kind + "\"");
}

RobinData parse_data(const json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::domain_error("data descriptor needs a \"kind\" field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fundamental") {
        const auto& y = j.at("y_star");
        if (!y.is_array() || y.size() != 2) {
            throw std::domain_error("y_star must be a two-element array");
        }
        return RobinData::fundamental(Point2(y[0].get<double>(), y[1].get<double>()));
    }
    if (kind == "polynomial_example2") return RobinData::polynomial_example2();
    if (kind == "nodal") {
        const auto& a1 = j.at("f1");
        const auto& a2 = j.at("f2");
        Eigen::VectorXd f1(a1.size()), f2(a2.size());
        for (std::size_t k = 0; k < a1.size(); ++k) f1[k] = a1[k].get<double>();
        for (std::size_t k = 0; k < a2.size(); ++k) f2[k] = a2[k].get<double>();
        return RobinData::nodal(std::move(f1), std::move(f2));
    }
    throw std::domain_error("unknown data kind \"" + kind + "\"");
}

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw std::domain_error("config root must be an object");
    const auto& ph = j.at("physics");
    PhysicsParams physics(ph.at("kappa").get<double>(), ph.at("lambda1").get<double>(),
                          ph.at("lambda2").get<double>());
    RunConfig cfg{physics,
                  parse_curve(j.at("gamma1"), "gamma1"),
                  parse_curve(j.at("gamma2"), "gamma2"),
                  parse_data(j.at("data")),
                  std::nullopt,
                  {},
                  {},
                  std::nullopt};
    if (j.contains("m")) {
        cfg.m = j.at("m").get<int>();
        if (*cfg.m < 2) throw std::domain_error("m must be >= 2");
    }
    if (j.contains("m_list")) {
        for (const auto& v : j.at("m_list")) {
            const int m = v.get<int>();
            if (m < 2) throw std::domain_error("m_list entries must be >= 2");
            cfg.m_list.push_back(m);
        }
    }
    if (j.contains("probes")) {
        for (const auto& p : j.at("probes")) {
            if (!p.is_array() || p.size() != 2) {
                throw std::domain_error("each probe must be a two-element array");
            }
            const Point2 q(p[0].get<double>(), p[1].get<double>());
            if (!q.allFinite()) throw std::domain_error("probe points must be finite");
            cfg.probes.push_back(q);
        }
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        const auto& bb = g.at("bbox");
        if (!bb.is_array() || bb.size() != 4) {
            throw std::domain_error("grid bbox must hold x0 y0 x1 y1");
        }
        GridSpec grid{bb[0].get<double>(), bb[1].get<double>(), bb[2].get<double>(),
                      bb[3].get<double>(), g.at("nx").get<int>(), g.at("ny").get<int>()};
        if (grid.nx < 1 || grid.ny < 1) {
            throw std::domain_error("grid resolution must be >= 1");
        }
        cfg.grid = grid;
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Bundled presets
// ---------------------------------------------------------------------------

constexpr const char* kExample1a = R"json({
  "physics": {"kappa": 1.0, "lambda1": 1.0, "lambda2": 1.0},
  "gamma1": {"kind": "ellipse", "a": 1.3, "b": 1.0},
  "gamma2": {"kind": "trig",
             "x1_cos": [0.5], "x1_sin": [],
             "x2_cos": [0.0, 0.15], "x2_sin": [0.4], "x2_const": -0.15},
  "data": {"kind": "fundamental", "y_star": [4.0, 0.0]},
  "m": 16,
  "m_list": [4, 8, 16, 32, 64],
  "probes": [[0.0, 0.5], [1.0, 0.0], [-0.5, 0.4], [-0.5, -0.2]],
  "grid": {"bbox": [-1.4, -1.15, 1.4, 1.05], "nx": 50, "ny": 50}
})json";

constexpr const char* kExample1b = R"json({
  "physics": {"kappa": 1.0, "lambda1": 1.0, "lambda2": 1.0},
  "gamma1": {"kind": "circle", "r": 2.0},
  "gamma2": {"kind": "circle", "r": 0.5},
  "data": {"kind": "fundamental", "y_star": [4.0, 0.0]},
  "m": 16,
  "m_list": [4, 8, 16, 32, 64],
  "probes": [[1.0, 1.0], [-1.0, 0.7], [0.0, -1.5], [1.8, -0.3]],
  "grid": {"bbox": [-2.2, -2.2, 2.2, 2.2], "nx": 50, "ny": 50}
})json";

constexpr const char* kExample2 = R"json({
  "physics": {"kappa": 1.0, "lambda1": 1.0, "lambda2": 1.0},
  "gamma1": {"kind": "ellipse", "a": 1.3, "b": 1.0},
  "gamma2": {"kind": "trig",
             "x1_cos": [0.5], "x1_sin": [],
             "x2_cos": [0.0, 0.15], "x2_sin": [0.4], "x2_const": -0.15},
  "data": {"kind": "polynomial_example2"},
  "m": 64,
  "m_list": [4, 8, 16, 32, 64],
  "probes": [[0.0, 0.4], [1.0, 0.0], [-0.5, 0.4], [-0.6, -0.4]],
  "grid": {"bbox": [-1.4, -1.15, 1.4, 1.05], "nx": 50, "ny": 50}
})json";

// ---------------------------------------------------------------------------
// Command helpers
// ---------------------------------------------------------------------------

double exact_value(const RunConfig& cfg, const Point2& x) {
    return fundamental_solution(x, cfg.data.y_star, cfg.physics.kappa);
}

int required_m(const RunConfig& cfg) {
    if (!cfg.m) throw std::domain_error("config must set \"m\" for this command");
    return *cfg.m;
}

std::string probe_label(std::size_t index) { return "p" + std::to_string(index); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::optional<std::string> preset_config_text(const std::string& name) {
    if (name == "example1a") return std::string(kExample1a);
    if (name == "example1b") return std::string(kExample1b);
    if (name == "example2") return std::string(kExample2);
    return std::nullopt;
}

RunConfig load_config(const std::string& path_or_preset) {
    std::string text;
    if (const auto preset = preset_config_text(path_or_preset)) {
        text = *preset;
    } else {
        std::ifstream f(path_or_preset, std::ios::binary);
        if (!f) {
            throw std::domain_error("cannot read config \"" + path_or_preset +
                                    "\" (not a file or preset name)");
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::domain_error("config is not valid JSON: " + std::string(e.what()));
    }
    try {
        return parse_config(j);
    } catch (const json::exception& e) {
        throw std::domain_error("config schema error: " + std::string(e.what()));
    }
}

ProblemSpec make_problem(const RunConfig& config) {
    return ProblemSpec(config.physics, config.gamma1, config.gamma2, config.data);
}

void cmd_solve(const RunConfig& config, const std::filesystem::path& out_dir,
               std::ostream& out) {
    const ProblemSpec problem = make_problem(config);
    const int M = required_m(config);
    const DensitySolution sol = solve_problem(problem, M);
    const bool exact = config.data.kind == RobinData::Kind::Fundamental;

    std::filesystem::create_directories(out_dir);

    std::string densities = "curve,j,t_j,psi\n";
    const Eigen::VectorXd t = nodes(M);
    for (int j = 0; j < 2 * M; ++j) {
        densities += "1," + std::to_string(j) + "," + format_double(t[j]) + "," +
                     format_double(sol.psi1[j]) + "\n";
    }
    for (int j = 0; j < 2 * M; ++j) {
        densities += "2," + std::to_string(j) + "," + format_double(t[j]) + "," +
                     format_double(sol.psi2[j]) + "\n";
    }
    atomic_write(out_dir / "densities.csv", densities);

    std::string probes = exact ? "x1,x2,u,abs_error\n" : "x1,x2,u\n";
    for (const Point2& p : config.probes) {
        const double u = eval_interior(sol, p);
        probes += format_double(p.x()) + "," + format_double(p.y()) + "," +
                  format_double(u);
        if (exact) probes += "," + format_double(std::abs(u - exact_value(config, p)));
        probes += "\n";
    }
    atomic_write(out_dir / "probes.csv", probes);

    out << "solved M=" << M << " (" << 4 * M << " unknowns), wrote "
        << (out_dir / "densities.csv").string() << " and "
        << (out_dir / "probes.csv").string() << "\n";
}

void cmd_convergence(const RunConfig& config, const std::vector<int>& m_list,
                     const std::filesystem::path& out_file, std::ostream& out) {
    if (m_list.empty()) throw std::domain_error("convergence: M list is empty");
    for (std::size_t k = 0; k + 1 < m_list.size(); ++k) {
        if (m_list[k] >= m_list[k + 1]) {
            throw std::domain_error("convergence: M list must be strictly ascending");
        }
    }
    if (config.probes.empty()) {
        throw std::domain_error("convergence: config has no probe points");
    }
    const ProblemSpec problem = make_problem(config);
    const bool exact = config.data.kind == RobinData::Kind::Fundamental;

    std::string csv = exact ? "M,probe,x1,x2,u,abs_error\n" : "M,probe,x1,x2,u,diff_prev\n";
    std::vector<double> prev(config.probes.size());
    bool have_prev = false;
    for (const int M : m_list) {
        const DensitySolution sol = solve_problem(problem, M);
        for (std::size_t p = 0; p < config.probes.size(); ++p) {
            const Point2& x = config.probes[p];
            const double u = eval_interior(sol, x);
            csv += std::to_string(M) + "," + probe_label(p) + "," +
                   format_double(x.x()) + "," + format_double(x.y()) + "," +
                   format_double(u) + ",";
            if (exact) {
                csv += format_double(std::abs(u - exact_value(config, x)));
            } else if (have_prev) {
                csv += format_double(std::abs(u - prev[p]));
            }
            csv += "\n";
            prev[p] = u;
        }
        have_prev = true;
    }
    if (out_file.has_parent_path()) std::filesystem::create_directories(out_file.parent_path());
    atomic_write(out_file, csv);
    out << "convergence study over " << m_list.size() << " M values, wrote "
        << out_file.string() << "\n";
}

void cmd_field(const RunConfig& config, const GridSpec& grid,
               const std::filesystem::path& out_file, std::ostream& out) {
    const ProblemSpec problem = make_problem(config);
    const int M = required_m(config);
    const DensitySolution sol = solve_problem(problem, M);

    auto coord = [](double lo, double hi, int n, int i) {
        return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1);
    };

    std::string csv = "x1,x2,u\n";
    int populated = 0;
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const Point2 p(coord(grid.x0, grid.x1, grid.nx, ix),
                           coord(grid.y0, grid.y1, grid.ny, iy));
            csv += format_double(p.x()) + "," + format_double(p.y()) + ",";
            if (point_in_domain(problem, M, p)) {
                csv += format_double(eval_interior(sol, p));
                ++populated;
            }
            csv += "\n";
        }
    }
    if (out_file.has_parent_path()) std::filesystem::create_directories(out_file.parent_path());
    atomic_write(out_file, csv);
    out << "field grid " << grid.nx << "x" << grid.ny << ", " << populated
        << " interior points, wrote " << out_file.string() << "\n";
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Boundary-integral solver for the Robin problem of the 2-D "
                 "Klein-Gordon equation in a doubly connected domain"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string m_list_text;
    std::vector<double> bbox_args;
    std::vector<int> grid_args;

    CLI::App* solve = app.add_subcommand("solve", "solve once and write densities/probes");
    solve->add_option("--config", config_path, "config file path or preset name")->required();
    solve->add_option("--out", out_path, "output directory")->required();

    CLI::App* conv = app.add_subcommand("convergence", "run a study over several M");
    conv->add_option("--config", config_path, "config file path or preset name")->required();
    conv->add_option("--m-list", m_list_text, "comma separated ascending M values");
    conv->add_option("--out", out_path, "output CSV file")->required();

    CLI::App* field = app.add_subcommand("field", "evaluate u on a rectangular grid");
    field->add_option("--config", config_path, "config file path or preset name")->required();
    field->add_option("--grid", grid_args, "grid resolution: nx ny")->expected(2);
    field->add_option("--bbox", bbox_args, "bounding box: x0 y0 x1 y1")->expected(4);
    field->add_option("--out", out_path, "output CSV file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        const RunConfig config = load_config(config_path);
        if (solve->parsed()) {
            cmd_solve(config, out_path, out);
        } else if (conv->parsed()) {
            std::vector<int> m_list = config.m_list;
            if (!m_list_text.empty()) {
                m_list.clear();
                std::stringstream ss(m_list_text);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        m_list.push_back(std::stoi(item));
                    } catch (const std::exception&) {
                        throw std::domain_error("bad --m-list entry \"" + item + "\"");
                    }
                }
            }
            cmd_convergence(config, m_list, out_path, out);
        } else if (field->parsed()) {
            std::optional<GridSpec> grid = config.grid;
            if (!grid_args.empty() || !bbox_args.empty()) {
                if (grid_args.size() != 2 || bbox_args.size() != 4) {
                    throw std::domain_error("field needs both --grid and --bbox");
                }
                grid = GridSpec{bbox_args[0], bbox_args[1], bbox_args[2], bbox_args[3],
                                grid_args[0], grid_args[1]};
            }
            if (!grid) throw std::domain_error("field: no grid in config or flags");
            cmd_field(config, *grid, out_path, out);
        }
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace kgbem::cli
