#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kgbem/solver.hpp"

namespace kgbem::cli {

struct GridSpec {
  double x0, y0, x1, y1;  // bounding box corners
  int nx, ny;
};

/// Parsed configuration file: problem definition plus run parameters.
struct RunConfig {
  PhysicsParams physics;
  ParametricCurve gamma1;
  ParametricCurve gamma2;
  RobinData data;
  std::optional<int> m;
  std::vector<int> m_list;
  std::vector<Point2> probes;
  std::optional<GridSpec> grid;
};

/// Load a config from a file path or one of the bundled preset names
/// ("example1a", "example1b", "example2").  Validation failures throw
/// std::domain_error.
RunConfig load_config(const std::string& path_or_preset);

/// JSON text of a bundled preset, if the name is one.
std::optional<std::string> preset_config_text(const std::string& name);

ProblemSpec make_problem(const RunConfig& config);

/// Solve at config.m and write densities.csv and probes.csv into out_dir.
void cmd_solve(const RunConfig& config, const std::filesystem::path& out_dir,
               std::ostream& out);

/// Run the solver for every M in m_list and write the convergence report CSV.
void cmd_convergence(const RunConfig& config, const std::vector<int>& m_list,
                     const std::filesystem::path& out_file, std::ostream& out);

/// Evaluate the solution on a rectangular grid and write the field CSV;
/// points outside the domain get an empty value.
void cmd_field(const RunConfig& config, const GridSpec& grid,
               const std::filesystem::path& out_file, std::ostream& out);

/// Front end: parses argv-style arguments, dispatches the subcommands and
/// maps failures to exit codes (0 success, 1 configuration or validation
/// error, 2 numerical failure).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

/// Locale-independent shortest-faithful formatting with 17 significant digits.
std::string format_double(double v);

}  // namespace kgbem::cli
