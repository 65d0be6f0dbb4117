#pragma once

#include <iostream>
#include <string>

namespace fracdiff {

/// Runs a solve from a config file. Writes solution.csv, mesh.csv,
/// error_trace.csv, and summary.json into the configured out_dir.
/// Returns 0 on success, 1 on an invalid config, 2 on a solver failure.
int cmd_solve(const std::string& config_path, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);

/// Runs one named experiment (convergence | stability | point-source |
/// cost-scaling), writes <name>.csv into out_dir, and prints one pass/fail
/// line per criterion. Returns 0 when every criterion passes, 1 on an unknown
/// name or invalid config, 2 on a solver failure, 3 when a criterion failed.
int cmd_experiment(const std::string& name, const std::string& config_path,
                   std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace fracdiff
