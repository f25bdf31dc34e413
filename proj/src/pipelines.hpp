#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"
#include "report.hpp"

namespace hartogs::app {

struct RunResult {
  json report;
  std::string verdict;
  int status = 1;
  /// Empty unless the command produces the artifact.
  std::string grid_csv;
  std::string plot_L;
  std::string plot_scal;
};

/// Verdicts that count as success when the config declares no `expect`.
bool success_verdict(const std::string& verdict);

/// 0 when the verdict matches `expect` (or, without one, is a success
/// verdict); 1 otherwise.
int exit_status(const std::string& verdict, const std::optional<std::string>& expect);

/// Runs the configured pipeline in memory. Deterministic for a fixed config.
RunResult execute(const RunConfig& config);

/// execute() plus writing the report, CSV grid dump and plot files.
/// Returns the exit status; file errors raise hartogs::Error.
int run(const RunConfig& config, std::ostream& log, bool quiet);

}  // namespace hartogs::app
