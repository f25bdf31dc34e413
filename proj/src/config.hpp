#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hartogs/errors.hpp"
#include "hartogs/profile.hpp"
#include "hartogs/sampling.hpp"

namespace hartogs::app {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Command { check_kahler, curvature_report, extremal_test, pseudoconvexity_test, classify, full_suite };

const char* to_string(Command command);
Command parse_command(std::string_view name);

struct ProfileSpec {
  std::string kind = "linear";
  /// Numeric parameters as given (c1, c2, amplitude, rate, p, scale).
  std::map<std::string, double> params;
  /// CSV path for table profiles, resolved against the config directory.
  std::string table;
};

struct Tolerances {
  double oracle = 1e-5;
  double extremal = 1e-5;
  double classify = 1e-8;
};

struct RunConfig {
  Command command = Command::classify;
  ProfileSpec profile;
  int n = 2;
  GridSpec<double> grid;
  int radial_points = 101;
  /// Boundary samples for pseudoconvexity-test.
  int samples = 500;
  double fd_step = 1e-3;
  int fd_levels = 3;
  Tolerances tolerances;
  std::string output_path = "report.json";
  std::string csv_path;
  std::string plot_L_path;
  std::string plot_scal_path;
  std::optional<std::string> expect;
  std::vector<int> suite_dims = {2, 3, 4};
};

/// Parses the key = value format. `base_dir` resolves relative table paths.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Builds the profile described by `spec`; ConfigError on unknown kinds or
/// parameters, InvalidProfileError on bad values.
Profile<double> make_profile(const ProfileSpec& spec);

/// Reads (x, F) rows from CSV. A non-numeric first row is taken as a header.
Profile<double> load_table_profile(const std::filesystem::path& path);

}  // namespace hartogs::app
