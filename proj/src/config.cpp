#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace hartogs::app {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': expected a number, got '" + value + "'");
  }
}

long long to_integer(const std::string& key, const std::string& value) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("'" + key + "': expected an integer, got '" + value + "'");
  }
  return v;
}

void validate(const RunConfig& c) {
  if (c.n < 2) throw ConfigError("n must be >= 2");
  if (c.grid.points < 1) throw ConfigError("grid.points must be >= 1");
  if (!(c.grid.a_margin > 0 && c.grid.a_margin < 1)) throw ConfigError("grid.A_margin must lie in (0, 1)");
  if (!(c.grid.x_cap > 0)) throw ConfigError("grid.x_cap must be positive");
  if (c.radial_points < 2) throw ConfigError("grid.radial_points must be >= 2");
  if (c.samples < 1) throw ConfigError("samples must be >= 1");
  if (!(c.fd_step > 0)) throw ConfigError("fd.step must be positive");
  if (c.fd_levels < 1) throw ConfigError("fd.levels must be >= 1");
  if (!(c.tolerances.oracle > 0 && c.tolerances.extremal > 0 && c.tolerances.classify > 0)) {
    throw ConfigError("all tolerances must be positive");
  }
  for (int d : c.suite_dims) {
    if (d < 2) throw ConfigError("suite.dims entries must be >= 2");
  }
  if (c.suite_dims.empty()) throw ConfigError("suite.dims must not be empty");
}

}  // namespace

const char* to_string(Command command) {
  switch (command) {
    case Command::check_kahler: return "check-kahler";
    case Command::curvature_report: return "curvature-report";
    case Command::extremal_test: return "extremal-test";
    case Command::pseudoconvexity_test: return "pseudoconvexity-test";
    case Command::classify: return "classify";
    case Command::full_suite: return "full-suite";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::check_kahler, Command::curvature_report, Command::extremal_test,
                    Command::pseudoconvexity_test, Command::classify, Command::full_suite}) {
    if (name == to_string(c)) return c;
  }
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  RunConfig config;
  bool have_command = false;

  using Setter = std::function<void(const std::string& key, const std::string& value)>;
  auto real = [](double& target) -> Setter {
    return [&target](const std::string& k, const std::string& v) { target = to_double(k, v); };
  };
  auto integer = [](int& target) -> Setter {
    return [&target](const std::string& k, const std::string& v) { target = static_cast<int>(to_integer(k, v)); };
  };
  auto text_value = [](std::string& target) -> Setter {
    return [&target](const std::string&, const std::string& v) { target = v; };
  };
  auto profile_param = [&config](const std::string& name) -> Setter {
    return [&config, name](const std::string& k, const std::string& v) { config.profile.params[name] = to_double(k, v); };
  };

  const std::map<std::string, Setter> setters = {
      {"command",
       [&](const std::string&, const std::string& v) {
         config.command = parse_command(v);
         have_command = true;
       }},
      {"n", integer(config.n)},
      {"output", text_value(config.output_path)},
      {"csv", text_value(config.csv_path)},
      {"plot.L", text_value(config.plot_L_path)},
      {"plot.scal", text_value(config.plot_scal_path)},
      {"expect", [&](const std::string&, const std::string& v) { config.expect = v; }},
      {"samples", integer(config.samples)},
      {"profile.kind", text_value(config.profile.kind)},
      {"profile.c1", profile_param("c1")},
      {"profile.c2", profile_param("c2")},
      {"profile.amplitude", profile_param("amplitude")},
      {"profile.rate", profile_param("rate")},
      {"profile.p", profile_param("p")},
      {"profile.scale", profile_param("scale")},
      {"profile.table",
       [&](const std::string&, const std::string& v) {
         std::filesystem::path p(v);
         config.profile.table = (p.is_relative() && !base_dir.empty() ? base_dir / p : p).string();
       }},
      {"grid.points", integer(config.grid.points)},
      {"grid.seed",
       [&](const std::string& k, const std::string& v) {
         auto s = to_integer(k, v);
         if (s < 0) throw ConfigError("grid.seed must be nonnegative");
         config.grid.seed = static_cast<std::uint64_t>(s);
       }},
      {"grid.A_margin", real(config.grid.a_margin)},
      {"grid.x_cap", real(config.grid.x_cap)},
      {"grid.radial_points", integer(config.radial_points)},
      {"fd.step", real(config.fd_step)},
      {"fd.levels", integer(config.fd_levels)},
      {"tolerances.oracle", real(config.tolerances.oracle)},
      {"tolerances.extremal", real(config.tolerances.extremal)},
      {"tolerances.classify", real(config.tolerances.classify)},
      {"suite.dims",
       [&](const std::string& k, const std::string& v) {
         config.suite_dims.clear();
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) config.suite_dims.push_back(static_cast<int>(to_integer(k, trim(item))));
       }},
  };

  std::set<std::string> seen;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (const auto hash = value.find(" #"); hash != std::string::npos) value = trim(value.substr(0, hash));
    if (!section.empty()) key = section + "." + key;
    if (key == "fd_step") key = "fd.step";
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    it->second(key, value);
  }
  if (!have_command) throw ConfigError("missing required key 'command'");
  validate(config);
  make_profile(config.profile);  // surfaces profile errors at load time
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path());
}

Profile<double> make_profile(const ProfileSpec& spec) {
  static const std::map<std::string, std::set<std::string>> allowed = {
      {"linear", {"c1", "c2", "scale"}},
      {"exp", {"amplitude", "rate", "scale"}},
      {"power", {"p", "scale"}},
      {"table", {"scale"}},
  };
  const auto kind = allowed.find(spec.kind);
  if (kind == allowed.end()) throw ConfigError("unknown profile kind '" + spec.kind + "'");
  for (const auto& [name, _] : spec.params) {
    if (!kind->second.count(name)) {
      throw ConfigError("parameter '" + name + "' does not apply to profile kind '" + spec.kind + "'");
    }
  }
  auto param = [&spec](const std::string& name, double fallback) {
    const auto it = spec.params.find(name);
    return it == spec.params.end() ? fallback : it->second;
  };

  try {
    Profile<double> profile = [&] {
      if (spec.kind == "linear") return Profile<double>::linear(param("c1", 1.0), param("c2", 1.0));
      if (spec.kind == "exp") return Profile<double>::exponential(param("amplitude", 1.0), param("rate", 1.0));
      if (spec.kind == "power") return Profile<double>::power(param("p", 2.0));
      if (spec.table.empty()) throw ConfigError("table profile needs profile.table = <csv path>");
      return load_table_profile(spec.table);
    }();
    if (spec.params.count("scale")) profile = profile.scaled(spec.params.at("scale"));
    return profile;
  } catch (const InvalidProfileError& e) {
    throw ConfigError(std::string("invalid profile: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError(std::string("invalid profile: ") + e.what());
  }
}

Profile<double> load_table_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table profile '" + path.string() + "'");
  std::vector<double> xs, fs;
  std::string line;
  int line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const bool header_allowed = first_row;
    first_row = false;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected x,F");
    const std::string a = trim(std::string_view(line).substr(0, comma));
    const std::string b = trim(std::string_view(line).substr(comma + 1));
    try {
      std::size_t ua = 0, ub = 0;
      double x = std::stod(a, &ua);
      double f = std::stod(b, &ub);
      if (ua != a.size() || ub != b.size()) throw std::invalid_argument(line);
      xs.push_back(x);
      fs.push_back(f);
    } catch (const std::exception&) {
      if (header_allowed) continue;  // header row
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": malformed row '" + line + "'");
    }
  }
  try {
    return Profile<double>::table(std::move(xs), std::move(fs));
  } catch (const InvalidProfileError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace hartogs::app
