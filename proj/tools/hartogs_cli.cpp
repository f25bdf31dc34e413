#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "config.hpp"
#include "pipelines.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Kähler geometry checks on Hartogs domains"};
  std::string config_path;
  std::string output;
  bool quiet = false;
  app.add_option("--config", config_path, "configuration file")->required();
  app.add_option("--output", output, "report path (overrides the config)");
  app.add_flag("--quiet", quiet, "suppress the summary line");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using namespace hartogs::app;
  RunConfig config;
  try {
    config = load_config(config_path);
    if (!output.empty()) config.output_path = output;
  } catch (const hartogs::Error& e) {
    std::cerr << "hartogs: config error: " << e.what() << "\n";
    return 2;
  }
  try {
    return run(config, std::cout, quiet);
  } catch (const ConfigError& e) {
    std::cerr << "hartogs: config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hartogs: " << e.what() << "\n";
    return 1;
  }
}
