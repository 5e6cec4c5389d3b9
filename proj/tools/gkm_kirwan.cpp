// gkm-kirwan: moment graphs, GKM cohomology bases and symplectic-quotient
// cohomology of Schubert varieties, from a JSON job description.

#include "gkm/config.hpp"
#include "gkm/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run(const std::string& command_name, const std::string& config_path,
        const std::string& out_path, const std::string& dot_path,
        int degree_bound_override) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot read config file: " << config_path << "\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  gkm::ParseOutcome parsed = gkm::parse_config(buffer.str());
  if (!parsed.config) {
    std::cerr << "config validation failed:\n";
    for (const std::string& e : parsed.errors) std::cerr << "  - " << e << "\n";
    return 2;
  }
  if (degree_bound_override >= 0) {
    if (degree_bound_override % 2 != 0) {
      std::cerr << "config validation failed:\n  - degree-bound: must be even\n";
      return 2;
    }
    parsed.config->degree_bound = degree_bound_override;
  }

  const auto command = gkm::command_from_name(command_name);
  const gkm::CommandOutcome outcome = gkm::run_command(*command, *parsed.config);

  std::cout << outcome.text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << outcome.document.dump(2) << "\n";
  }
  if (!dot_path.empty()) {
    if (outcome.dot.empty()) {
      std::cerr << "this command does not produce a graph; --dot ignored\n";
    } else {
      std::ofstream dot(dot_path);
      if (!dot) {
        std::cerr << "cannot write " << dot_path << "\n";
        return 2;
      }
      dot << outcome.dot;
    }
  }
  return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomology of circle symplectic quotients of Schubert varieties"};
  app.require_subcommand(1);

  std::string config_path, out_path, dot_path;
  int degree_bound = -1;

  for (const char* name : {"validate", "graph", "cohomology", "quotient", "report"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "path to the JSON job config")->required();
    sub->add_option("--out", out_path, "write the machine-readable JSON report here");
    sub->add_option("--dot", dot_path, "write the Graphviz moment graph here");
    sub->add_option("--degree-bound", degree_bound,
                    "override the cohomological degree bound (even)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return run(app.get_subcommands().front()->get_name(), config_path, out_path, dot_path,
             degree_bound);
}
