#ifndef GKM_REPORT_HPP
#define GKM_REPORT_HPP

#include "gkm/config.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace gkm {

enum class Command { kValidate, kGraph, kCohomology, kQuotient, kReport };

std::optional<Command> command_from_name(const std::string& name);

/**
 * Result of one command run. Exit codes: 0 success, 2 invalid job
 * (type/rank combinations the root data cannot support), 3 a named
 * assumption failed validation, 4 two internal computation routes
 * disagreed. Identical configs produce byte-identical text, document
 * and dot fields.
 */
struct CommandOutcome {
  int exit_code = 0;
  std::string text;                 // human-readable report
  nlohmann::ordered_json document;  // machine-readable report
  std::string dot;                  // Graphviz text, when the command renders a graph
};

CommandOutcome run_command(Command command, const JobConfig& config);

} // namespace gkm

#endif
