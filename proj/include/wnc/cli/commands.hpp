#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wnc/gen.hpp"

namespace wnc::cli {

enum ExitCode : int {
  kExitStructured = 0,
  kExitOverlap = 1,
  kExitInputError = 2,
  kExitOracleCap = 3,
};

// Each command reads its input file ("-" for stdin), writes its report to
// `out` and diagnostics to `err`, and returns the process exit code.

int cmd_check(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int cmd_cluster(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int cmd_stats(const std::filesystem::path& path, std::size_t max_q_vertices, std::ostream& out,
              std::ostream& err);
/// Writes the edge list to `out_path`, or to `out` when absent. The config
/// echo goes to `out` when writing a file and to `err` otherwise.
int cmd_gen(const GenConfig& cfg, const std::optional<std::filesystem::path>& out_path,
            std::ostream& out, std::ostream& err);
int cmd_dot(const std::filesystem::path& path, const std::optional<std::filesystem::path>& out_path,
            std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string describe(const GenConfig& cfg);

}  // namespace wnc::cli
