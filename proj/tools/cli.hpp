#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttk::cli {

enum ExitCode : int { ok = 0, validation = 2, degenerate = 3, io = 4 };

/// Runs the command line `args` (without the program name). Diagnostics go
/// to `err`, summaries to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sibling path for the Y half of a paired dataset: "abc.traj" -> "abc.y.traj".
std::string paired_path(const std::string& path);

} // namespace ttk::cli
