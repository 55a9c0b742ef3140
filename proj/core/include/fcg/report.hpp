#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcg/io.hpp"

namespace fcg {

enum class ExitCode : int { Ok = 0, ValidationFailure = 2, ComputationAbort = 3, IoOrSchema = 4 };

struct RunOptions {
  std::size_t max_ball_radius = 6;
};

struct RunResult {
  ExitCode exit = ExitCode::Ok;
  std::string report;   // JSON, schema "fc-report/1", keys sorted
  std::string summary;  // one human-readable line
};

/// Commands: analyze, check-chain, tower, neumann, solvable, oracle. When no
/// chain is given, the group file's bundled chains are used.
RunResult run_analysis(const std::string& command, const io::GroupFile& group,
                       const std::optional<io::NamedChain>& chain, const std::optional<std::string>& chain_digest,
                       const RunOptions& opts = {});

const std::vector<std::string>& commands();

}  // namespace fcg
