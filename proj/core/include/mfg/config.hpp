#pragma once

#include <filesystem>
#include <string>

#include "mfg/params.hpp"

namespace mfg {

struct Config {
    ModelParams params;
    Discretization disc;
};

/// Parses the flat key/value config format:
///
///   [model]
///   epsilon = 0.3
///   m0 = quartic-bump          # or file:samples.txt
///   [discretization]
///   nx = 200
///   continuation = 0.5, 1.0
///
/// '#' starts a comment. Unknown sections or keys are errors (with line
/// numbers); omitted keys take the documented defaults. All type invariants
/// are validated, including the sampled profiles on the configured grid.
Config load_config(const std::filesystem::path& path);

/// Same grammar, from an in-memory string (tests).
Config parse_config(const std::string& text, const std::string& origin = "<string>");

} // namespace mfg
