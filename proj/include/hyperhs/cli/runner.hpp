#pragma once

#include "hyperhs/cli/output.hpp"
#include "hyperhs/cli/run_config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperhs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

struct RunOutcome {
    OutputDoc doc;
    // Failed checks; only turned into exit status 2 when the config asks for checking.
    std::vector<std::string> failures;
};

// Computes the command's table. Throws on malformed input.
RunOutcome execute(const RunConfig& cfg);

// execute + write to cfg.out_path (or `out` when empty); errors go to `err`.
// Returns 0, 1 (input or tool error) or 2 (check requested and failed).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hyperhs::cli
