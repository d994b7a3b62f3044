#pragma once

// Command implementations behind the `singideal` executable. Each command
// returns its JSON report together with the process exit code:
//   0 success, 1 parse or input error, 2 internal inconsistency,
//   3 normcheck residual at or above tolerance.

#include <cstdint>
#include <string>

#include "singideal/error.hpp"
#include "singideal/hls.hpp"
#include "singideal/io.hpp"
#include "singideal/norms.hpp"

namespace singideal {

enum class Command { analyze, ai_atlas, hls, normcheck, witness };

struct RunConfig {
    Command command = Command::analyze;
    std::string group_spec;
    std::string family_spec;
    std::string subsets;  // normcheck unit subsets, JSON array of arrays; empty means pairs and singletons
    std::size_t depth = default_hls_depth;
    std::size_t max_order = 64;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    double tol = default_acceptance_tol;
    std::string output;
    bool auto_close = true;
    std::size_t order_cap = default_order_cap;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_parse_error = 1;
inline constexpr int exit_inconsistency = 2;
inline constexpr int exit_tolerance = 3;

struct CommandResult {
    json report;
    int exit_code = exit_ok;
};

/// Throws Error{invalid_argument} when depth, trials or tol is out of range.
void validate(const RunConfig& config);

CommandResult cmd_analyze(const RunConfig& config);
CommandResult cmd_ai_atlas(const RunConfig& config);
CommandResult cmd_hls(const RunConfig& config);
CommandResult cmd_normcheck(const RunConfig& config);
CommandResult cmd_witness(const RunConfig& config);

int exit_code_for(ErrorCode code) noexcept;

/// Dispatches and turns library errors into {"error": ...} reports with the
/// matching exit code.
CommandResult run(const RunConfig& config);

}  // namespace singideal
