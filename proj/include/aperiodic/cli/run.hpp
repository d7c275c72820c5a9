#pragma once

#include <string>
#include <vector>

#include "aperiodic/cli/config.hpp"

namespace aperiodic::cli {

enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitConstraint = 2, kExitBudget = 3 };

struct RunOutcome {
    int exitCode = kExitOk;
    /// Full report; "telemetry" is the only non-deterministic member.
    Json report;
    /// Optional side outputs, written by `writeOutputs`.
    std::string csv;
    std::string word;
};

/// Parameters an operation needs but the config lacks, or that do not fit together.
std::vector<std::string> requirementViolations(const RunConfig& cfg);

/// Runs the configured operation. Never throws for library errors; they are
/// reported in the "errors" array with the matching exit code.
RunOutcome run(const RunConfig& cfg);

/// Error report for a config that failed to parse.
RunOutcome rejectedConfig(const std::vector<std::string>& violations);

/// Paths the run would write that already exist.
std::vector<std::string> existingOutputs(const RunConfig& cfg);

/// Writes the report (stdout when no path), CSV and word file. Returns false on I/O failure.
bool writeOutputs(const RunConfig& cfg, const RunOutcome& outcome, std::string& problem);

} // namespace aperiodic::cli
