/**
 * @file cli.hpp
 * @brief Command dispatch for the `ordval` tool, exposed as a library so
 *        command behaviour (reports and exit codes) is directly testable.
 *
 * Subcommands: classify-group, classify-field, predicate, witness, check,
 * parse. Exit codes: 0 success, 1 property violation found by `check`,
 * 2 expression parse error, 3 unsupported input (precondition failure).
 */
#pragma once

#include <string>
#include <vector>

namespace ordval {

/// Runs one command given argv-style arguments (without the program name)
/// and returns {exit code, report text}. Never throws on grammar-level or
/// precondition errors; those become exit codes 2 and 3 with a one-line
/// message in the report.
struct CommandResult {
    int exitCode = 0;
    std::string output;
};

CommandResult runCommand(const std::vector<std::string>& args);

}  // namespace ordval
