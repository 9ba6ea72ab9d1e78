#pragma once

#include "dqtool/workspace.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dqtool {

enum class Verdict { pass, fail, inconclusive, error };

/// 0 pass, 1 fail with witness, 2 inconclusive, 3 input error.
int exit_code(Verdict v);
const char *verdict_name(Verdict v);

struct Outcome
{
	Verdict verdict = Verdict::error;
	nlohmann::json report;
};

const std::vector<std::string> &command_names();

/// Runs one subcommand. Never throws: input problems come back as an
/// error report.
Outcome run_command(const std::string &name, const Workspace &ws);

/// Loads the workspace, applies overrides and runs the command.
Outcome run_command_file(const std::string &name, const std::string &workspace_file,
                         const Overrides &overrides);

/// Sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json &report);

} // namespace dqtool
