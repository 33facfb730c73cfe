#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "hypk_tools/validation.hpp"

namespace hypk::tools {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCriterionFailed = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
};

/// Runs the hypk command line. args[0] is the program name. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flat key=value configuration: '#' starts a comment, blank lines are ignored and a
/// key may repeat (each occurrence becomes one --key value pair).
std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text);

struct ValidateAllResult {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

/// Runs criteria 1..8 plus the in-process determinism check (criterion 9) and writes
/// summary.json and the criterion artifacts into out_dir. Progress goes to `log`.
ValidateAllResult validate_all(const ValidationOptions& opt, const std::filesystem::path& out_dir,
                               const std::vector<int>& only, std::ostream& log);

/// Criterion 9: two runs of a small fixed CLI pipeline, the second with a different
/// worker count, compared byte for byte.
CriterionResult determinism_check(const ValidationOptions& opt,
                                  const std::filesystem::path& scratch_dir);

}  // namespace hypk::tools
