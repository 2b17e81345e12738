/**
 * @file jobs.hpp
 * @brief Batch command execution: load a 2-group (builtin or JSON file),
 *        run one documented command, and emit a text or JSON artifact.
 *
 * Exit codes: 0 on success, 1 when a mathematical validation fails, 2 for
 * usage or parse problems. The optional parallel mode distributes fusion
 * and inner-product cells over hardware threads; outputs are assembled in
 * deterministic order, so serial and parallel runs emit identical bytes.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twochar {

struct JobSpec {
  std::string command;
  std::string builtin;      ///< catalogue 2-group name; mutually exclusive
  std::string input_path;   ///< with a JSON definition file
  std::string irrep;        ///< target irreducible for `center`
  std::string format = "text";
  std::string output_path;  ///< empty = write to the stream given to run_job
  bool parallel = false;
};

/// Commands in the documented set.
const std::vector<std::string>& known_commands();

/// Runs one job; artifact goes to `out` (or JobSpec::output_path when set),
/// diagnostics to `err`. Returns the exit status.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace twochar
