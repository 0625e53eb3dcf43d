#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qimm {

enum class OutputFormat { json, csv, text };

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Fully parsed command line. Ranges are validated by validate() before run().
struct RunConfig {
  std::string subcommand;
  OutputFormat format = OutputFormat::text;
  std::string output_path;  // empty: write to the given stream

  // alpha-table / last-table
  int n = 0;
  int l_max = 0;

  // char
  std::string shape;
  std::string cycle_type;

  // immanant / a-coeffs; exactly one tree source
  std::string tree_literal;
  std::string tree_file;
  std::string pruefer;
  bool normalized = false;
  std::string algorithm = "matching";

  // verify
  std::string verify_group;
  std::optional<int> n_max;
  std::optional<int> hook_n_max;
  std::optional<int> oracle_n_max;
  std::optional<int> path_n_max;
  std::optional<int> alpha_n_max;
  std::optional<int> random_trees;
  std::uint64_t seed = 1;
  std::string grid;
  bool deep = false;

  // path
  std::string path_action;
  std::vector<std::string> path_args;
  std::string direction = "fwd";
};

/// Parses argv with CLI11. On a parse error or --help, writes the message to
/// `err`/`out` and returns the exit code instead of a config.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Throws std::invalid_argument describing the first out-of-range field.
void validate(const RunConfig& config);

/// Executes a validated config. Returns kExitOk, kExitFailure when a
/// verification verdict fails, or kExitUsage on invalid input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + validate + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Resolves `path` against $QIMM_OUTPUT_DIR when it is relative and the variable is set.
std::string resolve_output_path(const std::string& path);

}  // namespace qimm
