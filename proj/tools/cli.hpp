#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ay/io.hpp"

namespace ay::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr double kDefaultCliTol = 1e-9;
inline constexpr Index kModelOrderCap = 400;

enum class Subcommand { Check, Dilate, Wold, Model, Ttoeplitz, Hereditary, Gen };

struct RunConfig {
  Subcommand subcommand = Subcommand::Check;
  /// Tuple input for check, dilate, wold, model and hereditary.
  std::string input;
  /// Report destination; empty means stdout.
  std::string output;
  double tol = kDefaultCliTol;

  // check
  std::optional<Index> window_cols;
  // dilate
  Index slots = 6;
  std::optional<Index> max_word;
  // wold
  std::optional<Index> window;
  std::optional<Index> max_power;
  // model
  Index order = 40;
  // ttoeplitz
  std::string action = "classify";
  std::string blaschke;
  std::string symbol;
  // hereditary
  double w_bound = 1.0;
  int samples = 360;
  // gen
  std::string kind;
  std::uint64_t seed = 42;
  int n = 2;
  Index dim = 3;
  Index dim_e = 1;
  int degree = 0;
  Index gen_order = 16;
  Index dim_unitary = 2;
  Index blocks = 1;
  int points = 2;
  double radius = 0.8;
  double max_modulus = 0.6;
  int bandwidth = 2;
  /// JSON text: array of [re, im] zeros.
  std::string zeros;
  /// JSON text: [re, im].
  std::string c;
};

struct RunResult {
  int exit_code = 0;
  Json report;
};

std::string subcommand_name(Subcommand s);

/// Executes one configured command. Never throws for input or math problems;
/// those become the report status and exit code (0 pass, 1 fail, 2 input).
RunResult run(const RunConfig& config);

/// Throws std::logic_error when a report misses a required field.
void validate_report(const Json& report);

std::string render(const Json& report);

/// Full front end: parses args (without the program name), runs, writes the
/// report and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ay::cli
