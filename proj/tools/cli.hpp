#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srcartier/cross_validation.hpp"

namespace srcartier::cli {

enum class Command {
  Classify,
  FreeFaces,
  Collapse,
  Core,
  Nonfaces,
  Colon,
  Homology,
  CohenMacaulay,
  DoublyCohenMacaulay,
  GorensteinStar,
  BuchsbaumStarRefute,
  CrossValidate,
};

enum class InputFormat { Auto, Facets, Ideal };

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrincipal = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitInfinite = 3;

struct RunConfig {
  Command command = Command::Classify;
  std::optional<std::string> input_path;
  InputFormat format = InputFormat::Auto;
  std::optional<int> n_override;
  std::uint32_t field_p = 2;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> q_sweep;
  std::uint64_t seed = 42;
  std::uint64_t trials = 10000;
  bool exhaustive = false;
  bool json = false;
};

/// Parses argv (args[0] is the program name) and runs the command. Every
/// error is reported on `err` and mapped to an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already validated configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The cross-validation configuration a RunConfig asks for.
CrossValidationConfig cross_validation_config(const RunConfig& config);

/// Prints a cross-validation report; returns 0 iff it is clean, else 2
/// after dumping every counterexample.
int report_cross_validation(const CrossValidationReport& report, bool json, std::ostream& out);

}  // namespace srcartier::cli
