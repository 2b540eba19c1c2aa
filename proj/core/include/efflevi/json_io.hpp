#pragma once

#include <string>

#include "efflevi/heights.hpp"
#include "efflevi/lie.hpp"

namespace efflevi {

inline constexpr const char* kSchema = "effective-levi/v1";

// Result of one subcommand run: output goes to standard output, error to
// standard error. Exit codes: 0 success, 2 invalid input, 3 infeasible
// (output still carries the certificate witness), 4 resource limit.
struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

struct CommandOptions {
  std::string S = "inf";  // comma-separated places for matrix inputs
  long budget = kDefaultNodeBudget;
  Rat delta = Rat(1);
  Rat eta0 = Rat(1, 4);
  unsigned long seed = 1;
  std::string format = "json";  // csv applies to bench-exponents only
};

// Dispatches one subcommand on the given input text. Never throws: library
// errors are mapped onto exit codes and messages.
CommandResult run_command(const std::string& name, const std::string& input,
                          const CommandOptions& opt);

// Canonical JSON forms used by the fixture corpus and the tests.
std::string matrix_json(const RatMat& m);
std::string lie_algebra_json(const LieSubalgebra& g, const std::string& name,
                             const LieSubalgebra* keep = nullptr);
RatMat parse_matrix_json(const std::string& text);
LieSubalgebra parse_lie_algebra_json(const std::string& text);

}  // namespace efflevi
