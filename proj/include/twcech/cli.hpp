#pragma once

// Batch commands behind the twcech executable.  Each returns the exit code
// and the text for stdout and stderr; nothing is printed here.
//
// Exit codes: 0 success, 1 a verification failed, 2 schema error or
// inapplicable request, 3 the twist is not closed.

#include <cstdint>
#include <string>
#include <vector>

#include "twcech/io.hpp"

namespace twcech {

enum class Format { Text, Json };

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Cohomology groups in the given degrees; all nonzero degrees when empty.
CliResult run_compute(const std::string& input, const std::vector<int>& degrees,
                      ScalarKind scalar, Format format);

/// Checks: d2, steenrod, les, tu, surjectivity, lift.  All applicable
/// checks when empty.
CliResult run_verify(const std::string& input,
                     const std::vector<std::string>& checks, std::uint64_t seed,
                     Format format);

/// The instance file for a named example.
CliResult run_example(const std::string& name, const ExampleParameters& params);

}  // namespace twcech
