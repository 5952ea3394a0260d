#ifndef MALCEV_CLI_HPP
#define MALCEV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "malcev/constructions.hpp"

namespace malcev {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitInputError = 2 };

/// Runs the command line; all output goes to the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3", "-1/2", "t", "2*t", "1 - 1/2*t"-style linear combinations of basis
/// names of a scalar algebra. A bare rational is a multiple of the unit.
Vector parse_scalar(const CommutativeScalarAlgebra& b, const std::string& text);

} // namespace malcev

#endif
