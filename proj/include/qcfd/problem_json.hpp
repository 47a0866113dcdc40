#pragma once

#include <iosfwd>
#include <string>

#include "qcfd/harness.hpp"

namespace qcfd {

/// A user-supplied 1D problem. `correction` >= 0 selects the boundary-corrected solver
/// with that Taylor order (left derivative only); < 0 selects the plain CN solver.
struct ProblemFile {
  TermProblem1D problem;
  int correction = -1;
};

/// Parses the monomial-term JSON format described in docs/problem_schema.md.
/// Unknown keys and malformed terms raise ConfigurationError.
ProblemFile parse_problem_json(const std::string& text);
ProblemFile load_problem_json(std::istream& in);

}  // namespace qcfd
