#pragma once

// S-expression formats for problems and EU problems.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "npnas/eubridge.hpp"
#include "npnas/kernel.hpp"
#include "npnas/schematic.hpp"

namespace npnas {

struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;

  std::string where() const { return std::to_string(line) + ":" + std::to_string(column); }
};

// `;` starts a comment that runs to the end of the line.
// Throws Error(kSyntaxError) with "line:column" in the message.
std::vector<SExpr> read_sexprs(std::string_view text);

struct ProblemDocument {
  Signature signature;
  Problem problem;
};

// Parses, validates the signature and typechecks every constraint.
// Throws Error(kSyntaxError) or Error(kValidationError).
ProblemDocument parse_problem(std::string_view text);
std::string print_problem(const Signature& sig, const Problem& p);

std::string print_type(const Type& t);
std::string print_term(const Term& t);
std::string print_constraint(const AtomicConstraint& c);

EUProblem parse_eu(std::string_view text);
std::string print_eu(const EUProblem& s);

// "x = n0@N" lines, one per variable in env order.
std::string print_valuation(const Valuation& v);

}  // namespace npnas
