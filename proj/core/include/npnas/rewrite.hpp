#pragma once

// Constraint transformation rules F1-F5 / E1-E7 and narrowing N1-N4.
//
// Rules match after maximal abstraction-prefix decomposition of each side.
// Equal prefix lengths are required for E1-E4; an equation whose sides have
// different prefix lengths is only reachable by E6 (shorter prefix empty) or
// E7, with the surplus abstractions of the longer side kept in t.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "npnas/kernel.hpp"
#include "npnas/schematic.hpp"

namespace npnas {

enum class RuleId { kF1, kF2, kF3, kF4, kF5, kE1, kE2, kE3, kE4, kE5, kE6, kE7 };

// Which side of an equation holds the variable for E6/E7.
enum class Orientation { kNone, kLeft, kRight };

std::string_view to_string(RuleId rule);

struct Selection {
  std::size_t constraint = 0;
  RuleId rule = RuleId::kF1;
  std::size_t branch = 0;
  Orientation orientation = Orientation::kNone;

  std::string to_string() const;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct NarrowResult {
  TypeEnv fresh_env;
  Term pattern;
};

std::pair<std::vector<Var>, Term> decompose(const Term& t);
Term rebuild(const std::vector<Var>& prefix, Term body);

// Fresh variables are named _k, using the smallest indices not in dom(env).
// Throws Error(kNarrowOnVariable).
NarrowResult narrow(const Signature& sig, const TypeEnv& env, const Term& t);

// Selections whose pattern and side-conditions match constraint `index`, in
// rule, branch, orientation order.  F4/E4 branch numbers follow the rule's
// display order; branches whose sort gate fails are omitted.
std::vector<Selection> selections_for(const Problem& p, std::size_t index);
std::vector<Selection> enumerate_selections(const Signature& sig, const Problem& p);

// Throws Error(kInvalidSelection) if s does not match.
Problem step(const Signature& sig, const Problem& p, const Selection& s);
// step without the check; s must come from selections_for(p, s.constraint).
Problem apply_selection(const Signature& sig, const Problem& p, const Selection& s);
std::vector<Problem> successors(const Signature& sig, const Problem& p);

}  // namespace npnas
