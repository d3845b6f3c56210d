#pragma once

// Name-erasing first-order reduction, a first-order unifier for the reduced
// problems, and the size measure used by the termination argument.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "npnas/kernel.hpp"
#include "npnas/schematic.hpp"

namespace npnas {

struct ReducedProblem {
  Signature signature;
  Problem problem;
};

using FOValuation = std::map<Var, AlphaTree>;

Signature fl_signature(const Signature& sig);
Type fl_type(const Type& type);
TypeEnv fl_env(const TypeEnv& env);
Term fl_term(const TypeEnv& env, const Term& t);
ReducedProblem fl_reduce(const Signature& sig, const Problem& p);
// Erases names from a value: names become unit, abstractions (unit, body).
AlphaTree fl_tree(const AlphaTree& a);
FOValuation fl_valuation(const TypeEnv& env, const Valuation& v);

struct FOUnifier {
  bool sat = false;
  // Idempotent most general unifier when sat.
  std::map<Var, Term> bindings;
};

FOUnifier fo_unify(const Problem& reduced);
inline FOUnifier fo_unify(const ReducedProblem& rp) { return fo_unify(rp.problem); }

// A ground solution of the reduced problem agreeing with `fixed` on its
// domain, or nullopt if none exists.  Unconstrained variables get inhabitants.
std::optional<FOValuation> fo_solve(const ReducedProblem& rp, const FOValuation& fixed = {});

struct Measure {
  std::vector<std::size_t> unsolved_sizes;    // sorted
  std::vector<std::size_t> constraint_sizes;  // sorted

  friend bool operator==(const Measure&, const Measure&) = default;
};

// Exactly one occurrence, and it is a whole side of an equation.
bool is_solved_var(const Var& x, const Problem& p);
std::size_t term_size(const TypeEnv& env, const FOValuation& w, const Term& t);
std::size_t constraint_size(const TypeEnv& env, const FOValuation& w, const AtomicConstraint& c);
// Throws Error(kMissingVariable) when w lacks a non-name variable.
Measure measure(const FOValuation& w, const Problem& p);

// Dershowitz-Manna order on finite multisets of naturals.
bool multiset_less(std::vector<std::size_t> a, std::vector<std::size_t> b);
// Lexicographic product of the multiset order with itself.
bool measure_less(const Measure& a, const Measure& b);

}  // namespace npnas
