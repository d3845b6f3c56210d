#pragma once

// Non-permutative schematic terms, constraints, typing and satisfaction.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "npnas/kernel.hpp"

namespace npnas {

class Var {
 public:
  Var() = default;
  explicit Var(std::string id) : id_(std::move(id)) {}

  const std::string& str() const { return id_; }

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var&, const Var&) = default;

 private:
  std::string id_;
};

class Term {
 public:
  enum class Kind { kVar, kAbs, kApp, kTuple, kUnit };

  static Term var(Var x);
  static Term abs(Var binder, Term body);
  static Term app(std::string constructor, Term arg);
  static Term tuple(std::vector<Term> items);
  static Term unit();

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::kVar; }
  // The variable itself, or the binder of an abstraction.
  const Var& var() const { return var_; }
  const std::string& constructor() const { return constructor_; }
  // Abstraction body or constructor argument.
  const Term& child() const { return children_.front(); }
  const std::vector<Term>& items() const { return children_; }

  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&);

 private:
  Term() = default;

  Kind kind_ = Kind::kUnit;
  Var var_;
  std::string constructor_;
  std::vector<Term> children_;
};

class AtomicConstraint {
 public:
  enum class Kind { kEq, kFresh };

  static AtomicConstraint eq(Term lhs, Term rhs);
  static AtomicConstraint fresh(Var x, Term t);

  Kind kind() const { return kind_; }
  bool is_eq() const { return kind_ == Kind::kEq; }
  // For freshness constraints lhs() is the variable term.
  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  const Var& fresh_var() const { return lhs_.var(); }

  std::string to_string() const;

  friend bool operator==(const AtomicConstraint&, const AtomicConstraint&) = default;
  friend std::strong_ordering operator<=>(const AtomicConstraint&, const AtomicConstraint&);

 private:
  AtomicConstraint(Kind kind, Term lhs, Term rhs)
      : kind_(kind), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  Kind kind_;
  Term lhs_;
  Term rhs_;
};

using TypeEnv = std::map<Var, Type>;
using Valuation = std::map<Var, AlphaTree>;

struct Problem {
  TypeEnv env;
  std::vector<AtomicConstraint> constraints;

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Throws Error(kUnboundVariable / kTypeMismatch / kNonNameBinder /
// kNonNameFresh / kUnknownConstructor).
Type typecheck(const Signature& sig, const TypeEnv& env, const Term& t);
void typecheck(const Signature& sig, const TypeEnv& env, const AtomicConstraint& c);
void typecheck(const Signature& sig, const Problem& p);

// Throws Error(kMissingVariable), or kTypeMismatch when a binder variable is
// not mapped to a name.
AlphaTree instantiate(const Valuation& v, const Term& t);
bool satisfies(const Valuation& v, const AtomicConstraint& c);
bool satisfies(const Valuation& v, const Problem& p);

// dom(v) = dom(env) and every image has its declared type.
bool conforms(const Signature& sig, const TypeEnv& env, const Valuation& v);

// Capturing substitution [x:=t].  Throws Error(kIllegalBinderSubstitution) if
// x sits in a binder position and t is not a variable.
Term substitute(const Var& x, const Term& t, const Term& target);
AtomicConstraint substitute(const Var& x, const Term& t, const AtomicConstraint& target);
Problem substitute(const Var& x, const Term& t, const Problem& target);

std::set<Var> vars(const Term& t);
std::set<Var> vars(const AtomicConstraint& c);
std::set<Var> vars(const std::vector<AtomicConstraint>& cs);
bool occurs(const Var& x, const Term& t);
// Number of occurrences of x, binder positions included.
std::size_t occurrences(const Var& x, const Term& t);
std::size_t occurrences(const Var& x, const AtomicConstraint& c);
std::size_t occurrences(const Var& x, const std::vector<AtomicConstraint>& cs);

std::string to_string(const Problem& p);

}  // namespace npnas
