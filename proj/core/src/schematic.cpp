#include "npnas/schematic.hpp"

#include <algorithm>

#include "npnas/error.hpp"

namespace npnas {

Term Term::var(Var x) {
  Term t;
  t.kind_ = Kind::kVar;
  t.var_ = std::move(x);
  return t;
}

Term Term::abs(Var binder, Term body) {
  Term t;
  t.kind_ = Kind::kAbs;
  t.var_ = std::move(binder);
  t.children_.push_back(std::move(body));
  return t;
}

Term Term::app(std::string constructor, Term arg) {
  Term t;
  t.kind_ = Kind::kApp;
  t.constructor_ = std::move(constructor);
  t.children_.push_back(std::move(arg));
  return t;
}

Term Term::tuple(std::vector<Term> items) {
  if (items.size() < 2) {
    throw Error(ErrorKind::kTypeMismatch, "tuples need at least two components");
  }
  Term t;
  t.kind_ = Kind::kTuple;
  t.children_ = std::move(items);
  return t;
}

Term Term::unit() { return Term(); }

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::kVar:
      return var_.str();
    case Kind::kUnit:
      return "unit";
    case Kind::kAbs:
      return "(abs " + var_.str() + " " + child().to_string() + ")";
    case Kind::kApp:
      return "(con " + constructor_ + " " + child().to_string() + ")";
    case Kind::kTuple: {
      std::string out = "(tuple";
      for (const Term& c : children_) out += " " + c.to_string();
      return out + ")";
    }
  }
  return {};
}

AtomicConstraint AtomicConstraint::eq(Term lhs, Term rhs) {
  return AtomicConstraint(Kind::kEq, std::move(lhs), std::move(rhs));
}

AtomicConstraint AtomicConstraint::fresh(Var x, Term t) {
  return AtomicConstraint(Kind::kFresh, Term::var(std::move(x)), std::move(t));
}

std::string AtomicConstraint::to_string() const {
  return std::string(kind_ == Kind::kEq ? "(eq " : "(fresh ") + lhs_.to_string() + " " +
         rhs_.to_string() + ")";
}

std::string to_string(const Problem& p) {
  std::string out = "(vars";
  for (const auto& [x, type] : p.env) out += " (" + x.str() + " " + type.to_string() + ")";
  out += ")\n(constraints";
  for (const AtomicConstraint& c : p.constraints) out += "\n  " + c.to_string();
  return out + ")";
}

// ---------------------------------------------------------------------------
// Typing

namespace {

const Type& lookup(const TypeEnv& env, const Var& x) {
  auto it = env.find(x);
  if (it == env.end()) {
    throw Error(ErrorKind::kUnboundVariable, "variable '" + x.str() + "' is not declared");
  }
  return it->second;
}

}  // namespace

Type typecheck(const Signature& sig, const TypeEnv& env, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return lookup(env, t.var());
    case Term::Kind::kUnit:
      return Type::unit();
    case Term::Kind::kAbs: {
      const Type& binder = lookup(env, t.var());
      if (!binder.is_name()) {
        throw Error(ErrorKind::kNonNameBinder, "binder '" + t.var().str() + "' has type " +
                                                   binder.to_string() + ", not a name sort");
      }
      return Type::abs(binder.sort(), typecheck(sig, env, t.child()));
    }
    case Term::Kind::kApp: {
      const ConstructorDecl* c = sig.constructor(t.constructor());
      if (c == nullptr) {
        throw Error(ErrorKind::kUnknownConstructor,
                    "constructor '" + t.constructor() + "' is not declared");
      }
      Type arg = typecheck(sig, env, t.child());
      if (arg != c->arg) {
        throw Error(ErrorKind::kTypeMismatch, "constructor '" + c->name + "' expects " +
                                                  c->arg.to_string() + " but got " +
                                                  arg.to_string());
      }
      return Type::data(c->result);
    }
    case Term::Kind::kTuple: {
      std::vector<Type> items;
      for (const Term& c : t.items()) items.push_back(typecheck(sig, env, c));
      return Type::tuple(std::move(items));
    }
  }
  return Type::unit();
}

void typecheck(const Signature& sig, const TypeEnv& env, const AtomicConstraint& c) {
  if (c.is_eq()) {
    Type l = typecheck(sig, env, c.lhs());
    Type r = typecheck(sig, env, c.rhs());
    if (l != r) {
      throw Error(ErrorKind::kTypeMismatch, "sides of " + c.to_string() + " have types " +
                                                l.to_string() + " and " + r.to_string());
    }
    return;
  }
  const Type& x = lookup(env, c.fresh_var());
  if (!x.is_name()) {
    throw Error(ErrorKind::kNonNameFresh, "fresh variable '" + c.fresh_var().str() +
                                              "' has type " + x.to_string() +
                                              ", not a name sort");
  }
  typecheck(sig, env, c.rhs());
}

void typecheck(const Signature& sig, const Problem& p) {
  for (const auto& [x, type] : p.env) {
    if (!sig.is_well_formed(type)) {
      throw Error(ErrorKind::kTypeMismatch, "variable '" + x.str() + "' has type " +
                                                type.to_string() +
                                                " which mentions undeclared sorts");
    }
  }
  for (const AtomicConstraint& c : p.constraints) typecheck(sig, p.env, c);
}

// ---------------------------------------------------------------------------
// Semantics

namespace {

const AlphaTree& value_of(const Valuation& v, const Var& x) {
  auto it = v.find(x);
  if (it == v.end()) {
    throw Error(ErrorKind::kMissingVariable, "valuation has no value for '" + x.str() + "'");
  }
  return it->second;
}

const Name& name_of(const Valuation& v, const Var& x) {
  const AlphaTree& a = value_of(v, x);
  if (a.kind() != AlphaTree::Kind::kFree) {
    throw Error(ErrorKind::kTypeMismatch, "'" + x.str() + "' is not mapped to a name");
  }
  return a.name();
}

}  // namespace

AlphaTree instantiate(const Valuation& v, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return value_of(v, t.var());
    case Term::Kind::kUnit:
      return AlphaTree::unit();
    case Term::Kind::kAbs:
      return abstract(name_of(v, t.var()), instantiate(v, t.child()));
    case Term::Kind::kApp:
      return AlphaTree::app(t.constructor(), instantiate(v, t.child()));
    case Term::Kind::kTuple: {
      std::vector<AlphaTree> items;
      items.reserve(t.items().size());
      for (const Term& c : t.items()) items.push_back(instantiate(v, c));
      return AlphaTree::tuple(std::move(items));
    }
  }
  return AlphaTree::unit();
}

bool satisfies(const Valuation& v, const AtomicConstraint& c) {
  if (c.is_eq()) return instantiate(v, c.lhs()) == instantiate(v, c.rhs());
  return free_names(instantiate(v, c.rhs())).count(name_of(v, c.fresh_var())) == 0;
}

bool satisfies(const Valuation& v, const Problem& p) {
  for (const AtomicConstraint& c : p.constraints) {
    if (!satisfies(v, c)) return false;
  }
  return true;
}

bool conforms(const Signature& sig, const TypeEnv& env, const Valuation& v) {
  if (env.size() != v.size()) return false;
  for (const auto& [x, type] : env) {
    auto it = v.find(x);
    if (it == v.end() || !has_type(sig, it->second, type)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Substitution and variables

Term substitute(const Var& x, const Term& t, const Term& target) {
  switch (target.kind()) {
    case Term::Kind::kVar:
      return target.var() == x ? t : target;
    case Term::Kind::kUnit:
      return target;
    case Term::Kind::kAbs: {
      Var binder = target.var();
      if (binder == x) {
        if (!t.is_var()) {
          throw Error(ErrorKind::kIllegalBinderSubstitution,
                      "cannot substitute " + t.to_string() + " for binder '" + x.str() + "'");
        }
        binder = t.var();
      }
      return Term::abs(binder, substitute(x, t, target.child()));
    }
    case Term::Kind::kApp:
      return Term::app(target.constructor(), substitute(x, t, target.child()));
    case Term::Kind::kTuple: {
      std::vector<Term> items;
      items.reserve(target.items().size());
      for (const Term& c : target.items()) items.push_back(substitute(x, t, c));
      return Term::tuple(std::move(items));
    }
  }
  return target;
}

AtomicConstraint substitute(const Var& x, const Term& t, const AtomicConstraint& target) {
  if (target.is_eq()) {
    return AtomicConstraint::eq(substitute(x, t, target.lhs()), substitute(x, t, target.rhs()));
  }
  Var y = target.fresh_var();
  if (y == x) {
    if (!t.is_var()) {
      throw Error(ErrorKind::kIllegalBinderSubstitution,
                  "cannot substitute " + t.to_string() + " for fresh variable '" + x.str() + "'");
    }
    y = t.var();
  }
  return AtomicConstraint::fresh(y, substitute(x, t, target.rhs()));
}

Problem substitute(const Var& x, const Term& t, const Problem& target) {
  Problem out{target.env, {}};
  out.constraints.reserve(target.constraints.size());
  for (const AtomicConstraint& c : target.constraints) {
    out.constraints.push_back(substitute(x, t, c));
  }
  return out;
}

namespace {

void collect_vars(const Term& t, std::set<Var>& out) {
  if (t.kind() == Term::Kind::kVar || t.kind() == Term::Kind::kAbs) out.insert(t.var());
  for (const Term& c : t.items()) collect_vars(c, out);
}

}  // namespace

std::set<Var> vars(const Term& t) {
  std::set<Var> out;
  collect_vars(t, out);
  return out;
}

std::set<Var> vars(const AtomicConstraint& c) {
  std::set<Var> out;
  collect_vars(c.lhs(), out);
  collect_vars(c.rhs(), out);
  return out;
}

std::set<Var> vars(const std::vector<AtomicConstraint>& cs) {
  std::set<Var> out;
  for (const AtomicConstraint& c : cs) {
    collect_vars(c.lhs(), out);
    collect_vars(c.rhs(), out);
  }
  return out;
}

std::size_t occurrences(const Var& x, const Term& t) {
  std::size_t n = (t.kind() == Term::Kind::kVar || t.kind() == Term::Kind::kAbs) &&
                          t.var() == x
                      ? 1
                      : 0;
  for (const Term& c : t.items()) n += occurrences(x, c);
  return n;
}

bool occurs(const Var& x, const Term& t) { return occurrences(x, t) != 0; }

std::size_t occurrences(const Var& x, const AtomicConstraint& c) {
  return occurrences(x, c.lhs()) + occurrences(x, c.rhs());
}

std::size_t occurrences(const Var& x, const std::vector<AtomicConstraint>& cs) {
  std::size_t n = 0;
  for (const AtomicConstraint& c : cs) n += occurrences(x, c);
  return n;
}

}  // namespace npnas

namespace npnas {

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.var_ <=> b.var_; c != 0) return c;
  if (auto c = a.constructor_ <=> b.constructor_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.children_.begin(), a.children_.end(), b.children_.begin(), b.children_.end(),
      [](const Term& x, const Term& y) { return x <=> y; });
}

std::strong_ordering operator<=>(const AtomicConstraint& a, const AtomicConstraint& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.lhs_ <=> b.lhs_; c != 0) return c;
  return a.rhs_ <=> b.rhs_;
}

}  // namespace npnas
