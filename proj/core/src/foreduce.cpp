#include "npnas/foreduce.hpp"

#include <algorithm>
#include <deque>

#include "npnas/error.hpp"

namespace npnas {

Type fl_type(const Type& type) {
  switch (type.kind()) {
    case Type::Kind::kName:
      return Type::unit();
    case Type::Kind::kAbs:
      return Type::tuple({Type::unit(), fl_type(type.body())});
    case Type::Kind::kTuple: {
      std::vector<Type> items;
      for (const Type& t : type.items()) items.push_back(fl_type(t));
      return Type::tuple(std::move(items));
    }
    case Type::Kind::kData:
    case Type::Kind::kUnit:
      return type;
  }
  return type;
}

Signature fl_signature(const Signature& sig) {
  Signature out;
  for (const SortId& d : sig.data_sorts()) out.add_data_sort(d);
  for (const ConstructorDecl& c : sig.constructors()) {
    out.add_constructor(c.name, fl_type(c.arg), c.result);
  }
  return out;
}

TypeEnv fl_env(const TypeEnv& env) {
  TypeEnv out;
  for (const auto& [x, type] : env) {
    if (!type.is_name()) out.emplace(x, fl_type(type));
  }
  return out;
}

Term fl_term(const TypeEnv& env, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      auto it = env.find(t.var());
      if (it == env.end()) {
        throw Error(ErrorKind::kUnboundVariable, "variable '" + t.var().str() + "' is not declared");
      }
      return it->second.is_name() ? Term::unit() : t;
    }
    case Term::Kind::kUnit:
      return t;
    case Term::Kind::kAbs:
      return Term::tuple({Term::unit(), fl_term(env, t.child())});
    case Term::Kind::kApp:
      return Term::app(t.constructor(), fl_term(env, t.child()));
    case Term::Kind::kTuple: {
      std::vector<Term> items;
      for (const Term& c : t.items()) items.push_back(fl_term(env, c));
      return Term::tuple(std::move(items));
    }
  }
  return t;
}

ReducedProblem fl_reduce(const Signature& sig, const Problem& p) {
  ReducedProblem out{fl_signature(sig), {fl_env(p.env), {}}};
  for (const AtomicConstraint& c : p.constraints) {
    if (!c.is_eq()) continue;
    out.problem.constraints.push_back(
        AtomicConstraint::eq(fl_term(p.env, c.lhs()), fl_term(p.env, c.rhs())));
  }
  return out;
}

AlphaTree fl_tree(const AlphaTree& a) {
  switch (a.kind()) {
    case AlphaTree::Kind::kFree:
    case AlphaTree::Kind::kBound:
    case AlphaTree::Kind::kUnit:
      return AlphaTree::unit();
    case AlphaTree::Kind::kAbs:
      return AlphaTree::tuple({AlphaTree::unit(), fl_tree(a.child())});
    case AlphaTree::Kind::kApp:
      return AlphaTree::app(a.constructor(), fl_tree(a.child()));
    case AlphaTree::Kind::kTuple: {
      std::vector<AlphaTree> items;
      for (const AlphaTree& c : a.items()) items.push_back(fl_tree(c));
      return AlphaTree::tuple(std::move(items));
    }
  }
  return a;
}

FOValuation fl_valuation(const TypeEnv& env, const Valuation& v) {
  FOValuation out;
  for (const auto& [x, type] : env) {
    if (type.is_name()) continue;
    auto it = v.find(x);
    if (it == v.end()) {
      throw Error(ErrorKind::kMissingVariable, "valuation has no value for '" + x.str() + "'");
    }
    out.emplace(x, fl_tree(it->second));
  }
  return out;
}

// ---------------------------------------------------------------------------
// First-order unification

FOUnifier fo_unify(const Problem& reduced) {
  FOUnifier out;
  std::deque<std::pair<Term, Term>> work;
  for (const AtomicConstraint& c : reduced.constraints) {
    if (c.is_eq()) work.emplace_back(c.lhs(), c.rhs());
  }
  auto bind = [&](const Var& x, const Term& t) {
    for (auto& [l, r] : work) {
      l = substitute(x, t, l);
      r = substitute(x, t, r);
    }
    for (auto& [y, s] : out.bindings) s = substitute(x, t, s);
    out.bindings.emplace(x, t);
  };
  while (!work.empty()) {
    auto [l, r] = work.front();
    work.pop_front();
    if (l == r) continue;
    if (!l.is_var() && r.is_var()) std::swap(l, r);
    if (l.is_var()) {
      if (occurs(l.var(), r)) return FOUnifier{};
      bind(l.var(), r);
      continue;
    }
    if (l.kind() != r.kind()) return FOUnifier{};
    switch (l.kind()) {
      case Term::Kind::kUnit:
        break;
      case Term::Kind::kApp:
        if (l.constructor() != r.constructor()) return FOUnifier{};
        work.emplace_back(l.child(), r.child());
        break;
      case Term::Kind::kTuple:
        if (l.items().size() != r.items().size()) return FOUnifier{};
        for (std::size_t i = 0; i < l.items().size(); ++i) {
          work.emplace_back(l.items()[i], r.items()[i]);
        }
        break;
      case Term::Kind::kAbs:
      case Term::Kind::kVar:
        // Reduced problems contain no abstractions.
        return FOUnifier{};
    }
  }
  out.sat = true;
  return out;
}

namespace {

Term term_of_tree(const AlphaTree& a) {
  switch (a.kind()) {
    case AlphaTree::Kind::kUnit:
      return Term::unit();
    case AlphaTree::Kind::kApp:
      return Term::app(a.constructor(), term_of_tree(a.child()));
    case AlphaTree::Kind::kTuple: {
      std::vector<Term> items;
      for (const AlphaTree& c : a.items()) items.push_back(term_of_tree(c));
      return Term::tuple(std::move(items));
    }
    default:
      throw Error(ErrorKind::kInternal, "reduced values contain no names");
  }
}

AlphaTree ground(const Term& t, const FOValuation& leaves) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return leaves.at(t.var());
    case Term::Kind::kUnit:
      return AlphaTree::unit();
    case Term::Kind::kApp:
      return AlphaTree::app(t.constructor(), ground(t.child(), leaves));
    case Term::Kind::kTuple: {
      std::vector<AlphaTree> items;
      for (const Term& c : t.items()) items.push_back(ground(c, leaves));
      return AlphaTree::tuple(std::move(items));
    }
    case Term::Kind::kAbs:
      break;
  }
  throw Error(ErrorKind::kInternal, "reduced terms contain no abstractions");
}

}  // namespace

std::optional<FOValuation> fo_solve(const ReducedProblem& rp, const FOValuation& fixed) {
  Problem augmented = rp.problem;
  for (const auto& [x, a] : fixed) {
    if (rp.problem.env.count(x) == 0) continue;
    augmented.constraints.push_back(AtomicConstraint::eq(Term::var(x), term_of_tree(a)));
  }
  FOUnifier u = fo_unify(augmented);
  if (!u.sat) return std::nullopt;
  FOValuation leaves;
  for (const auto& [x, type] : rp.problem.env) {
    if (u.bindings.count(x) == 0) {
      leaves.emplace(x, canonicalize(inhabitant(rp.signature, type)));
    }
  }
  FOValuation out;
  for (const auto& [x, type] : rp.problem.env) {
    auto it = u.bindings.find(x);
    out.emplace(x, it == u.bindings.end() ? leaves.at(x) : ground(it->second, leaves));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sizes and measure

bool is_solved_var(const Var& x, const Problem& p) {
  std::size_t seen = 0;
  bool top_level = false;
  for (const AtomicConstraint& c : p.constraints) {
    std::size_t n = occurrences(x, c);
    if (n == 0) continue;
    seen += n;
    if (seen > 1) return false;
    top_level = c.is_eq() && ((c.lhs().is_var() && c.lhs().var() == x) ||
                              (c.rhs().is_var() && c.rhs().var() == x));
  }
  return seen == 1 && top_level;
}

std::size_t term_size(const TypeEnv& env, const FOValuation& w, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      auto it = env.find(t.var());
      if (it != env.end() && it->second.is_name()) return 1;
      auto wt = w.find(t.var());
      if (wt == w.end()) {
        throw Error(ErrorKind::kMissingVariable, "reduced valuation has no value for '" +
                                                     t.var().str() + "'");
      }
      return tree_size(wt->second);
    }
    case Term::Kind::kUnit:
      return 1;
    case Term::Kind::kAbs:
      return 2 + term_size(env, w, t.child());
    case Term::Kind::kApp:
      return 1 + term_size(env, w, t.child());
    case Term::Kind::kTuple: {
      std::size_t total = 1;
      for (const Term& c : t.items()) total += term_size(env, w, c);
      return total;
    }
  }
  return 1;
}

std::size_t constraint_size(const TypeEnv& env, const FOValuation& w, const AtomicConstraint& c) {
  if (c.is_eq()) return term_size(env, w, c.lhs()) + term_size(env, w, c.rhs());
  return term_size(env, w, c.rhs());
}

Measure measure(const FOValuation& w, const Problem& p) {
  Measure m;
  for (const auto& [x, type] : p.env) {
    if (!is_solved_var(x, p)) m.unsolved_sizes.push_back(term_size(p.env, w, Term::var(x)));
  }
  for (const AtomicConstraint& c : p.constraints) {
    m.constraint_sizes.push_back(constraint_size(p.env, w, c));
  }
  std::sort(m.unsolved_sizes.begin(), m.unsolved_sizes.end());
  std::sort(m.constraint_sizes.begin(), m.constraint_sizes.end());
  return m;
}

bool multiset_less(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) return false;
  // Cancel common elements; a < b iff every remaining element of a is
  // dominated by some remaining element of b.
  std::vector<std::size_t> only_a;
  std::vector<std::size_t> only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  if (only_b.empty()) return false;
  const std::size_t max_b = only_b.back();
  return std::all_of(only_a.begin(), only_a.end(), [&](std::size_t x) { return x < max_b; });
}

bool measure_less(const Measure& a, const Measure& b) {
  if (multiset_less(a.unsolved_sizes, b.unsolved_sizes)) return true;
  if (a.unsolved_sizes != b.unsolved_sizes) return false;
  return multiset_less(a.constraint_sizes, b.constraint_sizes);
}

}  // namespace npnas
