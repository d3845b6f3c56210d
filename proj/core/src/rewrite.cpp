#include "npnas/rewrite.hpp"

#include <algorithm>

#include "npnas/error.hpp"

namespace npnas {

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::kF1: return "F1";
    case RuleId::kF2: return "F2";
    case RuleId::kF3: return "F3";
    case RuleId::kF4: return "F4";
    case RuleId::kF5: return "F5";
    case RuleId::kE1: return "E1";
    case RuleId::kE2: return "E2";
    case RuleId::kE3: return "E3";
    case RuleId::kE4: return "E4";
    case RuleId::kE5: return "E5";
    case RuleId::kE6: return "E6";
    case RuleId::kE7: return "E7";
  }
  return "?";
}

std::string Selection::to_string() const {
  std::string out = "#" + std::to_string(constraint) + " " + std::string(npnas::to_string(rule));
  if (rule == RuleId::kF4 || rule == RuleId::kE4) out += " branch " + std::to_string(branch);
  if (orientation == Orientation::kLeft) out += " left";
  if (orientation == Orientation::kRight) out += " right";
  return out;
}

std::pair<std::vector<Var>, Term> decompose(const Term& t) {
  std::vector<Var> prefix;
  const Term* cur = &t;
  while (cur->kind() == Term::Kind::kAbs) {
    prefix.push_back(cur->var());
    cur = &cur->child();
  }
  return {std::move(prefix), *cur};
}

Term rebuild(const std::vector<Var>& prefix, Term body) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) body = Term::abs(*it, std::move(body));
  return body;
}

NarrowResult narrow(const Signature& sig, const TypeEnv& env, const Term& t) {
  if (t.is_var()) {
    throw Error(ErrorKind::kNarrowOnVariable, "cannot narrow against variable " + t.to_string());
  }
  Type type = typecheck(sig, env, t);
  NarrowResult out{{}, Term::unit()};
  std::size_t next = 0;
  auto fresh = [&](const Type& ty) {
    Var v;
    do {
      v = Var("_" + std::to_string(next++));
    } while (env.count(v) != 0);
    out.fresh_env.emplace(v, ty);
    return v;
  };
  switch (t.kind()) {
    case Term::Kind::kUnit:
      break;
    case Term::Kind::kApp: {
      const ConstructorDecl* c = sig.constructor(t.constructor());
      out.pattern = Term::app(t.constructor(), Term::var(fresh(c->arg)));
      break;
    }
    case Term::Kind::kTuple: {
      std::vector<Term> items;
      for (const Type& ty : type.items()) items.push_back(Term::var(fresh(ty)));
      out.pattern = Term::tuple(std::move(items));
      break;
    }
    case Term::Kind::kAbs: {
      Var binder = fresh(Type::name(type.sort()));
      Var body = fresh(type.body());
      out.pattern = Term::abs(binder, Term::var(body));
      break;
    }
    case Term::Kind::kVar:
      break;
  }
  return out;
}

namespace {

std::set<Var> vars_except(const Problem& p, std::size_t index) {
  std::set<Var> out;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    if (i == index) continue;
    std::set<Var> vs = vars(p.constraints[i]);
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

bool is_name_var(const Problem& p, const Var& x) {
  auto it = p.env.find(x);
  return it != p.env.end() && it->second.is_name();
}

const Type* type_of(const Problem& p, const Var& x) {
  auto it = p.env.find(x);
  return it == p.env.end() ? nullptr : &it->second;
}

bool same_type(const Problem& p, const Var& a, const Var& b) {
  const Type* ta = type_of(p, a);
  const Type* tb = type_of(p, b);
  return ta != nullptr && tb != nullptr && *ta == *tb;
}

// Selections for an equation whose variable side has prefix `px` and body
// variable x, and whose other side, after dropping the first |px| binders, is
// the compound term t.
void variable_against_compound(const Var& x, std::size_t k, const Term& t,
                               const std::set<Var>& rest, std::size_t index,
                               Orientation side, std::vector<Selection>& out) {
  if (occurs(x, t)) return;
  if (k == 0) {
    if (rest.count(x) != 0) out.push_back({index, RuleId::kE6, 0, side});
  } else {
    out.push_back({index, RuleId::kE7, 0, side});
  }
}

void fresh_selections(const Problem& p, std::size_t index, std::vector<Selection>& out) {
  const AtomicConstraint& c = p.constraints[index];
  const Var& x = c.fresh_var();
  auto [prefix, body] = decompose(c.rhs());
  switch (body.kind()) {
    case Term::Kind::kUnit:
      out.push_back({index, RuleId::kF1, 0, Orientation::kNone});
      return;
    case Term::Kind::kApp:
      out.push_back({index, RuleId::kF2, 0, Orientation::kNone});
      return;
    case Term::Kind::kTuple:
      out.push_back({index, RuleId::kF3, 0, Orientation::kNone});
      return;
    case Term::Kind::kAbs:
      return;
    case Term::Kind::kVar:
      break;
  }
  const std::size_t k = prefix.size();
  if (k > 0) {
    for (std::size_t b = 0; b < k; ++b) {
      if (same_type(p, x, prefix[b])) out.push_back({index, RuleId::kF4, b, Orientation::kNone});
    }
    out.push_back({index, RuleId::kF4, k, Orientation::kNone});
    return;
  }
  const Var& y = body.var();
  if (is_name_var(p, y) && !same_type(p, x, y)) {
    out.push_back({index, RuleId::kF5, 0, Orientation::kNone});
  }
}

void eq_selections(const Problem& p, std::size_t index, std::vector<Selection>& out) {
  const AtomicConstraint& c = p.constraints[index];
  auto [pl, bl] = decompose(c.lhs());
  auto [pr, br] = decompose(c.rhs());
  const std::set<Var> rest = vars_except(p, index);

  if (pl.size() != pr.size()) {
    const bool left_short = pl.size() < pr.size();
    const auto& ps = left_short ? pl : pr;
    const Term& bs = left_short ? bl : br;
    const auto& pg = left_short ? pr : pl;
    const Term& bg = left_short ? br : bl;
    if (!bs.is_var()) return;
    std::vector<Var> surplus(pg.begin() + static_cast<std::ptrdiff_t>(ps.size()), pg.end());
    variable_against_compound(bs.var(), ps.size(), rebuild(surplus, bg), rest, index,
                              left_short ? Orientation::kLeft : Orientation::kRight, out);
    return;
  }

  const std::size_t k = pl.size();
  if (bl.is_var() && br.is_var()) {
    const Var& x = bl.var();
    const Var& y = br.var();
    if (k == 0) {
      if (x == y) {
        out.push_back({index, RuleId::kE5, 0, Orientation::kNone});
        return;
      }
      if (rest.count(x) != 0) out.push_back({index, RuleId::kE6, 0, Orientation::kLeft});
      if (rest.count(y) != 0) out.push_back({index, RuleId::kE6, 0, Orientation::kRight});
      return;
    }
    if (!is_name_var(p, x)) return;
    // Branch j resolves both names to binder position k - j (innermost first).
    for (std::size_t j = 0; j < k; ++j) {
      if (same_type(p, x, pl[k - 1 - j])) {
        out.push_back({index, RuleId::kE4, j, Orientation::kNone});
      }
    }
    out.push_back({index, RuleId::kE4, k, Orientation::kNone});
    return;
  }
  if (bl.is_var()) {
    variable_against_compound(bl.var(), k, br, rest, index, Orientation::kLeft, out);
    return;
  }
  if (br.is_var()) {
    variable_against_compound(br.var(), k, bl, rest, index, Orientation::kRight, out);
    return;
  }
  if (bl.kind() == Term::Kind::kUnit && br.kind() == Term::Kind::kUnit) {
    out.push_back({index, RuleId::kE1, 0, Orientation::kNone});
  } else if (bl.kind() == Term::Kind::kApp && br.kind() == Term::Kind::kApp &&
             bl.constructor() == br.constructor()) {
    out.push_back({index, RuleId::kE2, 0, Orientation::kNone});
  } else if (bl.kind() == Term::Kind::kTuple && br.kind() == Term::Kind::kTuple &&
             bl.items().size() == br.items().size()) {
    out.push_back({index, RuleId::kE3, 0, Orientation::kNone});
  }
}

AtomicConstraint fresh_of(const Var& x, const Var& y) {
  return AtomicConstraint::fresh(x, Term::var(y));
}

AtomicConstraint eq_of(const Var& x, const Var& y) {
  return AtomicConstraint::eq(Term::var(x), Term::var(y));
}

}  // namespace

std::vector<Selection> selections_for(const Problem& p, std::size_t index) {
  std::vector<Selection> out;
  if (index >= p.constraints.size()) return out;
  if (p.constraints[index].is_eq()) {
    eq_selections(p, index, out);
  } else {
    fresh_selections(p, index, out);
  }
  return out;
}

std::vector<Selection> enumerate_selections(const Signature&, const Problem& p) {
  std::vector<Selection> out;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    std::vector<Selection> here = selections_for(p, i);
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

Problem step(const Signature& sig, const Problem& p, const Selection& s) {
  std::vector<Selection> valid = selections_for(p, s.constraint);
  if (std::find(valid.begin(), valid.end(), s) == valid.end()) {
    throw Error(ErrorKind::kInvalidSelection, "selection " + s.to_string() + " does not apply");
  }
  return apply_selection(sig, p, s);
}

Problem apply_selection(const Signature& sig, const Problem& p, const Selection& s) {
  const AtomicConstraint& c = p.constraints[s.constraint];
  std::vector<AtomicConstraint> replacement;
  Problem out{p.env, {}};

  // Default placement: constraint i is replaced in place, the rest unchanged.
  auto splice = [&](const std::vector<AtomicConstraint>& rest_source) {
    out.constraints.clear();
    for (std::size_t i = 0; i < rest_source.size(); ++i) {
      if (i == s.constraint) {
        out.constraints.insert(out.constraints.end(), replacement.begin(), replacement.end());
      } else {
        out.constraints.push_back(rest_source[i]);
      }
    }
  };

  switch (s.rule) {
    case RuleId::kF1:
    case RuleId::kF5:
    case RuleId::kE1:
    case RuleId::kE5:
      break;
    case RuleId::kF2: {
      auto [prefix, body] = decompose(c.rhs());
      replacement.push_back(AtomicConstraint::fresh(c.fresh_var(), rebuild(prefix, body.child())));
      break;
    }
    case RuleId::kF3: {
      auto [prefix, body] = decompose(c.rhs());
      for (const Term& item : body.items()) {
        replacement.push_back(AtomicConstraint::fresh(c.fresh_var(), rebuild(prefix, item)));
      }
      break;
    }
    case RuleId::kF4: {
      auto [prefix, body] = decompose(c.rhs());
      const Var& x = c.fresh_var();
      const std::size_t k = prefix.size();
      const std::size_t upto = std::min(s.branch, k);
      for (std::size_t j = 0; j < upto; ++j) replacement.push_back(fresh_of(x, prefix[j]));
      if (s.branch < k) {
        replacement.push_back(eq_of(x, prefix[s.branch]));
      } else {
        replacement.push_back(fresh_of(x, body.var()));
      }
      break;
    }
    case RuleId::kE2: {
      auto [pl, bl] = decompose(c.lhs());
      auto [pr, br] = decompose(c.rhs());
      replacement.push_back(
          AtomicConstraint::eq(rebuild(pl, bl.child()), rebuild(pr, br.child())));
      break;
    }
    case RuleId::kE3: {
      auto [pl, bl] = decompose(c.lhs());
      auto [pr, br] = decompose(c.rhs());
      for (std::size_t j = 0; j < bl.items().size(); ++j) {
        replacement.push_back(
            AtomicConstraint::eq(rebuild(pl, bl.items()[j]), rebuild(pr, br.items()[j])));
      }
      break;
    }
    case RuleId::kE4: {
      auto [pl, bl] = decompose(c.lhs());
      auto [pr, br] = decompose(c.rhs());
      const Var& x = bl.var();
      const Var& y = br.var();
      const std::size_t k = pl.size();
      // Binders strictly inside the chosen position, innermost first.
      const std::size_t skipped = std::min(s.branch, k);
      for (std::size_t j = 0; j < skipped; ++j) replacement.push_back(fresh_of(x, pl[k - 1 - j]));
      if (s.branch < k) replacement.push_back(eq_of(x, pl[k - 1 - s.branch]));
      for (std::size_t j = 0; j < skipped; ++j) replacement.push_back(fresh_of(y, pr[k - 1 - j]));
      if (s.branch < k) {
        replacement.push_back(eq_of(y, pr[k - 1 - s.branch]));
      } else {
        replacement.push_back(eq_of(x, y));
      }
      break;
    }
    case RuleId::kE6: {
      const Term& xt = s.orientation == Orientation::kLeft ? c.lhs() : c.rhs();
      const Term& t = s.orientation == Orientation::kLeft ? c.rhs() : c.lhs();
      const Var x = xt.var();
      std::vector<AtomicConstraint> rest;
      for (const AtomicConstraint& d : p.constraints) rest.push_back(substitute(x, t, d));
      replacement.push_back(AtomicConstraint::eq(Term::var(x), t));
      splice(rest);
      return out;
    }
    case RuleId::kE7: {
      auto [pl, bl] = decompose(c.lhs());
      auto [pr, br] = decompose(c.rhs());
      const bool left = s.orientation == Orientation::kLeft;
      const auto& pv = left ? pl : pr;
      const Var x = (left ? bl : br).var();
      const auto& po = left ? pr : pl;
      const Term& bo = left ? br : bl;
      std::vector<Var> surplus(po.begin() + static_cast<std::ptrdiff_t>(pv.size()), po.end());
      NarrowResult n = narrow(sig, p.env, rebuild(surplus, bo));
      for (auto& [v, ty] : n.fresh_env) out.env.emplace(v, ty);
      std::vector<AtomicConstraint> rest;
      for (const AtomicConstraint& d : p.constraints) rest.push_back(substitute(x, n.pattern, d));
      replacement.push_back(AtomicConstraint::eq(Term::var(x), n.pattern));
      replacement.push_back(rest[s.constraint]);
      splice(rest);
      return out;
    }
  }
  splice(p.constraints);
  return out;
}

std::vector<Problem> successors(const Signature& sig, const Problem& p) {
  std::vector<Problem> out;
  for (const Selection& s : enumerate_selections(sig, p)) out.push_back(step(sig, p, s));
  return out;
}

}  // namespace npnas
