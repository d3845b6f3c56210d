#include "npnas/decider.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "npnas/error.hpp"
#include "npnas/foreduce.hpp"

namespace npnas {

std::string_view to_string(ConstraintClass c) {
  switch (c) {
    case ConstraintClass::kSolved1: return "solved-1";
    case ConstraintClass::kSolved2: return "solved-2";
    case ConstraintClass::kSolved3: return "solved-3";
    case ConstraintClass::kSolved4: return "solved-4";
    case ConstraintClass::kClash5: return "clash-5";
    case ConstraintClass::kClash6: return "clash-6";
    case ConstraintClass::kClash7: return "clash-7";
    case ConstraintClass::kClash8: return "clash-8";
    case ConstraintClass::kReducible: return "reducible";
  }
  return "?";
}

bool is_solved_class(ConstraintClass c) {
  return c == ConstraintClass::kSolved1 || c == ConstraintClass::kSolved2 ||
         c == ConstraintClass::kSolved3 || c == ConstraintClass::kSolved4;
}

bool is_clash_class(ConstraintClass c) {
  return c == ConstraintClass::kClash5 || c == ConstraintClass::kClash6 ||
         c == ConstraintClass::kClash7 || c == ConstraintClass::kClash8;
}

std::string_view to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::kSat: return "sat";
    case Verdict::Status::kUnsat: return "unsat";
    case Verdict::Status::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::string_view to_string(Verdict::Reason r) {
  switch (r) {
    case Verdict::Reason::kNone: return "none";
    case Verdict::Reason::kFoReduction: return "fo-reduction";
    case Verdict::Reason::kExhaustedNormalForms: return "exhausted-normal-forms";
  }
  return "?";
}

namespace {

bool name_typed(const Problem& p, const Var& x) {
  auto it = p.env.find(x);
  return it != p.env.end() && it->second.is_name();
}

// The variable made solved by a Solved2 equation, if the equation has that shape.
std::optional<Var> solved_side(const Problem& p, const AtomicConstraint& c) {
  if (!c.is_eq()) return std::nullopt;
  auto check = [&](const Term& side, const Term& other) -> std::optional<Var> {
    if (!side.is_var() || occurs(side.var(), other)) return std::nullopt;
    if (occurrences(side.var(), p.constraints) != 1) return std::nullopt;
    return side.var();
  };
  if (auto x = check(c.lhs(), c.rhs())) return x;
  return check(c.rhs(), c.lhs());
}

ConstraintClass variable_against_compound(const Var& x, std::size_t k, const Term& t) {
  if (occurs(x, t)) return k == 0 ? ConstraintClass::kClash7 : ConstraintClass::kClash8;
  return ConstraintClass::kReducible;
}

}  // namespace

ConstraintClass classify(const Problem& p, std::size_t index) {
  const AtomicConstraint& c = p.constraints.at(index);
  if (!c.is_eq()) {
    const Var& x = c.fresh_var();
    if (!c.rhs().is_var()) return ConstraintClass::kReducible;
    const Var& y = c.rhs().var();
    if (x == y) return ConstraintClass::kClash5;
    if (name_typed(p, y) && p.env.at(x) != p.env.at(y)) return ConstraintClass::kReducible;
    return ConstraintClass::kSolved1;
  }
  if (solved_side(p, c)) return ConstraintClass::kSolved2;

  auto [pl, bl] = decompose(c.lhs());
  auto [pr, br] = decompose(c.rhs());
  if (pl.size() != pr.size()) {
    const bool left_short = pl.size() < pr.size();
    const auto& ps = left_short ? pl : pr;
    const Term& bs = left_short ? bl : br;
    const auto& pg = left_short ? pr : pl;
    const Term& bg = left_short ? br : bl;
    if (!bs.is_var()) {
      throw Error(ErrorKind::kIllFormedProblem, "ill-typed equation " + c.to_string());
    }
    std::vector<Var> surplus(pg.begin() + static_cast<std::ptrdiff_t>(ps.size()), pg.end());
    return variable_against_compound(bs.var(), ps.size(), rebuild(surplus, bg));
  }
  const std::size_t k = pl.size();
  if (bl.is_var() && br.is_var()) {
    if (k == 0) return ConstraintClass::kReducible;  // E5 or E6
    if (name_typed(p, bl.var())) return ConstraintClass::kReducible;  // E4
    return bl.var() == br.var() ? ConstraintClass::kSolved4 : ConstraintClass::kSolved3;
  }
  if (bl.is_var()) return variable_against_compound(bl.var(), k, br);
  if (br.is_var()) return variable_against_compound(br.var(), k, bl);
  if (bl.kind() == Term::Kind::kApp && br.kind() == Term::Kind::kApp &&
      bl.constructor() != br.constructor()) {
    return ConstraintClass::kClash6;
  }
  return ConstraintClass::kReducible;
}

bool is_solved(const Problem& p) {
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    if (!is_solved_class(classify(p, i))) return false;
  }
  return true;
}

bool is_terminal(const Signature& sig, const Problem& p) {
  return enumerate_selections(sig, p).empty();
}

// ---------------------------------------------------------------------------
// Witnesses

Valuation extract_witness(const Signature& sig, const Problem& solved) {
  if (!is_solved(solved)) {
    throw Error(ErrorKind::kNotSolved, "problem is not in solved form");
  }
  // Left-hand sides of Solved2 equations: evaluated last, from their right-hand sides.
  std::map<Var, Term> defined;
  for (const AtomicConstraint& c : solved.constraints) {
    if (auto x = solved_side(solved, c)) {
      defined.emplace(*x, c.lhs().is_var() && c.lhs().var() == *x ? c.rhs() : c.lhs());
    }
  }
  std::map<SortId, std::size_t> name_count;
  for (const auto& [x, type] : solved.env) {
    if (type.is_name()) ++name_count[type.sort()];
  }
  // Names used by fillers differ from every name given to a variable.
  const std::map<SortId, std::size_t>& filler_index = name_count;

  Valuation v;
  std::map<SortId, std::size_t> next;
  for (const auto& [x, type] : solved.env) {
    if (defined.count(x) != 0) continue;
    if (type.is_name()) {
      v.emplace(x, AlphaTree::free(Name{type.sort(), next[type.sort()]++}));
    } else {
      v.emplace(x, canonicalize(inhabitant(sig, type, filler_index)));
    }
  }
  for (const auto& [x, t] : defined) v.emplace(x, instantiate(v, t));
  if (!satisfies(v, solved)) {
    throw Error(ErrorKind::kInternal, "constructed witness fails the solved problem");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct BudgetHit {};

std::string problem_key(const Problem& p) {
  std::vector<std::string> parts;
  parts.reserve(p.constraints.size());
  for (const AtomicConstraint& c : p.constraints) parts.push_back(c.to_string());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& s : parts) key += s + ";";
  key += "|";
  for (const Var& x : vars(p.constraints)) key += x.str() + ":" + p.env.at(x).to_string() + ";";
  return key;
}

class Search {
 public:
  Search(const Signature& sig, const SolveOptions& opts) : sig_(sig), opts_(opts) {}

  std::optional<Problem> run(const Problem& p, std::size_t depth) {
    const std::string key = problem_key(p);
    // A problem already explored from elsewhere had no solved descendant.
    if (!seen_.insert(key).second) return std::nullopt;
    ++stats.nodes;
    if (opts_.node_budget && stats.nodes > *opts_.node_budget) throw BudgetHit{};

    std::optional<std::size_t> focus;
    bool solved = true;
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
      ConstraintClass cls = classify(p, i);
      if (is_clash_class(cls)) {
        ++stats.normal_forms;
        return std::nullopt;
      }
      if (!is_solved_class(cls)) {
        solved = false;
        if (!focus) focus = i;
      }
    }
    if (solved) {
      ++stats.normal_forms;
      return p;
    }

    std::vector<Selection> sels = opts_.strategy == Strategy::kFocused
                                      ? selections_for(p, *focus)
                                      : enumerate_selections(sig_, p);
    if (sels.empty()) {
      throw Error(ErrorKind::kInternal, "reducible constraint without a matching rule");
    }
    std::optional<Problem> found;
    for (const Selection& s : sels) {
      if (opts_.trace) opts_.trace(p, s, depth);
      found = run(apply_selection(sig_, p, s), depth + 1);
      if (found) break;
    }
    return found;
  }

  SearchStats stats;

 private:
  const Signature& sig_;
  const SolveOptions& opts_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

Verdict decide(const Signature& sig, const Problem& p, const SolveOptions& opts) {
  try {
    typecheck(sig, p);
  } catch (const Error& e) {
    throw Error(ErrorKind::kIllFormedProblem, e.what());
  }
  Verdict out;
  if (!fo_unify(fl_reduce(sig, p)).sat) {
    out.status = Verdict::Status::kUnsat;
    out.reason = Verdict::Reason::kFoReduction;
    return out;
  }
  Search search(sig, opts);
  std::optional<Problem> solved;
  try {
    solved = search.run(p, 0);
  } catch (const BudgetHit&) {
    out.status = Verdict::Status::kBudgetExceeded;
    out.stats = search.stats;
    return out;
  }
  out.stats = search.stats;
  if (!solved) {
    out.status = Verdict::Status::kUnsat;
    out.reason = Verdict::Reason::kExhaustedNormalForms;
    return out;
  }
  out.status = Verdict::Status::kSat;
  if (opts.witness) {
    Valuation full = extract_witness(sig, *solved);
    Valuation restricted;
    for (const auto& [x, type] : p.env) restricted.emplace(x, full.at(x));
    if (!satisfies(restricted, p)) {
      throw Error(ErrorKind::kInternal, "witness fails the original problem");
    }
    out.witness = std::move(restricted);
  }
  out.solved_form = std::move(*solved);
  return out;
}

}  // namespace npnas
