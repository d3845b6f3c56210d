#include "npnas/eubridge.hpp"

#include <algorithm>
#include <set>

#include "npnas/error.hpp"

namespace npnas {

NameTerm NameTerm::identity(Vertex v) {
  NameTerm t;
  t.kind_ = Kind::kIdentity;
  t.vertex_ = std::move(v);
  return t;
}

NameTerm NameTerm::perm(std::string q, Vertex v) {
  NameTerm t;
  t.kind_ = Kind::kPermVar;
  t.perm_ = std::move(q);
  t.vertex_ = std::move(v);
  return t;
}

NameTerm NameTerm::swap(NameTerm a, NameTerm b, NameTerm target) {
  NameTerm t;
  t.kind_ = Kind::kSwap;
  t.parts_ = std::make_shared<const std::vector<NameTerm>>(
      std::vector<NameTerm>{std::move(a), std::move(b), std::move(target)});
  return t;
}

std::size_t NameTerm::swap_depth() const {
  if (kind_ != Kind::kSwap) return 0;
  return 1 + std::max({swap_left().swap_depth(), swap_right().swap_depth(), target().swap_depth()});
}

std::string NameTerm::to_string() const {
  switch (kind_) {
    case Kind::kIdentity:
      return vertex_.id;
    case Kind::kPermVar:
      return "(app " + perm_ + " " + vertex_.id + ")";
    case Kind::kSwap:
      return "(app (swap " + swap_left().to_string() + " " + swap_right().to_string() + ") " +
             target().to_string() + ")";
  }
  return {};
}

bool operator==(const NameTerm& a, const NameTerm& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case NameTerm::Kind::kIdentity:
      return a.vertex_ == b.vertex_;
    case NameTerm::Kind::kPermVar:
      return a.perm_ == b.perm_ && a.vertex_ == b.vertex_;
    case NameTerm::Kind::kSwap:
      return a.swap_left() == b.swap_left() && a.swap_right() == b.swap_right() &&
             a.target() == b.target();
  }
  return false;
}

std::string EUConstraint::to_string() const {
  return std::string(kind == Kind::kEq ? "(eq " : "(fresh ") + lhs.to_string() + " " +
         rhs.to_string() + ")";
}

Signature eu_signature() {
  Signature sig;
  sig.add_name_sort(kEUSort);
  return sig;
}

Name eu_name(const EUProblem& s, const std::string& name) {
  auto it = std::find(s.names.begin(), s.names.end(), name);
  if (it == s.names.end()) {
    throw Error(ErrorKind::kUndeclaredSymbol, "name '" + name + "' is not declared");
  }
  return Name{kEUSort, static_cast<std::size_t>(it - s.names.begin())};
}

namespace {

bool declared(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

void validate_vertex(const EUProblem& s, const Vertex& v) {
  const auto& pool = v.kind == Vertex::Kind::kName ? s.names : s.name_vars;
  if (!declared(pool, v.id)) {
    throw Error(ErrorKind::kUndeclaredSymbol, std::string(v.kind == Vertex::Kind::kName
                                                              ? "name '"
                                                              : "name variable '") +
                                                  v.id + "' is not declared");
  }
}

void validate_term(const EUProblem& s, const NameTerm& a) {
  switch (a.kind()) {
    case NameTerm::Kind::kIdentity:
      validate_vertex(s, a.vertex());
      return;
    case NameTerm::Kind::kPermVar:
      if (!declared(s.perm_vars, a.perm_var())) {
        throw Error(ErrorKind::kUndeclaredSymbol,
                    "permutation variable '" + a.perm_var() + "' is not declared");
      }
      validate_vertex(s, a.vertex());
      return;
    case NameTerm::Kind::kSwap:
      validate_term(s, a.swap_left());
      validate_term(s, a.swap_right());
      validate_term(s, a.target());
      return;
  }
}

Name vertex_value(const EUProblem& s, const EUValuation& theta, const Vertex& v) {
  if (v.kind == Vertex::Kind::kName) return eu_name(s, v.id);
  auto it = theta.name_vars.find(v.id);
  if (it == theta.name_vars.end()) {
    throw Error(ErrorKind::kUndeclaredSymbol, "no value for name variable '" + v.id + "'");
  }
  return it->second;
}

std::vector<Vertex> vertices(const EUProblem& s) {
  std::vector<Vertex> out;
  for (const std::string& n : s.names) out.push_back({Vertex::Kind::kName, n});
  for (const std::string& a : s.name_vars) out.push_back({Vertex::Kind::kNameVar, a});
  return out;
}

}  // namespace

void eu_validate(const EUProblem& s) {
  std::set<std::string> seen;
  for (const auto* pool : {&s.names, &s.name_vars, &s.perm_vars}) {
    for (const std::string& x : *pool) {
      if (!seen.insert(x).second) {
        throw Error(ErrorKind::kValidationError, "symbol '" + x + "' is declared twice");
      }
    }
  }
  for (const EUConstraint& c : s.constraints) {
    validate_term(s, c.lhs);
    validate_term(s, c.rhs);
  }
}

Name eu_eval(const EUProblem& s, const EUValuation& theta, const NameTerm& a) {
  switch (a.kind()) {
    case NameTerm::Kind::kIdentity:
      return vertex_value(s, theta, a.vertex());
    case NameTerm::Kind::kPermVar: {
      auto it = theta.perms.find(a.perm_var());
      if (it == theta.perms.end()) {
        throw Error(ErrorKind::kUndeclaredSymbol,
                    "no value for permutation variable '" + a.perm_var() + "'");
      }
      return it->second.apply(vertex_value(s, theta, a.vertex()));
    }
    case NameTerm::Kind::kSwap:
      return Permutation::swap(eu_eval(s, theta, a.swap_left()), eu_eval(s, theta, a.swap_right()))
          .apply(eu_eval(s, theta, a.target()));
  }
  return {};
}

bool eu_satisfies(const EUProblem& s, const EUValuation& theta, const EUConstraint& c) {
  const bool same = eu_eval(s, theta, c.lhs) == eu_eval(s, theta, c.rhs);
  return c.kind == EUConstraint::Kind::kEq ? same : !same;
}

bool eu_satisfies(const EUProblem& s, const EUValuation& theta) {
  return std::all_of(s.constraints.begin(), s.constraints.end(),
                     [&](const EUConstraint& c) { return eu_satisfies(s, theta, c); });
}

// ---------------------------------------------------------------------------
// Oracle
//
// Only the values of name variables and the images of each permutation
// variable on those values and on the concrete names are observable.  Names
// outside the concrete ones are interchangeable, so they are introduced in
// order (restricted growth), which makes the search exhaustive.

namespace {

class EUSearch {
 public:
  explicit EUSearch(const EUProblem& s) : s_(s), concrete_(s.names.size()) {}

  std::optional<EUValuation> run() {
    EUValuation theta;
    if (assign_name_vars(0, concrete_, theta)) return theta;
    return std::nullopt;
  }

 private:
  bool assign_name_vars(std::size_t i, std::size_t used, EUValuation& theta) {
    if (i == s_.name_vars.size()) {
      std::set<Name> domain;
      for (std::size_t n = 0; n < concrete_; ++n) domain.insert(Name{kEUSort, n});
      for (const auto& [a, n] : theta.name_vars) domain.insert(n);
      domain_.assign(domain.begin(), domain.end());
      return assign_perms(0, used, theta);
    }
    for (std::size_t n = 0; n <= used; ++n) {
      theta.name_vars[s_.name_vars[i]] = Name{kEUSort, n};
      if (assign_name_vars(i + 1, n == used ? used + 1 : used, theta)) return true;
    }
    theta.name_vars.erase(s_.name_vars[i]);
    return false;
  }

  bool assign_perms(std::size_t q, std::size_t used, EUValuation& theta) {
    if (q == s_.perm_vars.size()) return eu_satisfies(s_, theta);
    std::vector<Name> images;
    return assign_images(q, 0, used, images, theta);
  }

  // Chooses an injective image for each domain element of permutation q.
  bool assign_images(std::size_t q, std::size_t i, std::size_t used, std::vector<Name>& images,
                     EUValuation& theta) {
    if (i == domain_.size()) {
      theta.perms[s_.perm_vars[q]] = extend(images);
      return assign_perms(q + 1, used, theta);
    }
    for (std::size_t n = 0; n <= used; ++n) {
      Name image{kEUSort, n};
      if (std::find(images.begin(), images.end(), image) != images.end()) continue;
      images.push_back(image);
      if (assign_images(q, i + 1, n == used ? used + 1 : used, images, theta)) return true;
      images.pop_back();
    }
    return false;
  }

  // A finite permutation agreeing with domain_[i] -> images[i].
  Permutation extend(const std::vector<Name>& images) const {
    Permutation sigma;
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      Name cur = sigma.apply(domain_[i]);
      if (cur != images[i]) sigma = Permutation::swap(cur, images[i]).compose(sigma);
    }
    return sigma;
  }

  const EUProblem& s_;
  std::size_t concrete_;
  std::vector<Name> domain_;
};

}  // namespace

EUOracleResult eu_brute_sat(const EUProblem& s, std::size_t max_vertices) {
  eu_validate(s);
  if (s.names.size() + s.name_vars.size() > max_vertices) {
    throw Error(ErrorKind::kPoolTooLarge, "EU oracle limited to " + std::to_string(max_vertices) +
                                              " names and name variables");
  }
  EUOracleResult out;
  if (auto theta = EUSearch(s).run()) {
    out.sat = true;
    out.witness = std::move(theta);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Encoding

AtomicConstraint mk_swapcon(const Var& x, const Var& y, const Var& u, const Var& w) {
  return AtomicConstraint::eq(Term::abs(x, Term::abs(y, Term::var(w))),
                              Term::abs(y, Term::abs(x, Term::var(u))));
}

AtomicConstraint mk_bijcon(const Var& x, const Var& y, const Var& x2, const Var& y2) {
  return AtomicConstraint::eq(
      Term::abs(x, Term::abs(y, Term::tuple({Term::var(x), Term::var(y)}))),
      Term::abs(x2, Term::abs(y2, Term::tuple({Term::var(x2), Term::var(y2)}))));
}

namespace {

class Translator {
 public:
  explicit Translator(const EUProblem& s) : s_(s) {}

  EUTranslation run() {
    const Type n = Type::name(kEUSort);
    for (const Vertex& v : vertices(s_)) {
      reg_.vertex_vars.emplace(v.id, fresh_var((v.kind == Vertex::Kind::kName ? "name." : "nvar.") + v.id));
    }
    for (const std::string& q : s_.perm_vars) {
      for (const Vertex& v : vertices(s_)) {
        reg_.perm_vertex_vars.emplace(std::make_pair(q, v.id), fresh_var("perm." + q + "." + v.id));
      }
    }

    for (const EUConstraint& c : s_.constraints) {
      Var a = term(c.lhs);
      Var b = term(c.rhs);
      out_.push_back(c.kind == EUConstraint::Kind::kEq ? AtomicConstraint::eq(Term::var(a), Term::var(b))
                                                       : AtomicConstraint::fresh(a, Term::var(b)));
    }
    for (std::size_t i = 0; i < s_.names.size(); ++i) {
      for (std::size_t j = i + 1; j < s_.names.size(); ++j) {
        out_.push_back(AtomicConstraint::fresh(reg_.vvar(s_.names[i]), Term::var(reg_.vvar(s_.names[j]))));
      }
    }
    const std::vector<Vertex> vs = vertices(s_);
    for (const std::string& q : s_.perm_vars) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          out_.push_back(mk_bijcon(reg_.vvar(vs[i].id), reg_.vvar(vs[j].id),
                                   reg_.pvvar(q, vs[i].id), reg_.pvvar(q, vs[j].id)));
        }
      }
    }

    EUTranslation result;
    for (const Var& x : used_) result.problem.env.emplace(x, n);
    result.problem.constraints = std::move(out_);
    result.registry = std::move(reg_);
    return result;
  }

 private:
  Var fresh_var(const std::string& id) {
    Var x(id);
    if (!used_.insert(x).second) {
      throw Error(ErrorKind::kValidationError, "translated variable '" + id + "' is ambiguous");
    }
    return x;
  }

  Var term(const NameTerm& a) {
    switch (a.kind()) {
      case NameTerm::Kind::kIdentity:
        return reg_.vvar(a.vertex().id);
      case NameTerm::Kind::kPermVar:
        return reg_.pvvar(a.perm_var(), a.vertex().id);
      case NameTerm::Kind::kSwap: {
        Var x = term(a.swap_left());
        Var y = term(a.swap_right());
        Var w = term(a.target());
        Var z;
        do {
          z = Var("tmp." + std::to_string(next_temp_++));
        } while (used_.count(z) != 0);
        used_.insert(z);
        reg_.temporaries.emplace_back(z, a);
        out_.push_back(mk_swapcon(x, y, z, w));
        return z;
      }
    }
    return {};
  }

  const EUProblem& s_;
  VarRegistry reg_;
  std::set<Var> used_;
  std::vector<AtomicConstraint> out_;
  std::size_t next_temp_ = 0;
};

}  // namespace

EUTranslation translate_problem(const EUProblem& s) {
  eu_validate(s);
  return Translator(s).run();
}

Valuation translate_valuation(const EUProblem& s, const VarRegistry& reg, const EUValuation& theta) {
  Valuation v;
  for (const Vertex& vx : vertices(s)) {
    v.emplace(reg.vvar(vx.id), AlphaTree::free(vertex_value(s, theta, vx)));
  }
  for (const std::string& q : s.perm_vars) {
    auto it = theta.perms.find(q);
    if (it == theta.perms.end()) {
      throw Error(ErrorKind::kUndeclaredSymbol, "no value for permutation variable '" + q + "'");
    }
    for (const Vertex& vx : vertices(s)) {
      v.emplace(reg.pvvar(q, vx.id), AlphaTree::free(it->second.apply(vertex_value(s, theta, vx))));
    }
  }
  return v;
}

Valuation extend_temporaries(const EUProblem& s, const VarRegistry& reg, const EUValuation& theta,
                             Valuation v) {
  for (const auto& [z, a] : reg.temporaries) v.insert_or_assign(z, AlphaTree::free(eu_eval(s, theta, a)));
  return v;
}

}  // namespace npnas
