#include "npnas/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "npnas/error.hpp"

namespace npnas {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < text_.size()) {
      out.push_back(one());
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw Error(ErrorKind::kSyntaxError,
                std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr one() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    char c = text_[pos_];
    if (c == ')') fail(line_, col_, "unexpected ')'");
    if (c == '(') {
      e.is_atom = false;
      advance();
      skip();
      while (true) {
        if (pos_ >= text_.size()) fail(e.line, e.column, "unclosed '('");
        if (text_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(one());
        skip();
      }
    }
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
      e.atom.push_back(c);
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void bad(const SExpr& e, const std::string& msg) {
  throw Error(ErrorKind::kSyntaxError, e.where() + ": " + msg);
}

[[noreturn]] void invalid(const SExpr& e, const std::string& msg) {
  throw Error(ErrorKind::kValidationError, e.where() + ": " + msg);
}

bool is_list_headed(const SExpr& e, std::string_view head) {
  return !e.is_atom && !e.items.empty() && e.items[0].is_atom && e.items[0].atom == head;
}

const std::string& symbol(const SExpr& e, const std::string& what) {
  if (!e.is_atom) bad(e, "expected " + what);
  return e.atom;
}

Type parse_type(const SExpr& e) {
  if (e.is_atom) {
    if (e.atom == "unit") return Type::unit();
    bad(e, "expected a type, got '" + e.atom + "'");
  }
  if (e.items.empty() || !e.items[0].is_atom) bad(e, "expected a type");
  const std::string& head = e.items[0].atom;
  if ((head == "name" || head == "data") && e.items.size() == 2) {
    const std::string& s = symbol(e.items[1], "a sort");
    return head == "name" ? Type::name(s) : Type::data(s);
  }
  if (head == "abs" && e.items.size() == 3) {
    const SExpr& b = e.items[1];
    if (!is_list_headed(b, "name") || b.items.size() != 2) bad(b, "expected (name SORT)");
    return Type::abs(symbol(b.items[1], "a sort"), parse_type(e.items[2]));
  }
  if (head == "pair" && e.items.size() >= 3) {
    std::vector<Type> items;
    for (std::size_t i = 1; i < e.items.size(); ++i) items.push_back(parse_type(e.items[i]));
    return Type::tuple(std::move(items));
  }
  bad(e, "malformed type");
}

Term parse_term(const SExpr& e) {
  if (e.is_atom) {
    if (e.atom == "unit") return Term::unit();
    return Term::var(Var(e.atom));
  }
  if (e.items.empty() || !e.items[0].is_atom) bad(e, "expected a term");
  const std::string& head = e.items[0].atom;
  if (head == "abs" && e.items.size() == 3) {
    return Term::abs(Var(symbol(e.items[1], "a binder variable")), parse_term(e.items[2]));
  }
  if (head == "con" && e.items.size() == 3) {
    return Term::app(symbol(e.items[1], "a constructor"), parse_term(e.items[2]));
  }
  if (head == "tuple" && e.items.size() >= 3) {
    std::vector<Term> items;
    for (std::size_t i = 1; i < e.items.size(); ++i) items.push_back(parse_term(e.items[i]));
    return Term::tuple(std::move(items));
  }
  bad(e, "malformed term");
}

AtomicConstraint parse_constraint(const SExpr& e) {
  if (is_list_headed(e, "eq") && e.items.size() == 3) {
    return AtomicConstraint::eq(parse_term(e.items[1]), parse_term(e.items[2]));
  }
  if (is_list_headed(e, "fresh") && e.items.size() == 3) {
    return AtomicConstraint::fresh(Var(symbol(e.items[1], "a variable")), parse_term(e.items[2]));
  }
  bad(e, "expected (eq TERM TERM) or (fresh VAR TERM)");
}

// Rethrows a core error as a validation error at a source position.
template <typename F>
void validated(const SExpr& at, F&& f) {
  try {
    f();
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::kSyntaxError || err.kind() == ErrorKind::kValidationError) throw;
    invalid(at, err.what());
  }
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

ProblemDocument parse_problem(std::string_view text) {
  std::vector<SExpr> top = read_sexprs(text);
  ProblemDocument doc;
  const SExpr* sig_e = nullptr;
  const SExpr* vars_e = nullptr;
  const SExpr* cons_e = nullptr;
  for (const SExpr& e : top) {
    const SExpr** slot = is_list_headed(e, "signature")     ? &sig_e
                         : is_list_headed(e, "vars")        ? &vars_e
                         : is_list_headed(e, "constraints") ? &cons_e
                                                            : nullptr;
    if (slot == nullptr) bad(e, "expected (signature ...), (vars ...) or (constraints ...)");
    if (*slot != nullptr) bad(e, "section given twice");
    *slot = &e;
  }
  if (sig_e == nullptr) throw Error(ErrorKind::kSyntaxError, "1:1: missing (signature ...)");

  for (std::size_t i = 1; i < sig_e->items.size(); ++i) {
    const SExpr& d = sig_e->items[i];
    if ((is_list_headed(d, "name-sort") || is_list_headed(d, "data-sort")) && d.items.size() == 2) {
      const std::string& s = symbol(d.items[1], "a sort");
      if (d.items[0].atom == "name-sort") {
        doc.signature.add_name_sort(s);
      } else {
        doc.signature.add_data_sort(s);
      }
    } else if (is_list_headed(d, "con") && d.items.size() == 4) {
      const std::string& name = symbol(d.items[1], "a constructor");
      Type arg = parse_type(d.items[2]);
      const std::string& result = symbol(d.items[3], "a result sort");
      validated(d, [&] { doc.signature.add_constructor(name, arg, result); });
    } else {
      bad(d, "expected (name-sort S), (data-sort S) or (con K TYPE S)");
    }
  }
  validated(*sig_e, [&] { doc.signature.validate(); });

  if (vars_e != nullptr) {
    for (std::size_t i = 1; i < vars_e->items.size(); ++i) {
      const SExpr& d = vars_e->items[i];
      if (d.is_atom || d.items.size() != 2) bad(d, "expected (VAR TYPE)");
      Var x(symbol(d.items[0], "a variable"));
      Type t = parse_type(d.items[1]);
      if (!doc.signature.is_well_formed(t)) {
        invalid(d, "type " + t.to_string() + " mentions an undeclared sort");
      }
      if (!doc.problem.env.emplace(x, t).second) invalid(d, "variable '" + x.str() + "' declared twice");
    }
  }
  if (cons_e != nullptr) {
    for (std::size_t i = 1; i < cons_e->items.size(); ++i) {
      const SExpr& d = cons_e->items[i];
      AtomicConstraint c = parse_constraint(d);
      validated(d, [&] { typecheck(doc.signature, doc.problem.env, c); });
      doc.problem.constraints.push_back(std::move(c));
    }
  }
  return doc;
}

std::string print_type(const Type& t) { return t.to_string(); }
std::string print_term(const Term& t) { return t.to_string(); }
std::string print_constraint(const AtomicConstraint& c) { return c.to_string(); }

std::string print_problem(const Signature& sig, const Problem& p) {
  std::string out = "(signature";
  for (const SortId& s : sig.name_sorts()) out += "\n  (name-sort " + s + ")";
  for (const SortId& s : sig.data_sorts()) out += "\n  (data-sort " + s + ")";
  for (const ConstructorDecl& c : sig.constructors()) {
    out += "\n  (con " + c.name + " " + c.arg.to_string() + " " + c.result + ")";
  }
  out += ")\n(vars";
  for (const auto& [x, t] : p.env) out += "\n  (" + x.str() + " " + t.to_string() + ")";
  out += ")\n(constraints";
  for (const AtomicConstraint& c : p.constraints) out += "\n  " + c.to_string();
  return out + ")\n";
}

// ---------------------------------------------------------------------------
// EU documents

namespace {

std::vector<std::string> symbol_list(const SExpr& e) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < e.items.size(); ++i) out.push_back(symbol(e.items[i], "a symbol"));
  return out;
}

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

Vertex parse_vertex(const EUProblem& s, const SExpr& e) {
  const std::string& id = symbol(e, "a name or name variable");
  if (contains(s.names, id)) return {Vertex::Kind::kName, id};
  if (contains(s.name_vars, id)) return {Vertex::Kind::kNameVar, id};
  invalid(e, "'" + id + "' is not a declared name or name variable");
}

NameTerm parse_name_term(const EUProblem& s, const SExpr& e) {
  if (e.is_atom) return NameTerm::identity(parse_vertex(s, e));
  if (!is_list_headed(e, "app") || e.items.size() != 3) bad(e, "expected SYM or (app PERM NT)");
  const SExpr& perm = e.items[1];
  if (perm.is_atom) {
    if (perm.atom == "id") return NameTerm::identity(parse_vertex(s, e.items[2]));
    if (!contains(s.perm_vars, perm.atom)) {
      invalid(perm, "'" + perm.atom + "' is not a declared permutation variable");
    }
    return NameTerm::perm(perm.atom, parse_vertex(s, e.items[2]));
  }
  if (is_list_headed(perm, "swap") && perm.items.size() == 3) {
    return NameTerm::swap(parse_name_term(s, perm.items[1]), parse_name_term(s, perm.items[2]),
                          parse_name_term(s, e.items[2]));
  }
  if (is_list_headed(perm, "inv") || is_list_headed(perm, "comp")) {
    invalid(perm, "permutation inverses and compositions must be expanded away first");
  }
  bad(perm, "expected id, a permutation variable or (swap NT NT)");
}

}  // namespace

EUProblem parse_eu(std::string_view text) {
  std::vector<SExpr> top = read_sexprs(text);
  if (top.size() != 1 || !is_list_headed(top[0], "eu")) {
    throw Error(ErrorKind::kSyntaxError, "1:1: expected a single (eu ...) form");
  }
  EUProblem s;
  const SExpr* cons = nullptr;
  for (std::size_t i = 1; i < top[0].items.size(); ++i) {
    const SExpr& sec = top[0].items[i];
    if (is_list_headed(sec, "names")) {
      s.names = symbol_list(sec);
    } else if (is_list_headed(sec, "name-vars")) {
      s.name_vars = symbol_list(sec);
    } else if (is_list_headed(sec, "perm-vars")) {
      s.perm_vars = symbol_list(sec);
    } else if (is_list_headed(sec, "constraints")) {
      cons = &sec;
    } else {
      bad(sec, "expected names, name-vars, perm-vars or constraints");
    }
  }
  if (cons != nullptr) {
    for (std::size_t i = 1; i < cons->items.size(); ++i) {
      const SExpr& d = cons->items[i];
      const bool eq = is_list_headed(d, "eq");
      if (!(eq || is_list_headed(d, "fresh")) || d.items.size() != 3) {
        bad(d, "expected (eq NT NT) or (fresh NT NT)");
      }
      s.constraints.push_back({eq ? EUConstraint::Kind::kEq : EUConstraint::Kind::kFresh,
                               parse_name_term(s, d.items[1]), parse_name_term(s, d.items[2])});
    }
  }
  validated(top[0], [&] { eu_validate(s); });
  return s;
}

std::string print_eu(const EUProblem& s) {
  auto list = [](const char* head, const std::vector<std::string>& xs) {
    std::string out = std::string("\n  (") + head;
    for (const std::string& x : xs) out += " " + x;
    return out + ")";
  };
  std::string out = "(eu" + list("names", s.names) + list("name-vars", s.name_vars) +
                    list("perm-vars", s.perm_vars) + "\n  (constraints";
  for (const EUConstraint& c : s.constraints) out += "\n    " + c.to_string();
  return out + "))\n";
}

std::string print_valuation(const Valuation& v) {
  std::string out;
  for (const auto& [x, a] : v) out += x.str() + " = " + representative(a).to_string() + "\n";
  return out;
}

}  // namespace npnas
