#pragma once

// Name-name equivariant unification and its encoding into constraint
// problems over a single name sort.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "npnas/kernel.hpp"
#include "npnas/schematic.hpp"

namespace npnas {

struct Vertex {
  enum class Kind { kName, kNameVar };
  Kind kind = Kind::kName;
  std::string id;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Pi . v with Pi the identity, a permutation variable, or a swap of two
// name-terms.  A swap may act on any name-term, not just a vertex.
class NameTerm {
 public:
  enum class Kind { kIdentity, kPermVar, kSwap };

  NameTerm() = default;
  static NameTerm identity(Vertex v);
  static NameTerm perm(std::string q, Vertex v);
  static NameTerm swap(NameTerm a, NameTerm b, NameTerm target);

  Kind kind() const { return kind_; }
  const Vertex& vertex() const { return vertex_; }
  const std::string& perm_var() const { return perm_; }
  const NameTerm& swap_left() const { return parts_->at(0); }
  const NameTerm& swap_right() const { return parts_->at(1); }
  const NameTerm& target() const { return parts_->at(2); }

  std::size_t swap_depth() const;
  std::string to_string() const;

  friend bool operator==(const NameTerm& a, const NameTerm& b);

 private:
  Kind kind_ = Kind::kIdentity;
  Vertex vertex_;
  std::string perm_;
  std::shared_ptr<const std::vector<NameTerm>> parts_;
};

struct EUConstraint {
  enum class Kind { kEq, kFresh };
  Kind kind = Kind::kEq;
  NameTerm lhs;
  NameTerm rhs;

  std::string to_string() const;
  friend bool operator==(const EUConstraint&, const EUConstraint&) = default;
};

struct EUProblem {
  std::vector<std::string> names;
  std::vector<std::string> name_vars;
  std::vector<std::string> perm_vars;
  std::vector<EUConstraint> constraints;

  friend bool operator==(const EUProblem&, const EUProblem&) = default;
};

struct EUValuation {
  std::map<std::string, Name> name_vars;
  std::map<std::string, Permutation> perms;
};

// The single name sort of the encoding.
inline const SortId kEUSort = "N";
Signature eu_signature();

// Concrete name i of the problem is n{i}@N.
Name eu_name(const EUProblem& s, const std::string& name);

// Throws Error(kUndeclaredSymbol).
void eu_validate(const EUProblem& s);
Name eu_eval(const EUProblem& s, const EUValuation& theta, const NameTerm& a);
bool eu_satisfies(const EUProblem& s, const EUValuation& theta, const EUConstraint& c);
bool eu_satisfies(const EUProblem& s, const EUValuation& theta);

struct EUOracleResult {
  bool sat = false;
  std::optional<EUValuation> witness;
};

// Exhaustive up to renaming of non-concrete names.  Throws Error(kPoolTooLarge)
// when |names| + |name_vars| exceeds `max_vertices`.
EUOracleResult eu_brute_sat(const EUProblem& s, std::size_t max_vertices = 6);

AtomicConstraint mk_swapcon(const Var& x, const Var& y, const Var& u, const Var& w);
AtomicConstraint mk_bijcon(const Var& x, const Var& y, const Var& x2, const Var& y2);

struct VarRegistry {
  std::map<std::string, Var> vertex_vars;                            // vvar(v)
  std::map<std::pair<std::string, std::string>, Var> perm_vertex_vars;  // pvvar(Q, v)
  std::vector<std::pair<Var, NameTerm>> temporaries;                 // z and the swap term it names

  const Var& vvar(const std::string& v) const { return vertex_vars.at(v); }
  const Var& pvvar(const std::string& q, const std::string& v) const {
    return perm_vertex_vars.at({q, v});
  }
};

struct EUTranslation {
  Problem problem;
  VarRegistry registry;
};

// Throws Error(kUndeclaredSymbol), or kValidationError on a variable-name clash.
EUTranslation translate_problem(const EUProblem& s);
// Temporaries are excluded.
Valuation translate_valuation(const EUProblem& s, const VarRegistry& reg, const EUValuation& theta);
// Adds each temporary's value: the evaluation of the swap term it stands for.
Valuation extend_temporaries(const EUProblem& s, const VarRegistry& reg, const EUValuation& theta,
                             Valuation v);

}  // namespace npnas
