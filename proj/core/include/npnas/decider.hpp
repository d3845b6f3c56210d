#pragma once

// Solved/terminal classification, normal-form search and witnesses.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "npnas/kernel.hpp"
#include "npnas/rewrite.hpp"
#include "npnas/schematic.hpp"

namespace npnas {

enum class ConstraintClass {
  kSolved1,
  kSolved2,
  kSolved3,
  kSolved4,
  kClash5,
  kClash6,
  kClash7,
  kClash8,
  kReducible,
};

std::string_view to_string(ConstraintClass c);
bool is_solved_class(ConstraintClass c);
bool is_clash_class(ConstraintClass c);

// Solved shapes take precedence: an equation Eq(x, t) or Eq(t, x) with x
// occurring exactly once and not in t is Solved2 even when E6 could still
// eliminate the variable on the other side.
ConstraintClass classify(const Problem& p, std::size_t index);
bool is_solved(const Problem& p);
bool is_terminal(const Signature& sig, const Problem& p);

// Focused rewrites only the first reducible constraint; full tries every
// selection of every constraint.  Both visit each distinct problem once.
enum class Strategy { kFocused, kFull };

struct SolveOptions {
  Strategy strategy = Strategy::kFocused;
  std::optional<std::size_t> node_budget;
  bool witness = true;
  std::function<void(const Problem&, const Selection&, std::size_t depth)> trace;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t normal_forms = 0;
};

struct Verdict {
  enum class Status { kSat, kUnsat, kBudgetExceeded };
  enum class Reason { kNone, kFoReduction, kExhaustedNormalForms };

  Status status = Status::kUnsat;
  Reason reason = Reason::kNone;
  std::optional<Valuation> witness;
  std::optional<Problem> solved_form;
  SearchStats stats;
};

std::string_view to_string(Verdict::Status s);
std::string_view to_string(Verdict::Reason r);

// Throws Error(kIllFormedProblem) if p does not typecheck.
Verdict decide(const Signature& sig, const Problem& p, const SolveOptions& opts = {});

// Throws Error(kNotSolved).
Valuation extract_witness(const Signature& sig, const Problem& solved);

}  // namespace npnas
