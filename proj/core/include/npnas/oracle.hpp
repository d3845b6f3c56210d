#pragma once

// Brute-force satisfiability by bounded enumeration of alpha-trees.

#include <cstddef>
#include <optional>
#include <vector>

#include "npnas/kernel.hpp"
#include "npnas/schematic.hpp"

namespace npnas {

struct EnumBounds {
  std::size_t max_tree_size = 7;
  // Free names are n0 .. n{pool-1} at every name sort.
  std::size_t pool = 3;
};

// Every alpha-class of the given type within the bounds, each exactly once,
// smallest first.
std::vector<AlphaTree> enumerate_atrees(const Signature& sig, const Type& type,
                                        const EnumBounds& bounds);

struct OracleResult {
  bool sat = false;
  std::optional<Valuation> witness;
  // True when an unsat answer is a proof: every variable has a name sort and
  // the pool is at least as large as the number of variables of each sort.
  bool exact = false;
};

// Throws Error(kSearchSpaceTooLarge) when the product of candidate counts
// exceeds `max_assignments`.
OracleResult brute_sat(const Signature& sig, const Problem& p, const EnumBounds& bounds = {},
                       double max_assignments = 1e7);

}  // namespace npnas
