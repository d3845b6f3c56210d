#pragma once

// Random generators shared by the unit, property and acceptance tests.

#include <cstddef>
#include <random>
#include <vector>

#include "npnas/eubridge.hpp"
#include "npnas/kernel.hpp"
#include "npnas/schematic.hpp"

namespace npnas::testing {

using Rng = std::mt19937_64;

// N; D with V : N -> D, L : <N>D -> D, Z : unit -> D.
Signature lam_signature();
// lam_signature plus a second name sort M and P : (D x M) -> D.
Signature two_sort_signature();

// Names are drawn from n0..n{pool-1} of each sort.
GroundTree random_ground(Rng& rng, const Signature& sig, const Type& type, std::size_t depth,
                         std::size_t pool);
// A tree alpha-equivalent to g with freshly chosen binder names.
GroundTree rename_binders(Rng& rng, const GroundTree& g, std::size_t pool);
Permutation random_permutation(Rng& rng, const SortId& sort, std::size_t pool, std::size_t swaps);

struct ProblemShape {
  std::size_t max_vars = 4;
  std::size_t max_constraints = 3;
  std::size_t term_depth = 2;
  // Chance that a variable is data-sorted, in percent.
  unsigned data_percent = 40;
};

// Well-typed problem over lam_signature with at least one name variable.
Problem random_problem(Rng& rng, const Signature& sig, const ProblemShape& shape);
Term random_term(Rng& rng, const Signature& sig, const TypeEnv& env, const Type& type, std::size_t depth);

struct EUShape {
  std::size_t max_names = 2;
  std::size_t max_name_vars = 3;
  std::size_t max_perm_vars = 2;
  std::size_t max_constraints = 3;
  std::size_t max_swap_depth = 1;
};

EUProblem random_eu(Rng& rng, const EUShape& shape);

}  // namespace npnas::testing
