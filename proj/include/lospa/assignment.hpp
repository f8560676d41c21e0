#pragma once

#include "lospa/constants.hpp"
#include "lospa/types.hpp"

namespace labelled_ospa {

/// Optimal pairing of rows to columns. `total_cost` is CostMatrix::total(perm).
struct AssignmentSolution {
    Permutation perm;
    double total_cost = 0.0;
};

/// Exhaustive minimum over all t! permutations, visited in lexicographic order;
/// ties resolve to the lexicographically smallest permutation.
/// Throws CapExceeded when t > `cap`.
[[nodiscard]] AssignmentSolution solve_brute_force(const CostMatrix& cost,
                                                   std::size_t cap = kDefaultBruteForceCap);

/// Shortest augmenting path (Hungarian with row/column potentials), O(t^3).
/// Which optimum is returned among ties is unspecified.
[[nodiscard]] AssignmentSolution solve_optimal(const CostMatrix& cost);

} // namespace labelled_ospa
