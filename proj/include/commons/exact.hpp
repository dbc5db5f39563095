#ifndef COMMONS_EXACT_HPP
#define COMMONS_EXACT_HPP

#include "commons/knapsack.hpp"

namespace commons {

struct OptimalResult {
  BitSolution solution;
  double value = 0.0;
  double weight = 0.0;
};

/// Exact optimum by dynamic programming over integer weights.
///
/// Requires every weight to be integral; the table is indexed by the largest
/// integer weight strictly below the capacity, which keeps the strict
/// constraint exact. Ties are broken toward lower total weight, then the
/// lexicographically smallest bit vector, so the result is deterministic and
/// comparable with solve_brute_force.
OptimalResult solve_dp(const KnapsackInstance& instance);

/// Exact optimum by enumerating all 2^M selections. Same tie-break as
/// solve_dp. Refuses instances with more than 25 items.
OptimalResult solve_brute_force(const KnapsackInstance& instance);

}  // namespace commons

#endif  // COMMONS_EXACT_HPP
