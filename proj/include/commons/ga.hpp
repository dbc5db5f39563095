#ifndef COMMONS_GA_HPP
#define COMMONS_GA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "commons/knapsack.hpp"
#include "commons/rng.hpp"

namespace commons {

/// Per-agent search knobs. The next population is rebuilt from scratch every
/// generation, so offspring_per_generation must equal population_size.
struct GaParams {
  int population_size = 45;
  int candidate_capacity = 45;
  double mutation_rate = 0.05;
  int offspring_per_generation = 45;
  int max_init_retries = 1000;

  void validate() const;  // throws std::invalid_argument
  bool operator==(const GaParams&) const = default;
};

/// One agent's search state. A value type: stepping it is a pure transition,
/// and the private rng stream makes agents independent of each other.
struct AgentState {
  int agent_id = 0;  // 1-based
  std::vector<BitSolution> population;
  BitSolution best_so_far;
  double best_value = 0.0;
  long generations_run = 0;
  long stalled_generations = 0;
  bool committed = false;
  Rng rng{0};
};

/// Feasible subset of a population, order preserved, truncated to
/// max_candidates entries.
std::vector<BitSolution> filter_feasible(const KnapsackInstance& instance,
                                         const std::vector<BitSolution>& population,
                                         std::size_t max_candidates);

/// Uniform random population plus its feasible candidates; the population is
/// regenerated while fewer than two candidates exist, up to
/// params.max_init_retries regenerations.
///
/// Throws std::runtime_error when the retry budget is exhausted (the instance
/// is pathologically tight).
std::pair<std::vector<BitSolution>, std::vector<BitSolution>> init_population(
    const KnapsackInstance& instance, const GaParams& params, Rng& rng);

/// Fresh agent whose stream is derived from (master_seed, agent_id) and whose
/// best-so-far is the most valuable initial candidate.
AgentState init_agent(const KnapsackInstance& instance, const GaParams& params, int agent_id,
                      std::uint64_t master_seed);

/// First ceil(M/2) bits from m, the rest from n.
BitSolution crossover(const BitSolution& m, const BitSolution& n);

/// Independently toggles each bit with probability mutation_rate.
BitSolution mutate(BitSolution child, double mutation_rate, Rng& rng);

/// One generation: filter candidates (regenerating a degenerate population),
/// breed the next population from random distinct candidate pairs, take any
/// strictly better feasible candidate as the new best, bump the counters.
AgentState agent_generation_step(AgentState state, const KnapsackInstance& instance,
                                 const GaParams& params);

}  // namespace commons

#endif  // COMMONS_GA_HPP
