#include "commons/ga.hpp"

#include <limits>
#include <string>
#include <stdexcept>

namespace commons {

namespace {

std::vector<BitSolution> random_population(const KnapsackInstance& instance, const GaParams& params,
                                           Rng& rng) {
  std::vector<BitSolution> population;
  population.reserve(static_cast<std::size_t>(params.population_size));
  for (int p = 0; p < params.population_size; ++p) {
    BitSolution s(instance.item_count);
    for (auto& bit : s.bits) bit = rng.next_bit() ? 1 : 0;
    population.push_back(std::move(s));
  }
  return population;
}

std::string retry_error_message(const GaParams& params) {
  return "population initialization failed: fewer than two feasible candidates after " +
         std::to_string(params.max_init_retries) + " regenerations";
}

// Regenerates `population` until it yields at least two feasible candidates.
std::vector<BitSolution> ensure_candidates(const KnapsackInstance& instance, const GaParams& params,
                                           Rng& rng, std::vector<BitSolution>& population) {
  auto candidates =
      filter_feasible(instance, population, static_cast<std::size_t>(params.candidate_capacity));
  int retries = 0;
  while (candidates.size() < 2) {
    if (retries >= params.max_init_retries) throw std::runtime_error(retry_error_message(params));
    ++retries;
    population = random_population(instance, params, rng);
    candidates =
        filter_feasible(instance, population, static_cast<std::size_t>(params.candidate_capacity));
  }
  return candidates;
}

}  // namespace

void GaParams::validate() const {
  if (population_size <= 0) throw std::invalid_argument("population_size must be positive");
  if (candidate_capacity <= 0) throw std::invalid_argument("candidate_capacity must be positive");
  if (mutation_rate < 0.0 || mutation_rate > 1.0)
    throw std::invalid_argument("mutation_rate must be in [0, 1]");
  if (offspring_per_generation != population_size)
    throw std::invalid_argument("offspring_per_generation must equal population_size");
  if (max_init_retries <= 0) throw std::invalid_argument("max_init_retries must be positive");
}

std::vector<BitSolution> filter_feasible(const KnapsackInstance& instance,
                                         const std::vector<BitSolution>& population,
                                         std::size_t max_candidates) {
  std::vector<BitSolution> candidates;
  for (const auto& s : population) {
    if (candidates.size() >= max_candidates) break;
    if (evaluate(instance, s).feasible) candidates.push_back(s);
  }
  return candidates;
}

std::pair<std::vector<BitSolution>, std::vector<BitSolution>> init_population(
    const KnapsackInstance& instance, const GaParams& params, Rng& rng) {
  params.validate();
  auto population = random_population(instance, params, rng);
  auto candidates = ensure_candidates(instance, params, rng, population);
  return {std::move(population), std::move(candidates)};
}

AgentState init_agent(const KnapsackInstance& instance, const GaParams& params, int agent_id,
                      std::uint64_t master_seed) {
  AgentState state;
  state.agent_id = agent_id;
  state.rng = Rng(stream_seed(master_seed, static_cast<std::uint64_t>(agent_id)));
  auto [population, candidates] = init_population(instance, params, state.rng);
  state.population = std::move(population);
  state.best_value = -std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    const double v = evaluate(instance, c).total_value;
    if (v > state.best_value) {
      state.best_value = v;
      state.best_so_far = c;
    }
  }
  return state;
}

BitSolution crossover(const BitSolution& m, const BitSolution& n) {
  if (m.size() != n.size()) throw std::invalid_argument("crossover: parent lengths differ");
  const std::size_t len = m.size();
  const std::size_t split = (len + 1) / 2;  // first ceil(M/2) positions from m
  BitSolution child(len);
  for (std::size_t i = 0; i < len; ++i) child.bits[i] = i < split ? m.bits[i] : n.bits[i];
  return child;
}

BitSolution mutate(BitSolution child, double mutation_rate, Rng& rng) {
  if (mutation_rate < 0.0 || mutation_rate > 1.0)
    throw std::invalid_argument("mutate: mutation_rate must be in [0, 1]");
  for (auto& bit : child.bits)
    if (rng.next_double() < mutation_rate) bit ^= 1;
  return child;
}

AgentState agent_generation_step(AgentState state, const KnapsackInstance& instance,
                                 const GaParams& params) {
  if (state.committed) throw std::logic_error("agent_generation_step: agent already committed");

  // Same filtering rule as filter_feasible, but by index and with the values
  // kept, so the population is evaluated exactly once per generation.
  struct Candidate {
    std::size_t index;
    double value;
  };
  const auto cap = static_cast<std::size_t>(params.candidate_capacity);
  std::vector<Candidate> candidates;
  candidates.reserve(cap);
  auto collect = [&](const std::vector<BitSolution>& population) {
    candidates.clear();
    for (std::size_t i = 0; i < population.size() && candidates.size() < cap; ++i) {
      const auto e = evaluate(instance, population[i]);
      if (e.feasible) candidates.push_back({i, e.total_value});
    }
  };
  collect(state.population);
  int retries = 0;
  while (candidates.size() < 2) {
    if (retries >= params.max_init_retries) throw std::runtime_error(retry_error_message(params));
    ++retries;
    state.population = random_population(instance, params, state.rng);
    collect(state.population);
  }

  std::vector<BitSolution> next_population;
  next_population.reserve(static_cast<std::size_t>(params.offspring_per_generation));
  for (int p = 0; p < params.offspring_per_generation; ++p) {
    const std::uint64_t a = state.rng.next_below(candidates.size());
    std::uint64_t b = state.rng.next_below(candidates.size() - 1);
    if (b >= a) ++b;  // two distinct parents
    next_population.push_back(mutate(crossover(state.population[candidates[a].index],
                                               state.population[candidates[b].index]),
                                     params.mutation_rate, state.rng));
  }

  bool improved = false;
  for (const auto& c : candidates) {
    if (c.value > state.best_value) {
      state.best_value = c.value;
      state.best_so_far = state.population[c.index];
      improved = true;
    }
  }

  state.population = std::move(next_population);
  state.generations_run += 1;
  state.stalled_generations = improved ? 0 : state.stalled_generations + 1;
  return state;
}

}  // namespace commons
