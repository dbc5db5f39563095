#include "commons/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "commons/rng.hpp"

namespace commons {

namespace {

constexpr std::uint64_t kPolicyStream = 0;  // agents use streams 1..N

struct AgentRuntime {
  AgentState state;
  SearchPolicy policy;
  std::optional<long> reached_at;
  std::optional<long> committed_at;
};

void note_reached(AgentRuntime& agent, double optimum_value, long tick) {
  if (!agent.reached_at && std::abs(agent.state.best_value - optimum_value) <= kValueTolerance)
    agent.reached_at = tick;
}

// One global tick for one agent: its generation step(s), optimum bookkeeping,
// and the satisficer commit check. Touches only this agent's state.
void advance_agent(AgentRuntime& agent, const KnapsackInstance& instance, const GaParams& ga,
                   double optimum_value, long tick) {
  if (agent.state.committed) return;
  const int steps = agent.policy.kind == PolicyKind::Fast ? agent.policy.steps_per_tick : 1;
  for (int s = 0; s < steps; ++s)
    agent.state = agent_generation_step(std::move(agent.state), instance, ga);
  note_reached(agent, optimum_value, tick);
  if (agent.policy.kind == PolicyKind::Satisficer &&
      agent.state.stalled_generations >= agent.policy.commit_after_stall) {
    agent.state.committed = true;
    agent.committed_at = tick;
  }
}

OptimalResult classify_optimum(const KnapsackInstance& instance) {
  for (double w : instance.weights)
    if (std::floor(w) != w) return solve_brute_force(instance);
  return solve_dp(instance);
}

}  // namespace

const char* policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Persistent: return "persistent";
    case PolicyKind::Satisficer: return "satisficer";
    case PolicyKind::Fast: return "fast";
  }
  return "unknown";
}

void ScenarioConfig::validate() const {
  if (scenario_id < 1 || scenario_id > 3)
    throw std::invalid_argument("unknown scenario id " + std::to_string(scenario_id));
  if (agent_count <= 0) throw std::invalid_argument("agent_count must be positive");
  if (generations <= 0) throw std::invalid_argument("generations must be positive");
  if (satisficer_fraction < 0.0 || satisficer_fraction > 1.0)
    throw std::invalid_argument("satisficer_fraction must be in [0, 1]");
  if (fast_fraction < 0.0 || fast_fraction > 1.0)
    throw std::invalid_argument("fast_fraction must be in [0, 1]");
  if (scenario_id == 2 && commit_after_stall <= 0)
    throw std::invalid_argument("commit_after_stall must be positive");
  if (scenario_id == 3 && steps_per_tick < 2)
    throw std::invalid_argument("steps_per_tick must be at least 2");
  ga.validate();
}

std::vector<std::pair<int, SearchPolicy>> build_scenario(const ScenarioConfig& config) {
  config.validate();
  Rng rng(stream_seed(config.master_seed, kPolicyStream));
  std::vector<std::pair<int, SearchPolicy>> assignment;
  assignment.reserve(static_cast<std::size_t>(config.agent_count));
  for (int id = 1; id <= config.agent_count; ++id) {
    SearchPolicy policy = SearchPolicy::persistent();
    switch (config.scenario_id) {
      case 1:
        break;
      case 2:
        if (rng.next_double() < config.satisficer_fraction)
          policy = SearchPolicy::satisficer(config.commit_after_stall);
        break;
      case 3:
        if (rng.next_double() < config.fast_fraction)
          policy = SearchPolicy::fast(config.steps_per_tick);
        break;
    }
    assignment.emplace_back(id, policy);
  }
  return assignment;
}

SimulationResult run_simulation(const KnapsackInstance& instance, const ScenarioConfig& config,
                                ExecMode mode) {
  config.validate();
  const auto report = validate_instance(instance);
  if (!report.valid()) throw std::invalid_argument("invalid instance: " + report.violations.front());
  config.resources.validate(instance.item_count);

  SimulationResult result;
  result.global_optimum = classify_optimum(instance);
  const double optimum_value = result.global_optimum.value;

  const auto assignment = build_scenario(config);
  std::vector<AgentRuntime> agents;
  agents.reserve(assignment.size());
  for (const auto& [id, policy] : assignment) {
    AgentRuntime agent{init_agent(instance, config.ga, id, config.master_seed), policy, {}, {}};
    note_reached(agent, optimum_value, 0);
    agents.push_back(std::move(agent));
  }

  result.ledger = ResourceLedger(instance.item_count);
  result.series.reserve(static_cast<std::size_t>(config.generations));
  result.charged_solutions.reserve(static_cast<std::size_t>(config.generations));

  const auto count = static_cast<std::ptrdiff_t>(agents.size());
  for (long tick = 1; tick <= config.generations; ++tick) {
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t a = 0; a < count; ++a)
        advance_agent(agents[a], instance, config.ga, optimum_value, tick);
    } else {
      for (std::ptrdiff_t a = 0; a < count; ++a)
        advance_agent(agents[a], instance, config.ga, optimum_value, tick);
    }

    std::vector<BitSolution> solutions;
    solutions.reserve(agents.size());
    for (const auto& agent : agents) solutions.push_back(agent.state.best_so_far);
    record_tick(result.ledger, config.resources, solutions, tick);
    result.series.push_back(result.ledger.cumulative);
    result.charged_solutions.push_back(std::move(solutions));
  }

  const auto exhausted = result.ledger.exhausted_items();
  for (std::size_t i : exhausted) {
    const long gen = *result.ledger.exhausted_at[i];
    if (!result.first_crossing || gen < result.first_crossing->generation)
      result.first_crossing = CrossingEvent{gen, i};
  }

  std::vector<BitSolution> finals;
  finals.reserve(agents.size());
  for (const auto& agent : agents) finals.push_back(agent.state.best_so_far);
  const auto starving = starving_agents(finals, exhausted);
  std::vector<bool> is_starving(agents.size(), false);
  for (std::size_t j : starving) is_starving[j] = true;

  result.per_agent.reserve(agents.size());
  for (std::size_t j = 0; j < agents.size(); ++j) {
    const auto& agent = agents[j];
    AgentOutcome outcome;
    outcome.agent_id = agent.state.agent_id;
    outcome.policy = agent.policy.kind;
    outcome.final_value = agent.state.best_value;
    outcome.generation_reached = agent.reached_at;
    outcome.reached_global = std::abs(agent.state.best_value - optimum_value) <= kValueTolerance;
    outcome.starving = is_starving[j];
    outcome.generations_run = agent.state.generations_run;
    outcome.committed_at = agent.committed_at;
    outcome.final_solution = agent.state.best_so_far;
    result.per_agent.push_back(std::move(outcome));
  }
  return result;
}

Summary summarize(const SimulationResult& result) {
  Summary summary;
  summary.first_crossing = result.first_crossing;
  summary.highest_trajectory.reserve(result.series.size());
  for (const auto& row : result.series) {
    double top = 0.0;
    for (double v : row) top = std::max(top, v);
    summary.highest_trajectory.push_back(top);
  }
  if (!result.series.empty()) {
    const auto& last = result.series.back();
    std::size_t arg = 0;
    for (std::size_t i = 1; i < last.size(); ++i)
      if (last[i] > last[arg]) arg = i;
    if (!last.empty()) summary.highest_item = arg;
  }

  double reach_sum = 0.0;
  for (const auto& agent : result.per_agent) {
    if (agent.reached_global) {
      ++summary.agents_at_global;
      reach_sum += static_cast<double>(*agent.generation_reached);
    }
    if (agent.starving) ++summary.starving_count;
  }
  if (summary.agents_at_global > 0)
    summary.mean_generation_to_global = reach_sum / summary.agents_at_global;
  return summary;
}

}  // namespace commons
