#ifndef COMMONS_SCENARIO_HPP
#define COMMONS_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "commons/exact.hpp"
#include "commons/ga.hpp"
#include "commons/knapsack.hpp"
#include "commons/ledger.hpp"

namespace commons {

enum class PolicyKind { Persistent, Satisficer, Fast };

const char* policy_name(PolicyKind kind);

/// How an agent searches: forever (Persistent), until it stops improving for
/// commit_after_stall generations (Satisficer), or several generations per
/// tick (Fast).
struct SearchPolicy {
  PolicyKind kind = PolicyKind::Persistent;
  int commit_after_stall = 0;
  int steps_per_tick = 1;

  static SearchPolicy persistent() { return {}; }
  static SearchPolicy satisficer(int commit_after_stall) {
    return {PolicyKind::Satisficer, commit_after_stall, 1};
  }
  static SearchPolicy fast(int steps_per_tick) { return {PolicyKind::Fast, 0, steps_per_tick}; }

  bool operator==(const SearchPolicy&) const = default;
};

struct ScenarioConfig {
  int scenario_id = 1;  // 1 all persistent, 2 satisficers, 3 mixed fast
  int agent_count = 25;
  long generations = 2000;
  GaParams ga;
  ResourceModel resources;
  double satisficer_fraction = 1.0;  // scenario 2
  int commit_after_stall = 25;       // scenario 2
  double fast_fraction = 0.3;        // scenario 3
  int steps_per_tick = 4;            // scenario 3
  std::uint64_t master_seed = 1;

  void validate() const;  // throws std::invalid_argument
  bool operator==(const ScenarioConfig&) const = default;
};

struct AgentOutcome {
  int agent_id = 0;
  PolicyKind policy = PolicyKind::Persistent;
  double final_value = 0.0;
  bool reached_global = false;
  std::optional<long> generation_reached;  // 0 = already in the initial candidates
  bool starving = false;
  long generations_run = 0;
  std::optional<long> committed_at;
  BitSolution final_solution;

  bool operator==(const AgentOutcome&) const = default;
};

struct CrossingEvent {
  long generation = 0;
  std::size_t item = 0;  // 0-based
  bool operator==(const CrossingEvent&) const = default;
};

struct SimulationResult {
  std::vector<std::vector<double>> series;  // series[k-1][i]: cumulative after tick k
  std::vector<AgentOutcome> per_agent;
  std::optional<CrossingEvent> first_crossing;
  OptimalResult global_optimum;
  ResourceLedger ledger{0};
  std::vector<std::vector<BitSolution>> charged_solutions;  // [tick][agent]
};

/// Serial is the reference path; Parallel steps agents with OpenMP and must
/// produce identical results.
enum class ExecMode { Serial, Parallel };

/// Deterministic policy assignment for agents 1..agent_count, drawn from the
/// master seed's reserved stream.
std::vector<std::pair<int, SearchPolicy>> build_scenario(const ScenarioConfig& config);

/// Runs one scenario: each tick advances every uncommitted agent, then every
/// agent's best-so-far is charged to the ledger in agent order. Fully
/// deterministic given (instance, config), in either execution mode.
SimulationResult run_simulation(const KnapsackInstance& instance, const ScenarioConfig& config,
                                ExecMode mode = ExecMode::Parallel);

struct Summary {
  std::vector<double> highest_trajectory;      // per tick, max item cumulative
  std::optional<std::size_t> highest_item;     // argmax at the final tick
  std::optional<CrossingEvent> first_crossing;
  int agents_at_global = 0;
  std::optional<double> mean_generation_to_global;
  int starving_count = 0;
};

Summary summarize(const SimulationResult& result);

}  // namespace commons

#endif  // COMMONS_SCENARIO_HPP
