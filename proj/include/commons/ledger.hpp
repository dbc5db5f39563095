#ifndef COMMONS_LEDGER_HPP
#define COMMONS_LEDGER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "commons/knapsack.hpp"

namespace commons {

/// Per-item consumption model: selecting item i costs
/// scale_factors[i] * amounts[i] per agent per generation, against a stock of
/// availability[i].
struct ResourceModel {
  std::vector<double> scale_factors;
  std::vector<double> amounts;
  std::vector<double> availability;

  std::size_t item_count() const { return amounts.size(); }
  void validate(std::size_t expected_items) const;  // throws std::invalid_argument
  bool operator==(const ResourceModel&) const = default;
};

/// Running per-item totals with a per-tick audit trail. exhausted_at[i] holds
/// the first generation whose cumulative total exceeded availability[i].
struct ResourceLedger {
  std::vector<double> cumulative;
  std::vector<std::vector<double>> history;  // one increment vector per tick
  std::vector<std::optional<long>> exhausted_at;

  explicit ResourceLedger(std::size_t items)
      : cumulative(items, 0.0), exhausted_at(items) {}

  std::vector<std::size_t> exhausted_items() const;
};

/// Per-item amounts charged for one selection: bits[i] * scale[i] * amount[i].
std::vector<double> consumption_of(const ResourceModel& model, const BitSolution& solution);

/// Charges every agent's current solution for one generation. Selections are
/// counted per item first, so the result does not depend on agent order.
void record_tick(ResourceLedger& ledger, const ResourceModel& model,
                 const std::vector<BitSolution>& solutions, long generation);

/// Positions (into `solutions`) of agents whose solution uses an exhausted item.
std::vector<std::size_t> starving_agents(const std::vector<BitSolution>& solutions,
                                         const std::vector<std::size_t>& exhausted_items);

/// Audit: refold the history. Equals `ledger.cumulative` exactly.
std::vector<double> recompute_cumulative(const ResourceLedger& ledger);

}  // namespace commons

#endif  // COMMONS_LEDGER_HPP
