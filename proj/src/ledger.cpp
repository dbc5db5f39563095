#include "commons/ledger.hpp"

#include <stdexcept>

namespace commons {

void ResourceModel::validate(std::size_t expected_items) const {
  if (scale_factors.size() != expected_items || amounts.size() != expected_items ||
      availability.size() != expected_items)
    throw std::invalid_argument("resource model lists must all have one entry per item");
  for (double a : scale_factors)
    if (a < 0.0) throw std::invalid_argument("scale_factors must be non-negative");
  for (double r : amounts)
    if (r < 0.0) throw std::invalid_argument("amounts must be non-negative");
  for (double t : availability)
    if (!(t > 0.0)) throw std::invalid_argument("availability must be positive");
}

std::vector<std::size_t> ResourceLedger::exhausted_items() const {
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < exhausted_at.size(); ++i)
    if (exhausted_at[i]) items.push_back(i);
  return items;
}

std::vector<double> consumption_of(const ResourceModel& model, const BitSolution& solution) {
  if (solution.size() != model.item_count())
    throw std::invalid_argument("consumption_of: solution length does not match model");
  std::vector<double> amounts(model.item_count(), 0.0);
  for (std::size_t i = 0; i < amounts.size(); ++i)
    if (solution.bits[i]) amounts[i] = model.scale_factors[i] * model.amounts[i];
  return amounts;
}

void record_tick(ResourceLedger& ledger, const ResourceModel& model,
                 const std::vector<BitSolution>& solutions, long generation) {
  const std::size_t items = model.item_count();
  if (ledger.cumulative.size() != items)
    throw std::invalid_argument("record_tick: ledger and model disagree on item count");

  // Count selections per item, then scale once: the increment is exact and
  // independent of the order agents are listed in.
  std::vector<long> counts(items, 0);
  for (const auto& s : solutions) {
    if (s.size() != items)
      throw std::invalid_argument("record_tick: solution length does not match model");
    for (std::size_t i = 0; i < items; ++i) counts[i] += s.bits[i];
  }

  std::vector<double> increments(items, 0.0);
  for (std::size_t i = 0; i < items; ++i) {
    increments[i] = static_cast<double>(counts[i]) * model.scale_factors[i] * model.amounts[i];
    ledger.cumulative[i] += increments[i];
    if (!ledger.exhausted_at[i] && ledger.cumulative[i] > model.availability[i])
      ledger.exhausted_at[i] = generation;
  }
  ledger.history.push_back(std::move(increments));
}

std::vector<std::size_t> starving_agents(const std::vector<BitSolution>& solutions,
                                         const std::vector<std::size_t>& exhausted_items) {
  std::vector<std::size_t> starving;
  for (std::size_t j = 0; j < solutions.size(); ++j) {
    for (std::size_t i : exhausted_items) {
      if (i < solutions[j].size() && solutions[j].bits[i]) {
        starving.push_back(j);
        break;
      }
    }
  }
  return starving;
}

std::vector<double> recompute_cumulative(const ResourceLedger& ledger) {
  std::vector<double> totals(ledger.cumulative.size(), 0.0);
  for (const auto& tick : ledger.history)
    for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += tick[i];
  return totals;
}

}  // namespace commons
