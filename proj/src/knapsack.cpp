#include "commons/knapsack.hpp"

#include <numeric>
#include <sstream>

namespace commons {

ValidationReport validate_instance(const KnapsackInstance& instance) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (instance.item_count == 0) fail("item_count: must be positive");
  if (instance.weights.size() != instance.item_count) {
    std::ostringstream os;
    os << "weights: expected " << instance.item_count << " entries, got " << instance.weights.size();
    fail(os.str());
  }
  if (instance.values.size() != instance.item_count) {
    std::ostringstream os;
    os << "values: expected " << instance.item_count << " entries, got " << instance.values.size();
    fail(os.str());
  }
  if (!(instance.capacity > 0.0)) fail("capacity: must be positive");
  for (std::size_t i = 0; i < instance.weights.size(); ++i) {
    if (instance.weights[i] < 0.0) {
      fail("weights[" + std::to_string(i) + "]: must be non-negative");
      break;
    }
  }
  for (std::size_t i = 0; i < instance.values.size(); ++i) {
    if (instance.values[i] < 0.0) {
      fail("values[" + std::to_string(i) + "]: must be non-negative");
      break;
    }
  }
  if (!report.valid()) return report;

  bool any_fits = false;
  for (double w : instance.weights)
    if (w < instance.capacity) any_fits = true;
  if (!any_fits)
    report.warnings.push_back("no single item fits under the capacity; only the empty selection is feasible");

  const double total = std::accumulate(instance.weights.begin(), instance.weights.end(), 0.0);
  if (instance.capacity >= total)
    report.warnings.push_back("constraint vacuous: capacity is at least the total weight of all items");

  return report;
}

}  // namespace commons
