#include "commons/exact.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace commons {

namespace {

// Value/weight of the best selection over a suffix of the items.
struct Cell {
  double value = 0.0;
  std::int64_t weight = 0;
};

// Maximize value; tie-break toward lower weight. Keeping `skip` on full ties
// makes the greedy reconstruction below pick the lexicographically smallest
// optimum.
bool take_beats_skip(const Cell& take, const Cell& skip) {
  if (take.value != skip.value) return take.value > skip.value;
  return take.weight < skip.weight;
}

void check_common(const KnapsackInstance& instance) {
  auto report = validate_instance(instance);
  if (!report.valid()) throw std::invalid_argument("invalid instance: " + report.violations.front());
}

}  // namespace

OptimalResult solve_dp(const KnapsackInstance& instance) {
  if (instance.item_count == 0) return OptimalResult{BitSolution{}, 0.0, 0.0};
  check_common(instance);

  const std::size_t m = instance.item_count;
  std::vector<std::int64_t> w(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (std::floor(instance.weights[i]) != instance.weights[i])
      throw std::invalid_argument("dp requires integer weights; use brute force");
    w[i] = static_cast<std::int64_t>(instance.weights[i]);
  }

  // Largest integer weight a solution may carry under the strict constraint.
  const double cap = instance.capacity;
  std::int64_t limit = (std::floor(cap) == cap) ? static_cast<std::int64_t>(cap) - 1
                                                : static_cast<std::int64_t>(std::floor(cap));
  if (limit < 0) limit = 0;
  const std::size_t cols = static_cast<std::size_t>(limit) + 1;

  // table[i][c]: best over items i..m-1 with weight budget c.
  std::vector<std::vector<Cell>> table(m + 1, std::vector<Cell>(cols));
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t c = 0; c < cols; ++c) {
      Cell best = table[i + 1][c];
      if (w[i] <= static_cast<std::int64_t>(c)) {
        const Cell& rest = table[i + 1][c - static_cast<std::size_t>(w[i])];
        Cell take{instance.values[i] + rest.value, w[i] + rest.weight};
        if (take_beats_skip(take, best)) best = take;
      }
      table[i][c] = best;
    }
  }

  BitSolution bits(m);
  std::size_t c = cols - 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Cell& here = table[i][c];
    const Cell& skip = table[i + 1][c];
    if (here.value == skip.value && here.weight == skip.weight) continue;
    bits.bits[i] = 1;
    c -= static_cast<std::size_t>(w[i]);
  }

  const Evaluation e = evaluate(instance, bits);
  return OptimalResult{std::move(bits), e.total_value, e.total_weight};
}

OptimalResult solve_brute_force(const KnapsackInstance& instance) {
  if (instance.item_count == 0) return OptimalResult{BitSolution{}, 0.0, 0.0};
  if (instance.item_count > 25)
    throw std::invalid_argument("brute force refused: more than 25 items");
  check_common(instance);

  const std::size_t m = instance.item_count;
  const std::uint64_t total = std::uint64_t{1} << m;

  BitSolution best = BitSolution::zeros(m);  // mask 0, always feasible
  double best_value = 0.0;
  double best_weight = 0.0;

  // Masks are scanned in lexicographic order of the bit vector (bit 0 of the
  // vector is the most significant mask bit), so on full ties the first hit
  // is the lexicographically smallest optimum.
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    double value = 0.0;
    double weight = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << (m - 1 - i))) {
        value += instance.values[i];
        weight += instance.weights[i];
      }
    }
    if (!(weight < instance.capacity)) continue;
    if (value > best_value || (value == best_value && weight < best_weight)) {
      best_value = value;
      best_weight = weight;
      for (std::size_t i = 0; i < m; ++i)
        best.bits[i] = (mask & (std::uint64_t{1} << (m - 1 - i))) ? 1 : 0;
    }
  }
  return OptimalResult{std::move(best), best_value, best_weight};
}

}  // namespace commons
