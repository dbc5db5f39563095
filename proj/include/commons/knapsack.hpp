#ifndef COMMONS_KNAPSACK_HPP
#define COMMONS_KNAPSACK_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace commons {

/// Tolerance used for value-equality tests throughout the library
/// (objective values are decimal literals summed in double precision).
inline constexpr double kValueTolerance = 1e-9;

/// A 0/1 item selection. bits[i] == 1 means item i is in the sack.
struct BitSolution {
  std::vector<std::uint8_t> bits;

  BitSolution() = default;
  explicit BitSolution(std::size_t n) : bits(n, 0) {}

  static BitSolution zeros(std::size_t n) { return BitSolution(n); }

  /// Parse "1101100100" style strings.
  static BitSolution from_string(const std::string& s) {
    BitSolution b;
    b.bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("BitSolution: expected only 0/1 characters");
      b.bits.push_back(c == '1' ? 1 : 0);
    }
    return b;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
  }

  std::size_t size() const { return bits.size(); }
  bool operator==(const BitSolution&) const = default;
};

/// Item weights/values and the sack capacity.
struct KnapsackInstance {
  std::size_t item_count = 0;
  std::vector<double> weights;
  std::vector<double> values;
  double capacity = 0.0;

  bool operator==(const KnapsackInstance&) const = default;
};

struct Evaluation {
  double total_value = 0.0;
  double total_weight = 0.0;
  bool feasible = false;  // strict: total_weight < capacity
};

/// Value, weight and strict feasibility of a selection.
inline Evaluation evaluate(const KnapsackInstance& instance, const BitSolution& solution) {
  if (solution.size() != instance.item_count)
    throw std::invalid_argument("evaluate: solution length does not match item_count");
  Evaluation e;
  for (std::size_t i = 0; i < instance.item_count; ++i) {
    if (solution.bits[i]) {
      e.total_value += instance.values[i];
      e.total_weight += instance.weights[i];
    }
  }
  e.feasible = e.total_weight < instance.capacity;
  return e;
}

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool valid() const { return violations.empty(); }
};

/// Report-style instance check; never throws. Violations make the instance
/// unusable, warnings flag degenerate-but-accepted shapes.
ValidationReport validate_instance(const KnapsackInstance& instance);

}  // namespace commons

#endif  // COMMONS_KNAPSACK_HPP
