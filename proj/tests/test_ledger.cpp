#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "commons/config.hpp"
#include "commons/ledger.hpp"
#include "commons/rng.hpp"

using namespace commons;

namespace {

ResourceModel demo_model(double availability = kDefaultAvailability) {
  return default_resources(default_instance(), availability);
}

BitSolution random_solution(Rng& rng, std::size_t m) {
  BitSolution s(m);
  for (auto& b : s.bits) b = rng.next_bit() ? 1 : 0;
  return s;
}

}  // namespace

TEST_CASE("consumption_of") {
  const auto model = demo_model();

  SUBCASE("masks the per-item charges by the selection") {
    const auto amounts = consumption_of(model, BitSolution::from_string("1101100100"));
    CHECK(amounts == std::vector<double>{996, 771, 0, 593, 621, 0, 0, 388, 0, 0});
  }

  SUBCASE("empty selection consumes nothing") {
    const auto amounts = consumption_of(model, BitSolution::zeros(10));
    CHECK(std::all_of(amounts.begin(), amounts.end(), [](double a) { return a == 0.0; }));
  }

  SUBCASE("scale factors multiply the charge") {
    auto scaled = model;
    scaled.scale_factors.assign(10, 2.0);
    const auto amounts = consumption_of(scaled, BitSolution::from_string("1000000000"));
    CHECK(amounts.front() == 1992.0);
    CHECK(std::count(amounts.begin(), amounts.end(), 0.0) == 9);
  }

  SUBCASE("length mismatch throws") {
    CHECK_THROWS_AS(consumption_of(model, BitSolution::zeros(9)), std::invalid_argument);
  }
}

TEST_CASE("record_tick accumulates per item across agents") {
  const std::vector<BitSolution> solutions(25, BitSolution::from_string("1101100100"));

  SUBCASE("one tick") {
    auto model = demo_model();
    ResourceLedger ledger(10);
    record_tick(ledger, model, solutions, 1);
    CHECK(ledger.cumulative.front() == 24900.0);  // 25 * 996
    CHECK(ledger.history.size() == 1);
  }

  SUBCASE("two ticks exactly double") {
    auto model = demo_model();
    ResourceLedger ledger(10);
    record_tick(ledger, model, solutions, 1);
    record_tick(ledger, model, solutions, 2);
    CHECK(ledger.cumulative.front() == 49800.0);
    CHECK_FALSE(ledger.exhausted_at.front().has_value());
  }

  SUBCASE("threshold crossing is recorded at the first exceeding tick") {
    auto model = demo_model(30000.0);
    ResourceLedger ledger(10);
    record_tick(ledger, model, solutions, 1);
    record_tick(ledger, model, solutions, 2);
    REQUIRE(ledger.exhausted_at.front().has_value());
    CHECK(*ledger.exhausted_at.front() == 2);  // 24900 < 30000 < 49800
    record_tick(ledger, model, solutions, 3);
    CHECK(*ledger.exhausted_at.front() == 2);  // persists
    // per-tick charges: item 1: 24900, 2: 19275, 4: 14825, 5: 15525, 8: 9700
    CHECK(ledger.exhausted_items() == std::vector<std::size_t>{0, 1, 3, 4});
  }

  SUBCASE("length mismatch throws") {
    auto model = demo_model();
    ResourceLedger ledger(10);
    CHECK_THROWS_AS(record_tick(ledger, model, {BitSolution::zeros(9)}, 1), std::invalid_argument);
  }
}

TEST_CASE("starving_agents") {
  const auto a = BitSolution::from_string("1101100100");
  const auto b = BitSolution::from_string("0010000000");

  CHECK(starving_agents({a, b}, {0}) == std::vector<std::size_t>{0});
  CHECK(starving_agents({a, b}, {}).empty());
  CHECK(starving_agents({BitSolution::zeros(10), BitSolution::zeros(10)}, {0, 1, 2}).empty());
  CHECK(starving_agents({a, b}, {2, 7}) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("ledger properties over random histories") {
  auto model = demo_model(50000.0);
  // non-integral scale factors stress the order-independence guarantee
  model.scale_factors = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.1};
  Rng rng(11);

  ResourceLedger ledger(10);
  std::vector<std::vector<BitSolution>> ticks;
  for (long k = 1; k <= 50; ++k) {
    std::vector<BitSolution> solutions;
    for (int j = 0; j < 8; ++j) solutions.push_back(random_solution(rng, 10));
    ticks.push_back(solutions);
    const auto before = ledger.cumulative;
    record_tick(ledger, model, solutions, k);
    for (std::size_t i = 0; i < 10; ++i) REQUIRE(ledger.cumulative[i] >= before[i]);
  }

  SUBCASE("audit recomputation is exact") {
    CHECK(recompute_cumulative(ledger) == ledger.cumulative);
  }

  SUBCASE("agent order within a tick does not matter") {
    ResourceLedger permuted(10);
    Rng shuffle_rng(17);
    for (long k = 1; k <= 50; ++k) {
      auto solutions = ticks[static_cast<std::size_t>(k - 1)];
      for (std::size_t j = solutions.size(); j > 1; --j)
        std::swap(solutions[j - 1], solutions[shuffle_rng.next_below(j)]);
      record_tick(permuted, model, solutions, k);
    }
    CHECK(permuted.cumulative == ledger.cumulative);
    CHECK(permuted.history == ledger.history);
    for (std::size_t i = 0; i < 10; ++i)
      CHECK(permuted.exhausted_at[i] == ledger.exhausted_at[i]);
  }
}
