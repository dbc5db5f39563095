#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "commons/config.hpp"

using namespace commons;

TEST_CASE("empty document yields the full default config") {
  for (const std::string text : {"", "   \n", "{}"}) {
    const auto config = parse_config(text);
    CHECK(config == default_run_config());
    CHECK(config.scenario.agent_count == 25);
    CHECK(config.instance.item_count == 10);
    CHECK(config.instance.capacity == 3394.5);
    CHECK(config.scenario.generations == 2000);
    CHECK(config.scenario.ga.population_size == 45);
    CHECK(config.scenario.resources.availability ==
          std::vector<double>(10, kDefaultAvailability));
  }
}

TEST_CASE("single override keeps the other defaults") {
  const auto config = parse_config(R"({"scenario": {"generations": 100}})");
  CHECK(config.scenario.generations == 100);
  auto expected = default_run_config();
  expected.scenario.generations = 100;
  CHECK(config == expected);
}

TEST_CASE("schema violations name the field") {
  SUBCASE("wrong weights length") {
    const std::string text = R"({"instance": {"weights": [1,2,3,4,5,6,7,8,9]}})";
    CHECK_THROWS_WITH_AS(parse_config(text), "instance.weights: expected 10 entries, got 9",
                         ConfigError);
  }
  SUBCASE("unknown top-level field") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"agents": 3})"), "unknown field: agents", ConfigError);
  }
  SUBCASE("unknown nested field") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"resources": {"alpha": 1}})"),
                         "unknown field: resources.alpha", ConfigError);
  }
  SUBCASE("malformed document") {
    CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
  }
  SUBCASE("wrong type") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"scenario": {"generations": "many"}})"),
                         "scenario.generations: expected an integer", ConfigError);
  }
  SUBCASE("mutation rate out of range") {
    CHECK_THROWS_AS(parse_config(R"({"ga": {"mutation_rate": 1.5}})"), ConfigError);
  }
  SUBCASE("offspring count must match the population size") {
    CHECK_THROWS_AS(parse_config(R"({"ga": {"offspring_per_generation": 10}})"), ConfigError);
  }
  SUBCASE("unknown scenario id") {
    CHECK_THROWS_AS(parse_config(R"({"scenario": {"id": 9}})"), ConfigError);
  }
  SUBCASE("negative capacity") {
    CHECK_THROWS_AS(parse_config(R"({"instance": {"capacity": -5}})"), ConfigError);
  }
}

TEST_CASE("population size override implies the offspring count") {
  const auto config = parse_config(R"({"ga": {"population_size": 30}})");
  CHECK(config.scenario.ga.population_size == 30);
  CHECK(config.scenario.ga.offspring_per_generation == 30);
}

TEST_CASE("availability accepts scalar and per-item forms") {
  const auto scalar = parse_config(R"({"resources": {"availability": 5000}})");
  CHECK(scalar.scenario.resources.availability == std::vector<double>(10, 5000.0));

  const auto per_item = parse_config(
      R"({"resources": {"availability": [1,2,3,4,5,6,7,8,9,10]}})");
  CHECK(per_item.scenario.resources.availability ==
        std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

  CHECK_THROWS_AS(parse_config(R"({"resources": {"availability": [1, 2]}})"), ConfigError);
}

TEST_CASE("the shipped default config matches the built-in defaults") {
  std::ifstream in(std::string{COMMONS_SOURCE_DIR} + "/configs/default.json", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(parse_config(buffer.str()) == default_run_config());
}

TEST_CASE("serialize and parse round trip") {
  SUBCASE("defaults") {
    const auto config = default_run_config();
    CHECK(parse_config(serialize_config(config)) == config);
  }
  SUBCASE("customized config") {
    RunConfig config = default_run_config();
    config.scenario.scenario_id = 3;
    config.scenario.agent_count = 7;
    config.scenario.generations = 123;
    config.scenario.master_seed = 0xDEADBEEFULL;
    config.scenario.ga.population_size = 20;
    config.scenario.ga.offspring_per_generation = 20;
    config.scenario.ga.mutation_rate = 0.125;
    config.scenario.fast_fraction = 0.45;
    config.scenario.steps_per_tick = 6;
    config.scenario.resources.availability.assign(10, 123456.75);
    config.output_dir = "elsewhere";
    config.emit_plots = true;
    CHECK(parse_config(serialize_config(config)) == config);
  }
  SUBCASE("non-uniform availability") {
    RunConfig config = default_run_config();
    for (std::size_t i = 0; i < 10; ++i)
      config.scenario.resources.availability[i] = 1000.0 + static_cast<double>(i);
    CHECK(parse_config(serialize_config(config)) == config);
  }
  SUBCASE("smaller instance") {
    RunConfig config = default_run_config();
    config.instance = KnapsackInstance{3, {2, 3, 4}, {3, 4, 5}, 5.5};
    config.scenario.resources = default_resources(config.instance, 777.5);
    CHECK(parse_config(serialize_config(config)) == config);
  }
}
