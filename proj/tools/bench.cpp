// Compares the serial reference path against the OpenMP path on a scaled-up
// scenario and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "commons/config.hpp"
#include "commons/scenario.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

double run_timed(const commons::KnapsackInstance& instance, const commons::ScenarioConfig& config,
                 commons::ExecMode mode, commons::SimulationResult& out) {
  const auto start = clock_type::now();
  out = commons::run_simulation(instance, config, mode);
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int agents = 100;
  long generations = 300;
  if (argc > 1) agents = std::stoi(argv[1]);
  if (argc > 2) generations = std::stol(argv[2]);

  const auto instance = commons::default_instance();
  commons::ScenarioConfig config;
  config.scenario_id = 1;
  config.agent_count = agents;
  config.generations = generations;
  config.master_seed = 1;
  config.resources = commons::default_resources(instance);

#ifdef _OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both paths run serially\n");
#endif
  std::printf("agents: %d, generations: %ld\n", agents, generations);

  commons::SimulationResult serial_result, parallel_result;
  const double t_serial =
      run_timed(instance, config, commons::ExecMode::Serial, serial_result);
  const double t_parallel =
      run_timed(instance, config, commons::ExecMode::Parallel, parallel_result);

  const bool identical = serial_result.series == parallel_result.series &&
                         serial_result.per_agent == parallel_result.per_agent;
  std::printf("serial:   %8.3f s\n", t_serial);
  std::printf("parallel: %8.3f s  (speedup %.2fx)\n", t_parallel,
              t_parallel > 0 ? t_serial / t_parallel : 0.0);
  std::printf("results identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
