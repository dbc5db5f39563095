#include "commons/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "commons/config.hpp"
#include "commons/csv.hpp"
#include "commons/scenario.hpp"
#include "commons/svg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace commons {

namespace {

namespace fs = std::filesystem;

struct CliOptions {
  std::string config_path;
  std::string scenario = "";  // "1" | "2" | "3" | "all"; empty = from config
  std::optional<std::uint64_t> seed;
  int seeds = 1;
  std::string out_dir;
  std::optional<long> generations;
  std::optional<double> availability;
  bool plots = false;
  bool serial = false;
  int threads = 0;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> scenario_list(const std::string& flag, int config_default) {
  if (flag.empty()) return {config_default};
  if (flag == "all") return {1, 2, 3};
  if (flag == "1" || flag == "2" || flag == "3") return {flag[0] - '0'};
  throw ConfigError("unknown scenario '" + flag + "' (expected 1, 2, 3 or all)");
}

void plot_consumption(const SimulationResult& result, const ScenarioConfig& scenario,
                      const fs::path& dir) {
  std::vector<Series> lines;
  const std::size_t items = result.ledger.cumulative.size();
  for (std::size_t i = 0; i < items; ++i) {
    Series s;
    s.label = "item " + std::to_string(i + 1);
    s.y.reserve(result.series.size());
    for (const auto& row : result.series) s.y.push_back(row[i]);
    lines.push_back(std::move(s));
  }
  emit_svg_plot(lines, scenario.resources.availability.front(), dir / "consumption.svg");
}

int run_all(const CliOptions& options) {
  RunConfig config =
      options.config_path.empty() ? default_run_config() : parse_config(read_file(options.config_path));

  if (options.generations) {
    if (*options.generations <= 0) throw ConfigError("generations must be positive");
    config.scenario.generations = *options.generations;
  }
  if (options.availability) {
    if (!(*options.availability > 0)) throw ConfigError("availability must be positive");
    config.scenario.resources.availability.assign(config.instance.item_count, *options.availability);
  }
  if (options.seed) config.scenario.master_seed = *options.seed;
  if (!options.out_dir.empty()) config.output_dir = options.out_dir;
  if (options.plots) config.emit_plots = true;
  if (options.seeds < 1) throw ConfigError("--seeds must be at least 1");

  const auto scenarios = scenario_list(options.scenario, config.scenario.scenario_id);
  const std::uint64_t base_seed = config.scenario.master_seed;
  const bool single = scenarios.size() == 1 && options.seeds == 1;

#ifdef _OPENMP
  if (options.threads > 0) omp_set_num_threads(options.threads);
#endif
  const ExecMode mode = options.serial ? ExecMode::Serial : ExecMode::Parallel;

  const fs::path root = config.output_dir;
  fs::create_directories(root);

  std::vector<SummaryRow> all_rows;
  std::vector<Series> highest;  // one line per scenario, first seed

  for (int scenario_id : scenarios) {
    for (int r = 0; r < options.seeds; ++r) {
      ScenarioConfig scenario = config.scenario;
      scenario.scenario_id = scenario_id;
      scenario.master_seed = base_seed + static_cast<std::uint64_t>(r);

      const SimulationResult result = run_simulation(config.instance, scenario, mode);
      const Summary summary = summarize(result);

      const fs::path dir =
          single ? root
                 : root / ("scenario" + std::to_string(scenario_id) + "_seed" +
                           std::to_string(scenario.master_seed));
      emit_csv(result, scenario_id, scenario.master_seed, dir);
      if (config.emit_plots) plot_consumption(result, scenario, dir);
      all_rows.push_back(make_summary_row(scenario_id, scenario.master_seed, summary));

      if (r == 0 && scenarios.size() > 1)
        highest.push_back({"scenario " + std::to_string(scenario_id), summary.highest_trajectory});

      std::cout << "scenario " << scenario_id << " seed " << scenario.master_seed << ": wrote "
                << dir.string() << " (";
      if (summary.first_crossing)
        std::cout << "first crossing at generation " << summary.first_crossing->generation
                  << ", item " << summary.first_crossing->item + 1;
      else
        std::cout << "no crossing";
      std::cout << ", " << summary.agents_at_global << "/" << scenario.agent_count
                << " agents at optimum)\n";
    }
  }

  if (!single) write_summary_csv(root / "summary.csv", all_rows);
  if (config.emit_plots && highest.size() > 1)
    emit_svg_plot(highest, config.scenario.resources.availability.front(), root / "highest.svg");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"multi-agent knapsack search with shared-resource accounting"};
  app.name("commons-sim");

  CliOptions options;
  app.add_option("--config", options.config_path, "JSON config file (defaults when omitted)");
  app.add_option("--scenario", options.scenario, "scenario to run: 1, 2, 3 or all");
  app.add_option("--seed", options.seed, "master seed (overrides config)");
  app.add_option("--seeds", options.seeds, "number of replicate seeds, base seed increments");
  app.add_option("--out", options.out_dir, "output directory");
  app.add_option("--generations", options.generations, "generation count (overrides config)");
  app.add_option("--availability", options.availability, "per-item resource stock (overrides config)");
  app.add_flag("--plots", options.plots, "emit SVG plots next to the CSVs");
  app.add_flag("--serial", options.serial, "run the serial reference path");
  app.add_option("--threads", options.threads, "OpenMP thread count (0 = library default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run_all(options);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace commons
