#ifndef COMMONS_CSV_HPP
#define COMMONS_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "commons/scenario.hpp"

namespace commons {

/// Integral values print bare; everything else with up to nine decimal
/// places, trailing zeros trimmed.
std::string format_number(double value);

/// One row of summary.csv. Optional fields serialize as empty strings.
struct SummaryRow {
  int scenario = 0;
  std::uint64_t seed = 0;
  std::optional<long> first_crossing_generation;
  std::optional<std::size_t> crossing_item;  // 1-based in the file
  int agents_at_global = 0;
  std::optional<double> mean_generation_to_global;
};

SummaryRow make_summary_row(int scenario_id, std::uint64_t seed, const Summary& summary);

struct CsvPaths {
  std::filesystem::path consumption;
  std::filesystem::path agents;
  std::filesystem::path summary;
};

void write_consumption_csv(const std::filesystem::path& path,
                           const std::vector<std::vector<double>>& series);
void write_agents_csv(const std::filesystem::path& path, const std::vector<AgentOutcome>& agents);
void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);

/// Writes consumption.csv, agents.csv and summary.csv for one run.
CsvPaths emit_csv(const SimulationResult& result, int scenario_id, std::uint64_t seed,
                  const std::filesystem::path& output_dir);

}  // namespace commons

#endif  // COMMONS_CSV_HPP
