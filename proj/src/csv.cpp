#include "commons/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace commons {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

std::string opt_number(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string{};
}

}  // namespace

std::string format_number(double value) {
  if (std::floor(value) == value && std::abs(value) < 1e15)
    return std::to_string(static_cast<long long>(value));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

SummaryRow make_summary_row(int scenario_id, std::uint64_t seed, const Summary& summary) {
  SummaryRow row;
  row.scenario = scenario_id;
  row.seed = seed;
  if (summary.first_crossing) {
    row.first_crossing_generation = summary.first_crossing->generation;
    row.crossing_item = summary.first_crossing->item + 1;
  }
  row.agents_at_global = summary.agents_at_global;
  row.mean_generation_to_global = summary.mean_generation_to_global;
  return row;
}

void write_consumption_csv(const std::filesystem::path& path,
                           const std::vector<std::vector<double>>& series) {
  auto out = open_for_write(path);
  out << "generation,item,cumulative\n";
  for (std::size_t k = 0; k < series.size(); ++k)
    for (std::size_t i = 0; i < series[k].size(); ++i)
      out << (k + 1) << ',' << (i + 1) << ',' << format_number(series[k][i]) << '\n';
}

void write_agents_csv(const std::filesystem::path& path, const std::vector<AgentOutcome>& agents) {
  auto out = open_for_write(path);
  out << "agent_id,policy,final_value,reached_global,generation_reached,starving\n";
  for (const auto& agent : agents) {
    out << agent.agent_id << ',' << policy_name(agent.policy) << ','
        << format_number(agent.final_value) << ',' << (agent.reached_global ? 1 : 0) << ',';
    if (agent.generation_reached) out << *agent.generation_reached;
    out << ',' << (agent.starving ? 1 : 0) << '\n';
  }
}

void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows) {
  auto out = open_for_write(path);
  out << "scenario,seed,first_crossing_generation,crossing_item,agents_at_global,"
         "mean_generation_to_global\n";
  for (const auto& row : rows) {
    out << row.scenario << ',' << row.seed << ',';
    if (row.first_crossing_generation) out << *row.first_crossing_generation;
    out << ',';
    if (row.crossing_item) out << *row.crossing_item;
    out << ',' << row.agents_at_global << ',' << opt_number(row.mean_generation_to_global) << '\n';
  }
}

CsvPaths emit_csv(const SimulationResult& result, int scenario_id, std::uint64_t seed,
                  const std::filesystem::path& output_dir) {
  std::filesystem::create_directories(output_dir);
  CsvPaths paths{output_dir / "consumption.csv", output_dir / "agents.csv",
                 output_dir / "summary.csv"};
  write_consumption_csv(paths.consumption, result.series);
  write_agents_csv(paths.agents, result.per_agent);
  write_summary_csv(paths.summary, {make_summary_row(scenario_id, seed, summarize(result))});
  return paths;
}

}  // namespace commons
