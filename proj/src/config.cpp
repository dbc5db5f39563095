#include "commons/config.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

namespace commons {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ConfigError(path.empty() ? what : path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) bad("", "unknown field: " + (path.empty() ? item.key() : path + "." + item.key()));
  }
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double as_double(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path, "expected a number");
  return v.get<double>();
}

long as_long(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<long>();
}

std::uint64_t as_u64(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) bad(path, "expected a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  return v.get<std::string>();
}

std::vector<double> as_double_array(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number()) bad(path, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

void parse_instance(const json& obj, KnapsackInstance& instance) {
  reject_unknown_keys(obj, "instance", {"item_count", "weights", "values", "capacity"});
  if (const json* v = find(obj, "item_count")) {
    const long n = as_long(*v, "instance.item_count");
    if (n <= 0) bad("instance.item_count", "must be positive");
    instance.item_count = static_cast<std::size_t>(n);
  }
  if (const json* v = find(obj, "weights")) instance.weights = as_double_array(*v, "instance.weights");
  if (const json* v = find(obj, "values")) instance.values = as_double_array(*v, "instance.values");
  if (const json* v = find(obj, "capacity")) instance.capacity = as_double(*v, "instance.capacity");
}

void parse_ga(const json& obj, GaParams& ga) {
  reject_unknown_keys(obj, "ga",
                      {"population_size", "candidate_capacity", "mutation_rate",
                       "offspring_per_generation", "max_init_retries"});
  bool offspring_given = false;
  if (const json* v = find(obj, "population_size"))
    ga.population_size = static_cast<int>(as_long(*v, "ga.population_size"));
  if (const json* v = find(obj, "candidate_capacity"))
    ga.candidate_capacity = static_cast<int>(as_long(*v, "ga.candidate_capacity"));
  if (const json* v = find(obj, "mutation_rate")) ga.mutation_rate = as_double(*v, "ga.mutation_rate");
  if (const json* v = find(obj, "offspring_per_generation")) {
    ga.offspring_per_generation = static_cast<int>(as_long(*v, "ga.offspring_per_generation"));
    offspring_given = true;
  }
  if (const json* v = find(obj, "max_init_retries"))
    ga.max_init_retries = static_cast<int>(as_long(*v, "ga.max_init_retries"));
  if (!offspring_given) ga.offspring_per_generation = ga.population_size;
}

void parse_scenario(const json& obj, ScenarioConfig& scenario) {
  reject_unknown_keys(obj, "scenario",
                      {"id", "agent_count", "generations", "master_seed", "satisficer_fraction",
                       "commit_after_stall", "fast_fraction", "steps_per_tick"});
  if (const json* v = find(obj, "id"))
    scenario.scenario_id = static_cast<int>(as_long(*v, "scenario.id"));
  if (const json* v = find(obj, "agent_count"))
    scenario.agent_count = static_cast<int>(as_long(*v, "scenario.agent_count"));
  if (const json* v = find(obj, "generations")) scenario.generations = as_long(*v, "scenario.generations");
  if (const json* v = find(obj, "master_seed")) scenario.master_seed = as_u64(*v, "scenario.master_seed");
  if (const json* v = find(obj, "satisficer_fraction"))
    scenario.satisficer_fraction = as_double(*v, "scenario.satisficer_fraction");
  if (const json* v = find(obj, "commit_after_stall")) {
    scenario.commit_after_stall = static_cast<int>(as_long(*v, "scenario.commit_after_stall"));
    if (scenario.commit_after_stall <= 0) bad("scenario.commit_after_stall", "must be positive");
  }
  if (const json* v = find(obj, "fast_fraction"))
    scenario.fast_fraction = as_double(*v, "scenario.fast_fraction");
  if (const json* v = find(obj, "steps_per_tick")) {
    scenario.steps_per_tick = static_cast<int>(as_long(*v, "scenario.steps_per_tick"));
    if (scenario.steps_per_tick < 2) bad("scenario.steps_per_tick", "must be at least 2");
  }
}

void parse_resources(const json& obj, std::size_t items, ResourceModel& resources) {
  reject_unknown_keys(obj, "resources", {"scale_factors", "amounts", "availability"});
  if (const json* v = find(obj, "scale_factors"))
    resources.scale_factors = as_double_array(*v, "resources.scale_factors");
  if (const json* v = find(obj, "amounts")) resources.amounts = as_double_array(*v, "resources.amounts");
  if (const json* v = find(obj, "availability")) {
    if (v->is_array()) {
      resources.availability = as_double_array(*v, "resources.availability");
    } else {
      const double a = as_double(*v, "resources.availability");
      resources.availability.assign(items, a);
    }
  }
}

bool blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

KnapsackInstance default_instance() {
  KnapsackInstance instance;
  instance.item_count = 10;
  instance.weights = {996, 771, 543, 593, 621, 473, 595, 388, 935, 874};
  instance.values = {54.04769411, 39.33601431, 14.83657681, 43.52375770, 66.31920392,
                     26.17907976, 27.14489409, 58.72956010, 25.50253249, 49.04678721};
  instance.capacity = 3394.5;  // half the total weight
  return instance;
}

ResourceModel default_resources(const KnapsackInstance& instance, double availability) {
  ResourceModel model;
  model.scale_factors.assign(instance.item_count, 1.0);
  model.amounts = instance.weights;
  model.availability.assign(instance.item_count, availability);
  return model;
}

RunConfig default_run_config() {
  RunConfig config;
  config.instance = default_instance();
  config.scenario.resources = default_resources(config.instance);
  return config;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  if (blank(text)) {
    doc = json::object();
  } else {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string{"malformed config: "} + e.what());
    }
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  reject_unknown_keys(doc, "", {"instance", "scenario", "ga", "resources", "output_dir", "emit_plots"});

  RunConfig config;
  config.instance = default_instance();
  if (const json* v = find(doc, "instance")) {
    if (!v->is_object()) bad("instance", "expected an object");
    parse_instance(*v, config.instance);
  }

  if (config.instance.weights.size() != config.instance.item_count)
    bad("instance.weights",
        "expected " + std::to_string(config.instance.item_count) + " entries, got " +
            std::to_string(config.instance.weights.size()));
  if (config.instance.values.size() != config.instance.item_count)
    bad("instance.values",
        "expected " + std::to_string(config.instance.item_count) + " entries, got " +
            std::to_string(config.instance.values.size()));
  const auto report = validate_instance(config.instance);
  if (!report.valid()) bad("instance", report.violations.front());

  if (const json* v = find(doc, "ga")) {
    if (!v->is_object()) bad("ga", "expected an object");
    parse_ga(*v, config.scenario.ga);
  }
  if (const json* v = find(doc, "scenario")) {
    if (!v->is_object()) bad("scenario", "expected an object");
    parse_scenario(*v, config.scenario);
  }

  config.scenario.resources = default_resources(config.instance);
  if (const json* v = find(doc, "resources")) {
    if (!v->is_object()) bad("resources", "expected an object");
    parse_resources(*v, config.instance.item_count, config.scenario.resources);
  }

  if (const json* v = find(doc, "output_dir")) config.output_dir = as_string(*v, "output_dir");
  if (const json* v = find(doc, "emit_plots")) config.emit_plots = as_bool(*v, "emit_plots");

  try {
    config.scenario.validate();
    config.scenario.resources.validate(config.instance.item_count);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

std::string serialize_config(const RunConfig& config) {
  json doc;
  doc["instance"] = {{"item_count", config.instance.item_count},
                     {"weights", config.instance.weights},
                     {"values", config.instance.values},
                     {"capacity", config.instance.capacity}};
  doc["scenario"] = {{"id", config.scenario.scenario_id},
                     {"agent_count", config.scenario.agent_count},
                     {"generations", config.scenario.generations},
                     {"master_seed", config.scenario.master_seed},
                     {"satisficer_fraction", config.scenario.satisficer_fraction},
                     {"commit_after_stall", config.scenario.commit_after_stall},
                     {"fast_fraction", config.scenario.fast_fraction},
                     {"steps_per_tick", config.scenario.steps_per_tick}};
  doc["ga"] = {{"population_size", config.scenario.ga.population_size},
               {"candidate_capacity", config.scenario.ga.candidate_capacity},
               {"mutation_rate", config.scenario.ga.mutation_rate},
               {"offspring_per_generation", config.scenario.ga.offspring_per_generation},
               {"max_init_retries", config.scenario.ga.max_init_retries}};

  const auto& resources = config.scenario.resources;
  json res;
  res["scale_factors"] = resources.scale_factors;
  res["amounts"] = resources.amounts;
  const bool uniform = !resources.availability.empty() &&
                       std::all_of(resources.availability.begin(), resources.availability.end(),
                                   [&](double a) { return a == resources.availability.front(); });
  if (uniform)
    res["availability"] = resources.availability.front();
  else
    res["availability"] = resources.availability;
  doc["resources"] = std::move(res);

  doc["output_dir"] = config.output_dir;
  doc["emit_plots"] = config.emit_plots;
  return doc.dump(2) + "\n";
}

}  // namespace commons
