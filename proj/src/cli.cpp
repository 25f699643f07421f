// Copyright 2026 The fermicompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermicompress/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fermicompress/errors.hpp"
#include "fermicompress/gaussian.hpp"
#include "fermicompress/matrix_io.hpp"
#include "fermicompress/planner.hpp"
#include "fermicompress/rng.hpp"

namespace fermicompress {

namespace {

namespace pt = boost::property_tree;
using json = nlohmann::json;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"model", {"kind", "n", "rows", "cols", "boundary", "pad", "h_file", "seed"}},
      {"couplings", {}},  // validated by build_model
      {"objective", {"mode", "ansatz", "layout", "shots", "seed", "allocation", "params"}},
      {"optimizer",
       {"name", "budget", "parity", "restarts", "jitter", "tolerance", "grid_points", "angle_tolerance", "spsa_a",
        "spsa_c", "spsa_big_a", "simplex_step"}},
      {"caps", {"max_width", "purified_max_width", "brute_force_max_n", "dense_check_max_m"}},
      {"output", {"path", "trace"}},
  };
  return keys;
}

template <typename T>
T value_of(const pt::ptree& node, const std::string& where) {
  try {
    return node.get_value<T>();
  } catch (const pt::ptree_bad_data&) {
    throw ConfigError(where + ": cannot parse '" + node.data() + "'");
  }
}

template <typename T>
void read(const pt::ptree& section, const std::string& name, const std::string& key, T& target) {
  if (const auto child = section.get_child_optional(key)) target = value_of<T>(*child, name + "." + key);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    items.push_back(item.substr(first, last - first + 1));
  }
  return items;
}

double parse_number(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": '" + text + "' is not a number");
  }
}

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(parse_number(item, "objective.params"));
  return out;
}

ParameterLayout parse_layout(const std::string& text) {
  ParameterLayout layout;
  for (const auto& item : split_list(text)) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ConfigError("objective.layout: expected i-j pairs, got '" + item + "'");
    const double i = parse_number(item.substr(0, dash), "objective.layout");
    const double j = parse_number(item.substr(dash + 1), "objective.layout");
    layout.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
  }
  return layout;
}

template <typename F>
auto as_config_error(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

json model_summary(const RunConfig& config, const QuadraticHamiltonian& h) {
  return {{"model", config.model_kind}, {"n", h.num_orbitals()}, {"m", h.num_qubits()}};
}

json base_report(const std::string& command, const RunConfig& config, const QuadraticHamiltonian& h) {
  json out = {{"schema_version", kSchemaVersion}, {"command", command}};
  out.update(model_summary(config, h));
  return out;
}

ObjectiveConfig objective_with_caps(const RunConfig& config) {
  ObjectiveConfig c = config.objective;
  c.max_width = config.caps.max_width;
  c.purified_max_width = config.caps.purified_max_width;
  return c;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) throw ConfigError("unknown config section [" + section + "]");
    if (body.empty() && !body.data().empty()) throw ConfigError("config key '" + section + "' outside a section");
    if (section == "couplings") continue;
    for (const auto& [key, value] : body) {
      if (!known->second.contains(key)) throw ConfigError("unknown config key " + section + "." + key);
    }
  }

  RunConfig c;
  const pt::ptree empty;
  const auto& model = tree.get_child("model", empty);
  read(model, "model", "kind", c.model_kind);
  if (c.model_kind != "custom" && c.model_kind != "random") {
    c.model.kind = as_config_error("model.kind", [&] { return parse_model_kind(c.model_kind); });
  }
  read(model, "model", "n", c.model.num_orbitals);
  read(model, "model", "rows", c.model.rows);
  read(model, "model", "cols", c.model.cols);
  if (const auto b = model.get_optional<std::string>("boundary")) {
    c.model.boundary = as_config_error("model.boundary", [&] { return parse_boundary(*b); });
  }
  read(model, "model", "pad", c.model.pad_to_power_of_two);
  read(model, "model", "h_file", c.h_file);
  read(model, "model", "seed", c.model_seed);
  for (const auto& [name, value] : tree.get_child("couplings", empty)) {
    c.model.couplings[name] = value_of<double>(value, "couplings." + name);
  }

  const auto& objective = tree.get_child("objective", empty);
  if (const auto v = objective.get_optional<std::string>("mode")) {
    c.objective.mode = as_config_error("objective.mode", [&] { return parse_objective_mode(*v); });
  }
  if (const auto v = objective.get_optional<std::string>("ansatz")) {
    c.objective.ansatz = as_config_error("objective.ansatz", [&] { return parse_ansatz_kind(*v); });
  }
  if (const auto v = objective.get_optional<std::string>("layout")) c.objective.custom_layout = parse_layout(*v);
  read(objective, "objective", "shots", c.objective.shots);
  read(objective, "objective", "seed", c.objective.base_seed);
  if (const auto v = objective.get_optional<std::string>("allocation")) {
    c.objective.allocation = as_config_error("objective.allocation", [&] { return parse_shot_allocation(*v); });
  }
  if (const auto v = objective.get_optional<std::string>("params")) c.params = parse_params(*v);
  if (c.objective.ansatz == AnsatzKind::Custom && c.objective.custom_layout.empty()) {
    throw ConfigError("objective.layout is required for the custom ansatz");
  }

  const auto& optimizer = tree.get_child("optimizer", empty);
  if (const auto v = optimizer.get_optional<std::string>("name")) {
    c.optimizer.kind = as_config_error("optimizer.name", [&] { return parse_optimizer_kind(*v); });
  }
  if (const auto v = optimizer.get_optional<std::string>("parity")) {
    c.optimizer.parity = as_config_error("optimizer.parity", [&] { return parse_parity_choice(*v); });
  }
  read(optimizer, "optimizer", "budget", c.optimizer.budget);
  read(optimizer, "optimizer", "restarts", c.optimizer.restarts);
  read(optimizer, "optimizer", "jitter", c.optimizer.jitter);
  read(optimizer, "optimizer", "tolerance", c.optimizer.tolerance);
  read(optimizer, "optimizer", "grid_points", c.optimizer.grid_points);
  read(optimizer, "optimizer", "angle_tolerance", c.optimizer.angle_tolerance);
  read(optimizer, "optimizer", "spsa_a", c.optimizer.spsa_a);
  read(optimizer, "optimizer", "spsa_c", c.optimizer.spsa_c);
  read(optimizer, "optimizer", "spsa_big_a", c.optimizer.spsa_big_a);
  read(optimizer, "optimizer", "simplex_step", c.optimizer.simplex_step);
  if (c.optimizer.budget < 1) throw ConfigError("optimizer.budget must be >= 1");
  if (c.optimizer.restarts < 0) throw ConfigError("optimizer.restarts must be >= 0");

  const auto& caps = tree.get_child("caps", empty);
  read(caps, "caps", "max_width", c.caps.max_width);
  read(caps, "caps", "purified_max_width", c.caps.purified_max_width);
  read(caps, "caps", "brute_force_max_n", c.caps.brute_force_max_n);
  read(caps, "caps", "dense_check_max_m", c.caps.dense_check_max_m);

  const auto& output = tree.get_child("output", empty);
  read(output, "output", "path", c.output_path);
  read(output, "output", "trace", c.trace_path);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

QuadraticHamiltonian build_hamiltonian(const RunConfig& config) {
  if (config.model_kind == "custom") {
    if (config.h_file.empty()) throw ConfigError("model.h_file is required for kind = custom");
    return as_config_error("model.h_file", [&] { return QuadraticHamiltonian(load_dense_matrix(config.h_file)); });
  }
  if (config.model_kind == "random") {
    const Index n = config.model.num_orbitals;
    if (n < 1) throw ConfigError("model.n must be positive for kind = random");
    Rng rng(config.model_seed);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Index i = 0; i < 2 * n; ++i) {
      for (Index j = i + 1; j < 2 * n; ++j) {
        h(i, j) = rng.uniform(-1.0, 1.0);
        h(j, i) = -h(i, j);
      }
    }
    return as_config_error("model", [&] { return QuadraticHamiltonian(std::move(h)); });
  }
  return as_config_error("model", [&] { return build_model(config.model); });
}

json counts_to_json(const ShotCounts& counts) {
  json out = json::object();
  for (const auto& [outcome, c] : counts.counts) out[std::to_string(outcome)] = c;
  return out;
}

json cmd_plan(const RunConfig& config) {
  const QuadraticHamiltonian h = build_hamiltonian(config);
  json out = base_report("plan", config, h);
  out.update(plan_to_json(build_plan(h)));
  return out;
}

json cmd_oracle(const RunConfig& config) {
  const QuadraticHamiltonian h = build_hamiltonian(config);
  json out = base_report("oracle", config, h);
  const SpectralResult spectral = spectral_ground_energy(h);
  out["spectral_energy"] = spectral.energy;
  out["mode_energies"] = spectral.mode_energies;
  if (h.num_orbitals() <= config.caps.brute_force_max_n) {
    const ParitySectorEnergies sectors = brute_force_sector_energies(h, config.caps.brute_force_max_n);
    out["brute_force_energy"] = std::min(sectors.even, sectors.odd);
    out["brute_force_sector_energies"] = {{"even", sectors.even}, {"odd", sectors.odd}};
  }
  return out;
}

json cmd_solve(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const QuadraticHamiltonian h = build_hamiltonian(config);
  const ObjectiveConfig objective = objective_with_caps(config);
  OptimizerConfig optimizer = config.optimizer;
  if (!config.params.empty()) optimizer.initial_params = config.params;

  const OptimizationResult result = optimize(h, objective, optimizer);
  const double oracle = spectral_ground_energy(h).energy;
  const std::size_t groups = build_plan(h).groups.size();
  const bool sampled = objective.mode == ObjectiveMode::CircuitSampled;

  if (!config.trace_path.empty()) {
    std::ofstream trace(config.trace_path);
    if (!trace) throw ConfigError("cannot write trace file '" + config.trace_path + "'");
    write_trace_csv(trace, result.trace);
  }

  json out = base_report("solve", config, h);
  out["mode"] = to_string(objective.mode);
  out["ansatz"] = to_string(objective.ansatz);
  out["optimizer"] = to_string(optimizer.kind);
  out["parity_flip"] = result.parity_flip;
  out["energy"] = result.best_energy;
  out["stderr"] = result.best_std_error;
  out["oracle_energy"] = oracle;
  out["gap"] = result.best_energy - oracle;
  out["groups_used"] = groups;
  out["shots"] = sampled ? objective.shots : 0;
  out["seed"] = objective.base_seed;
  out["evaluations"] = result.evaluations;
  out["budget_exhausted"] = result.budget_exhausted;
  out["params"] = result.best_params;
  out["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

json cmd_sample(const RunConfig& config) {
  const QuadraticHamiltonian h = build_hamiltonian(config);
  ObjectiveConfig objective = objective_with_caps(config);
  objective.mode = ObjectiveMode::CircuitSampled;
  objective.parity_flip = config.optimizer.parity == ParityChoice::Odd;
  const Objective f(h, objective);
  std::vector<double> params = config.params;
  if (params.empty()) params.assign(f.num_parameters(), 0.0);
  if (params.size() != f.num_parameters()) {
    throw ConfigError("objective.params has " + std::to_string(params.size()) + " entries, the ansatz takes " +
                      std::to_string(f.num_parameters()));
  }
  const std::vector<ShotCounts> counts = f.sample_groups(params, objective.base_seed);
  const EnergyEstimate estimate = estimate_energy(f.plan(), counts);

  json out = base_report("sample", config, h);
  out["ansatz"] = to_string(objective.ansatz);
  out["parity_flip"] = objective.parity_flip;
  out["shots"] = objective.shots;
  out["allocation"] = to_string(objective.allocation);
  out["seed"] = objective.base_seed;
  out["params"] = params;
  json groups = json::array();
  for (std::size_t g = 0; g < counts.size(); ++g) {
    groups.push_back({{"pattern", f.plan().groups[g].pattern.str()},
                      {"shots", counts[g].shots},
                      {"counts", counts_to_json(counts[g])}});
  }
  out["groups"] = std::move(groups);
  out["energy"] = estimate.energy;
  out["stderr"] = estimate.std_error;
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compressed free-fermion simulation: measurement plans, oracles and VQE."};
  app.name("fermicompress");
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  std::optional<std::string> mode;
  std::string out_path;
  std::string trace_path;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"plan", "Print the measurement plan for the model"},
      {"solve", "Run the variational optimization"},
      {"oracle", "Exact ground energy from the single-particle spectrum (and brute force when small)"},
      {"sample", "Raw shot counts per measurement group at fixed parameters"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "INI run configuration")->required();
    sub->add_option("--seed", seed, "Base seed (overrides objective.seed)");
    sub->add_option("--shots", shots, "Shots per group (overrides objective.shots)");
    sub->add_option("--mode", mode, "matrix | circuit_exact | circuit_sampled");
    sub->add_option("--out", out_path, "Also write the JSON result here");
    if (name == "solve") sub->add_option("--trace", trace_path, "Write the optimization trace as CSV");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    RunConfig config = load_config(config_path);
    if (seed) config.objective.base_seed = *seed;
    if (shots) config.objective.shots = *shots;
    if (mode) config.objective.mode = as_config_error("--mode", [&] { return parse_objective_mode(*mode); });
    if (!out_path.empty()) config.output_path = out_path;
    if (!trace_path.empty()) config.trace_path = trace_path;
    if (config.objective.shots == 0) throw ConfigError("shots must be >= 1");

    json result;
    if (command == "plan") result = cmd_plan(config);
    if (command == "solve") result = cmd_solve(config);
    if (command == "oracle") result = cmd_oracle(config);
    if (command == "sample") result = cmd_sample(config);

    const std::string text = result.dump(2) + "\n";
    out << text;
    if (!config.output_path.empty()) {
      std::ofstream file(config.output_path);
      if (!file) throw ConfigError("cannot write output file '" + config.output_path + "'");
      file << text;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ResourceLimitError& e) {
    err << "resource cap: " << e.what() << "\n(raise the matching key in the [caps] section to allow it)\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace fermicompress
