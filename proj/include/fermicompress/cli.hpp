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

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermicompress/models.hpp"
#include "fermicompress/vqe.hpp"

namespace fermicompress {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitResource = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Caps {
  int max_width = kDefaultMaxWidth;
  int purified_max_width = kDefaultPurifiedMaxWidth;
  Index brute_force_max_n = kDefaultBruteForceMaxOrbitals;
  int dense_check_max_m = kDefaultDenseQubitCap;
};

/// Everything a run needs. Loaded from an INI file:
///
///   [model]      kind = tight_binding_1d | tight_binding_2d | kitaev_wire |
///                       transverse_ising | custom | random
///                n, rows, cols, boundary = open | periodic, pad = true | false,
///                h_file (custom: whitespace-separated 2n x 2n matrix),
///                seed (random: dense antisymmetric h with uniform(-1, 1) entries)
///   [couplings]  t, mu, phase, delta, J, g, anisotropy (per model kind)
///   [objective]  mode, ansatz = full | restricted | custom, layout = "0-1, 2-3",
///                shots, seed, allocation = uniform | weighted, params = "0.1, -0.2"
///   [optimizer]  name = coordinate_descent | spsa | nelder_mead, budget, parity,
///                restarts, jitter, tolerance, grid_points, angle_tolerance,
///                spsa_a, spsa_c, spsa_big_a, simplex_step
///   [caps]       max_width, purified_max_width, brute_force_max_n, dense_check_max_m
///   [output]     path, trace
///
/// Unknown sections or keys are rejected.
struct RunConfig {
  std::string model_kind = "tight_binding_1d";
  ModelSpec model;
  std::string h_file;
  std::uint64_t model_seed = 0;
  ObjectiveConfig objective;
  std::vector<double> params;  // fixed parameters for `sample`, start point for `solve`
  OptimizerConfig optimizer;
  Caps caps;
  std::string output_path;
  std::string trace_path;
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

QuadraticHamiltonian build_hamiltonian(const RunConfig& config);

nlohmann::json cmd_plan(const RunConfig& config);
nlohmann::json cmd_solve(const RunConfig& config);
nlohmann::json cmd_oracle(const RunConfig& config);
nlohmann::json cmd_sample(const RunConfig& config);

/// Counts as {"outcome index": count}.
nlohmann::json counts_to_json(const ShotCounts& counts);

/// Entry point of the `fermicompress` tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermicompress
