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
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fermicompress/circuits.hpp"
#include "fermicompress/gaussian.hpp"
#include "fermicompress/models.hpp"
#include "fermicompress/planner.hpp"
#include "fermicompress/simulator.hpp"
#include "fermicompress/sogroup.hpp"

namespace fermicompress {

enum class ObjectiveMode { Matrix, CircuitExact, CircuitSampled };
enum class AnsatzKind { Full, Restricted, Custom };

std::string to_string(ObjectiveMode mode);
ObjectiveMode parse_objective_mode(const std::string& text);
std::string to_string(AnsatzKind kind);
AnsatzKind parse_ansatz_kind(const std::string& text);

struct ObjectiveConfig {
  ObjectiveMode mode = ObjectiveMode::Matrix;
  AnsatzKind ansatz = AnsatzKind::Full;
  ParameterLayout custom_layout;  // AnsatzKind::Custom only
  bool parity_flip = false;
  std::uint64_t shots = 10000;  // per group, sampled mode
  ShotAllocation allocation = ShotAllocation::Uniform;
  std::uint64_t base_seed = 0;
  int max_width = kDefaultMaxWidth;
  int purified_max_width = kDefaultPurifiedMaxWidth;
};

/// One real rotation per qubit: parameter k expands to the Givens factors
/// ry_givens_decomposition(k, m, theta_k), m * 2^(m-1) factors in total.
struct RestrictedAnsatz {
  int num_qubits = 1;

  std::size_t num_parameters() const { return static_cast<std::size_t>(num_qubits); }
  std::size_t num_givens() const;
  RotationPlan expand(std::span<const double> angles, bool parity_flip = false) const;
};

RestrictedAnsatz build_restricted_ansatz(int num_qubits);

struct ObjectiveValue {
  double energy = 0.0;
  double std_error = 0.0;
};

/// <H> for the rotated vacuum R Gamma_0 R^T, evaluated in one of three ways:
///   Matrix:         energy_from_covariance on the rotated covariance matrix.
///   CircuitExact:   purified prep + compiled ansatz, exact pattern probabilities.
///   CircuitSampled: as CircuitExact, then finite shots per group.
/// The prepared purified state and the measurement plan are built once.
class Objective {
 public:
  Objective(QuadraticHamiltonian hamiltonian, ObjectiveConfig config);

  const QuadraticHamiltonian& hamiltonian() const { return hamiltonian_; }
  const ObjectiveConfig& config() const { return config_; }
  const MeasurementPlan& plan() const { return plan_; }
  std::size_t num_parameters() const;

  RotationPlan rotation_plan(std::span<const double> params) const;
  Circuit ansatz_circuit(std::span<const double> params) const;

  /// Throws std::invalid_argument on a parameter count mismatch. `seed` only
  /// matters in sampled mode; group g draws with derive_seed(seed, g).
  ObjectiveValue evaluate(std::span<const double> params, std::uint64_t seed) const;
  ObjectiveValue evaluate(std::span<const double> params) const { return evaluate(params, config_.base_seed); }

  /// Purified state after the ansatz (circuit modes).
  StateVector prepared_state(std::span<const double> params) const;
  /// Exact per-group outcome distributions (circuit modes).
  std::vector<std::vector<double>> group_probabilities(std::span<const double> params) const;
  /// Per-group shot counts with the configured allocation (circuit modes).
  std::vector<ShotCounts> sample_groups(std::span<const double> params, std::uint64_t seed) const;

 private:
  void check_params(std::span<const double> params) const;

  QuadraticHamiltonian hamiltonian_;
  ObjectiveConfig config_;
  int num_qubits_;
  ParameterLayout layout_;
  MeasurementPlan plan_;
  std::vector<std::uint64_t> shots_;
  std::shared_ptr<const StateVector> vacuum_;  // circuit modes
};

ObjectiveValue evaluate_objective(const QuadraticHamiltonian& hamiltonian, std::span<const double> params,
                                  const ObjectiveConfig& config);

enum class OptimizerKind { CoordinateDescent, Spsa, NelderMead };
enum class ParityChoice { Even, Odd, Auto };

std::string to_string(OptimizerKind kind);
OptimizerKind parse_optimizer_kind(const std::string& text);
std::string to_string(ParityChoice parity);
ParityChoice parse_parity_choice(const std::string& text);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::CoordinateDescent;
  std::uint64_t budget = 2000000;  // objective evaluations, shared by all restarts and sectors
  ParityChoice parity = ParityChoice::Auto;
  int restarts = 2;        // extra starts from the incumbent plus uniform(-jitter, jitter)
  double jitter = 0.1;
  double tolerance = 1e-9;  // stop when a sweep improves by less (exact modes)
  // Coordinate descent
  int grid_points = 8;
  double angle_tolerance = 1e-7;
  // SPSA
  double spsa_a = 0.2;
  double spsa_c = 0.1;
  double spsa_big_a = 10.0;
  // Nelder-Mead
  double simplex_step = 0.5;
  std::vector<double> initial_params;  // empty = all zeros
};

struct TracePoint {
  std::uint64_t iteration = 0;
  double energy = 0.0;
  double std_error = 0.0;
  double step = 0.0;
};

struct OptimizationResult {
  std::vector<double> best_params;
  double best_energy = 0.0;
  double best_std_error = 0.0;
  bool parity_flip = false;
  std::vector<TracePoint> trace;  // incumbent after each iteration
  std::uint64_t evaluations = 0;
  bool budget_exhausted = false;
};

/// Deterministic given config.base_seed. ParityChoice::Auto splits the budget
/// between the even sector and the parity-flipped odd sector and keeps the lower.
OptimizationResult optimize(const QuadraticHamiltonian& hamiltonian, const ObjectiveConfig& config,
                            const OptimizerConfig& optimizer);

/// CSV with header "iteration,energy,stderr,step".
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace);

}  // namespace fermicompress
