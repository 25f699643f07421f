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
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermicompress/circuits.hpp"
#include "fermicompress/models.hpp"
#include "fermicompress/pauli.hpp"
#include "fermicompress/simulator.hpp"

namespace fermicompress {

struct PlanEntry {
  Index k = 0;
  Index l = 0;
  double weight = 0.0;  // h_{kl}
  int sign = 1;         // diagonalizer_sign(pattern, k, l)
};

struct PlanGroup {
  AxisPattern pattern;
  Circuit circuit;
  std::vector<PlanEntry> entries;  // ordered by k
};

struct MeasurementPlan {
  int num_qubits = 0;
  std::vector<PlanGroup> groups;  // ordered by pattern mask
  /// True when a group covers the on-site blocks a_{j,j} (pattern D...DA).
  bool includes_diagonal_set = false;

  Index dimension() const { return Index{1} << num_qubits; }
  std::size_t num_entries() const;
};

/// One group per distinct set_of_element(k, l) over the nonzero h_{kl}, k < l.
/// Empty groups are omitted, so h = 0 yields no groups.
MeasurementPlan build_plan(const QuadraticHamiltonian& hamiltonian);

struct EntryEstimate {
  Index k = 0;
  Index l = 0;
  double value = 0.0;
  double std_error = 0.0;
};

/// Gamma_kl = sign * n * (P(l) - P(k)) from exact outcome probabilities.
std::vector<EntryEstimate> estimate_entries(const PlanGroup& group, std::span<const double> probabilities);

/// Same estimator on empirical frequencies, with the multinomial standard error
/// n * sqrt((P(l)(1 - P(l)) + P(k)(1 - P(k)) + 2 P(k) P(l)) / shots).
std::vector<EntryEstimate> estimate_entries(const PlanGroup& group, const ShotCounts& counts);

struct EnergyEstimate {
  double energy = 0.0;
  double std_error = 0.0;
};

/// kEnergyScale * sum of weight * Gamma over every plan entry; std_error is 0.
EnergyEstimate estimate_energy(const MeasurementPlan& plan,
                               std::span<const std::vector<double>> probabilities);

/// Sampled counterpart. Within a group the energy is one linear functional of
/// the multinomial frequencies, so its variance is exact up to plugging in the
/// empirical P; groups add in quadrature.
EnergyEstimate estimate_energy(const MeasurementPlan& plan, std::span<const ShotCounts> counts);

enum class ShotAllocation { Uniform, Weighted };

std::string to_string(ShotAllocation allocation);
ShotAllocation parse_shot_allocation(const std::string& text);

/// Uniform: every group gets shots_per_group. Weighted: the total
/// shots_per_group * groups is split proportionally to sum |weight| by largest
/// remainder, with at least one shot per group.
std::vector<std::uint64_t> allocate_shots(const MeasurementPlan& plan, std::uint64_t shots_per_group,
                                          ShotAllocation allocation);

/// {"num_qubits", "group_count", "includes_diagonal_set", "groups": [{"pattern",
/// "mask", "circuit", "entries": [{"k", "l", "weight", "sign"}]}]}.
nlohmann::json plan_to_json(const MeasurementPlan& plan);

}  // namespace fermicompress
