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

#include "fermicompress/planner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fermicompress/gaussian.hpp"

namespace fermicompress {

namespace {

void check_distribution(const MeasurementPlan& plan, std::span<const double> probabilities) {
  if (static_cast<Index>(probabilities.size()) != plan.dimension()) {
    throw std::invalid_argument("expected " + std::to_string(plan.dimension()) + " outcome probabilities, got " +
                                std::to_string(probabilities.size()));
  }
}

double entry_value(const PlanEntry& e, std::span<const double> p, double n) {
  return e.sign * n * (p[e.l] - p[e.k]);
}

}  // namespace

std::size_t MeasurementPlan::num_entries() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.entries.size();
  return total;
}

MeasurementPlan build_plan(const QuadraticHamiltonian& hamiltonian) {
  const int m = hamiltonian.num_qubits();
  const Eigen::MatrixXd& h = hamiltonian.coefficients();
  const Index dim = hamiltonian.dimension();
  std::map<std::uint64_t, std::vector<PlanEntry>> by_mask;
  for (Index k = 0; k < dim; ++k) {
    for (Index l = k + 1; l < dim; ++l) {
      if (h(k, l) == 0.0) continue;
      by_mask[static_cast<std::uint64_t>(k ^ l)].push_back({k, l, h(k, l), 0});
    }
  }
  MeasurementPlan plan;
  plan.num_qubits = m;
  for (auto& [mask, entries] : by_mask) {
    AxisPattern pattern = AxisPattern::from_mask(mask, m);
    for (auto& e : entries) e.sign = diagonalizer_sign(pattern, e.k, e.l);
    Circuit circuit = diagonalizer(pattern);
    plan.includes_diagonal_set = plan.includes_diagonal_set || mask == 1;
    plan.groups.push_back({std::move(pattern), std::move(circuit), std::move(entries)});
  }
  return plan;
}

std::vector<EntryEstimate> estimate_entries(const PlanGroup& group, std::span<const double> probabilities) {
  const auto dim = static_cast<Index>(probabilities.size());
  if (dim != (Index{1} << group.pattern.num_qubits())) {
    throw std::invalid_argument("estimate_entries: distribution length does not match the register");
  }
  const double n = static_cast<double>(dim) / 2.0;
  std::vector<EntryEstimate> out;
  out.reserve(group.entries.size());
  for (const auto& e : group.entries) out.push_back({e.k, e.l, entry_value(e, probabilities, n), 0.0});
  return out;
}

std::vector<EntryEstimate> estimate_entries(const PlanGroup& group, const ShotCounts& counts) {
  const Index dim = Index{1} << group.pattern.num_qubits();
  const std::vector<double> p = counts.frequencies(static_cast<std::uint64_t>(dim));
  const double n = static_cast<double>(dim) / 2.0;
  const auto shots = static_cast<double>(counts.shots);
  std::vector<EntryEstimate> out;
  out.reserve(group.entries.size());
  for (const auto& e : group.entries) {
    const double pk = p[e.k];
    const double pl = p[e.l];
    const double var = (pl * (1.0 - pl) + pk * (1.0 - pk) + 2.0 * pk * pl) / shots;
    out.push_back({e.k, e.l, entry_value(e, p, n), n * std::sqrt(std::max(var, 0.0))});
  }
  return out;
}

EnergyEstimate estimate_energy(const MeasurementPlan& plan, std::span<const std::vector<double>> probabilities) {
  if (probabilities.size() != plan.groups.size()) {
    throw std::invalid_argument("estimate_energy: need one distribution per plan group");
  }
  const double n = static_cast<double>(plan.dimension()) / 2.0;
  double energy = 0.0;
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    check_distribution(plan, probabilities[g]);
    for (const auto& e : plan.groups[g].entries) energy += e.weight * entry_value(e, probabilities[g], n);
  }
  return {kEnergyScale * energy, 0.0};
}

EnergyEstimate estimate_energy(const MeasurementPlan& plan, std::span<const ShotCounts> counts) {
  if (counts.size() != plan.groups.size()) {
    throw std::invalid_argument("estimate_energy: need one count table per plan group");
  }
  const double n = static_cast<double>(plan.dimension()) / 2.0;
  double energy = 0.0;
  double variance = 0.0;
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    const std::vector<double> p = counts[g].frequencies(static_cast<std::uint64_t>(plan.dimension()));
    // Group energy = sum_x a_x P(x); the supports of distinct entries are disjoint.
    double mean = 0.0;
    double second = 0.0;
    for (const auto& e : plan.groups[g].entries) {
      const double a = kEnergyScale * e.weight * e.sign * n;
      mean += a * (p[e.l] - p[e.k]);
      second += a * a * (p[e.l] + p[e.k]);
    }
    energy += mean;
    variance += std::max(second - mean * mean, 0.0) / static_cast<double>(counts[g].shots);
  }
  return {energy, std::sqrt(variance)};
}

std::string to_string(ShotAllocation allocation) {
  return allocation == ShotAllocation::Uniform ? "uniform" : "weighted";
}

ShotAllocation parse_shot_allocation(const std::string& text) {
  if (text == "uniform") return ShotAllocation::Uniform;
  if (text == "weighted") return ShotAllocation::Weighted;
  throw std::invalid_argument("unknown shot allocation '" + text + "' (expected uniform or weighted)");
}

std::vector<std::uint64_t> allocate_shots(const MeasurementPlan& plan, std::uint64_t shots_per_group,
                                          ShotAllocation allocation) {
  if (shots_per_group == 0) throw std::invalid_argument("allocate_shots: shots must be >= 1");
  const std::size_t groups = plan.groups.size();
  std::vector<std::uint64_t> shots(groups, shots_per_group);
  if (allocation == ShotAllocation::Uniform || groups == 0) return shots;

  const std::uint64_t total = shots_per_group * groups;
  std::vector<double> weight(groups, 0.0);
  for (std::size_t g = 0; g < groups; ++g) {
    for (const auto& e : plan.groups[g].entries) weight[g] += std::abs(e.weight);
  }
  const double weight_sum = std::accumulate(weight.begin(), weight.end(), 0.0);
  // One guaranteed shot per group, the remainder split by weight.
  const std::uint64_t spare = total - groups;
  std::vector<double> remainder(groups, 0.0);
  std::uint64_t assigned = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const double exact = static_cast<double>(spare) * weight[g] / weight_sum;
    const auto whole = static_cast<std::uint64_t>(std::floor(exact));
    shots[g] = 1 + whole;
    remainder[g] = exact - static_cast<double>(whole);
    assigned += shots[g];
  }
  std::vector<std::size_t> order(groups);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&remainder](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; assigned < total; i = (i + 1) % groups, ++assigned) ++shots[order[i]];
  return shots;
}

nlohmann::json plan_to_json(const MeasurementPlan& plan) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : plan.groups) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : g.entries) {
      entries.push_back({{"k", e.k}, {"l", e.l}, {"weight", e.weight}, {"sign", e.sign}});
    }
    groups.push_back({{"pattern", g.pattern.str()},
                      {"mask", g.pattern.mask()},
                      {"circuit", g.circuit.dump()},
                      {"entries", std::move(entries)}});
  }
  return {{"num_qubits", plan.num_qubits},
          {"group_count", plan.groups.size()},
          {"includes_diagonal_set", plan.includes_diagonal_set},
          {"groups", std::move(groups)}};
}

}  // namespace fermicompress
