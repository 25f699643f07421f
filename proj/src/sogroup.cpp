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

#include "fermicompress/sogroup.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fermicompress {

namespace {

void check_rotation(const GivensRotation& r, Index dim) {
  if (r.i < 0 || r.i >= r.j || r.j >= dim) {
    throw std::invalid_argument("Givens rotation (" + std::to_string(r.i) + ", " + std::to_string(r.j) +
                                ") invalid for dimension " + std::to_string(dim));
  }
}

}  // namespace

Eigen::MatrixXd givens_matrix(Index i, Index j, double theta, Index dim) {
  check_rotation({i, j, theta}, dim);
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(dim, dim);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  g(i, i) = c;
  g(i, j) = -s;
  g(j, i) = s;
  g(j, j) = c;
  return g;
}

Eigen::MatrixXd parity_flip_matrix(Index dim) {
  if (dim < 2) throw std::invalid_argument("parity flip needs dimension >= 2");
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(dim, dim);
  p(dim - 2, dim - 2) = 0.0;
  p(dim - 1, dim - 1) = 0.0;
  p(dim - 2, dim - 1) = 1.0;
  p(dim - 1, dim - 2) = 1.0;
  return p;
}

void apply_givens_rows(Eigen::MatrixXd& matrix, const GivensRotation& rotation) {
  check_rotation(rotation, matrix.rows());
  const double c = std::cos(rotation.theta);
  const double s = std::sin(rotation.theta);
  for (Index col = 0; col < matrix.cols(); ++col) {
    const double a = matrix(rotation.i, col);
    const double b = matrix(rotation.j, col);
    matrix(rotation.i, col) = c * a - s * b;
    matrix(rotation.j, col) = s * a + c * b;
  }
}

Eigen::MatrixXd compose_rotation(const RotationPlan& plan, Index dim) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(dim, dim);
  for (const auto& g : plan.rotations) apply_givens_rows(r, g);
  if (plan.parity_flip) r.row(dim - 2).swap(r.row(dim - 1));
  return r;
}

ParameterLayout full_parameter_layout(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 20) throw std::invalid_argument("full_parameter_layout: bad qubit count");
  const Index dim = Index{1} << num_qubits;
  ParameterLayout layout;
  layout.reserve(static_cast<std::size_t>(dim * (dim - 1) / 2));
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j) layout.emplace_back(i, j);
  }
  return layout;
}

std::vector<GivensRotation> ry_givens_decomposition(int qubit, int num_qubits, double theta) {
  if (num_qubits < 1 || num_qubits > 40) throw std::invalid_argument("ry_givens_decomposition: bad qubit count");
  if (qubit < 0 || qubit >= num_qubits) {
    throw std::out_of_range("ry_givens_decomposition: qubit " + std::to_string(qubit) + " out of range");
  }
  // Blocks of 2^{m-k} indices; inside each block the first half pairs with the second.
  const Index block = Index{1} << (num_qubits - qubit);
  const Index half = block / 2;
  const Index blocks = Index{1} << qubit;
  std::vector<GivensRotation> out;
  out.reserve(static_cast<std::size_t>(blocks * half));
  for (Index b = 0; b < blocks; ++b) {
    for (Index j = 0; j < half; ++j) out.push_back({b * block + j, b * block + j + half, theta});
  }
  return out;
}

RotationPlan plan_from_layout(const ParameterLayout& layout, const std::vector<double>& angles, bool parity_flip) {
  if (layout.size() != angles.size()) {
    throw std::invalid_argument("expected " + std::to_string(layout.size()) + " angles, got " +
                                std::to_string(angles.size()));
  }
  RotationPlan plan;
  plan.parity_flip = parity_flip;
  plan.rotations.reserve(layout.size());
  for (std::size_t p = 0; p < layout.size(); ++p) {
    plan.rotations.push_back({layout[p].first, layout[p].second, angles[p]});
  }
  return plan;
}

}  // namespace fermicompress
