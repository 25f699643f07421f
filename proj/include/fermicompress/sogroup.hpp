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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fermicompress/pauli.hpp"

namespace fermicompress {

/// Planar rotation of Majorana axes i < j by theta: rows/cols (i, j) carry
/// [[cos, -sin], [sin, cos]].
struct GivensRotation {
  Index i = 0;
  Index j = 1;
  double theta = 0.0;
};

/// Rotations in application order. The composed matrix is
/// R = P^{parity_flip} * G_last * ... * G_first, where P is the improper factor
/// swapping the last two basis indices (the fully-controlled X).
struct RotationPlan {
  std::vector<GivensRotation> rotations;
  bool parity_flip = false;
};

using ParameterLayout = std::vector<std::pair<Index, Index>>;

Eigen::MatrixXd givens_matrix(Index i, Index j, double theta, Index dim);

/// Det -1 permutation exchanging basis indices dim-2 and dim-1.
Eigen::MatrixXd parity_flip_matrix(Index dim);

Eigen::MatrixXd compose_rotation(const RotationPlan& plan, Index dim);

/// M <- G M for a single Givens factor, touching only rows i and j.
void apply_givens_rows(Eigen::MatrixXd& matrix, const GivensRotation& rotation);

/// All pairs i < j over 2^m axes in lexicographic order: n(2n - 1) entries.
ParameterLayout full_parameter_layout(int num_qubits);

/// Givens factors whose product equals a real rotation by theta on qubit k,
/// i.e. the gate RY(2 theta) embedded at qubit k of an m-qubit register.
std::vector<GivensRotation> ry_givens_decomposition(int qubit, int num_qubits, double theta);

/// Binds angles to a layout, in layout order.
RotationPlan plan_from_layout(const ParameterLayout& layout, const std::vector<double>& angles,
                              bool parity_flip = false);

}  // namespace fermicompress
