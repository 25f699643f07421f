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

#include <span>
#include <string>
#include <vector>

#include "fermicompress/pauli.hpp"
#include "fermicompress/sogroup.hpp"

namespace fermicompress {

enum class GateKind {
  H,
  S,
  X,
  CX,   // one control
  RY,   // RY(a) = [[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]]
  CRY,  // RY with one or more controls
  MCX,  // X controlled by every other qubit (the parity flip)
};

std::string to_string(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<int> controls;
  int target = 0;
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::H, {}, q, 0.0}; }
  static Gate s(int q) { return {GateKind::S, {}, q, 0.0}; }
  static Gate x(int q) { return {GateKind::X, {}, q, 0.0}; }
  static Gate cx(int control, int q) { return {GateKind::CX, {control}, q, 0.0}; }
  static Gate ry(int q, double angle) { return {GateKind::RY, {}, q, angle}; }
  static Gate cry(std::vector<int> controls, int q, double angle) {
    return {GateKind::CRY, std::move(controls), q, angle};
  }
  static Gate mcx(std::vector<int> controls, int q) { return {GateKind::MCX, std::move(controls), q, 0.0}; }
};

/// Throws std::invalid_argument when the gate does not fit a register of `width` qubits.
void validate_gate(const Gate& gate, int width);

/// Gates in application order over a fixed register width.
class Circuit {
 public:
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& append(Gate gate);
  Circuit& append(std::span<const Gate> gates);
  /// Appends another circuit acting on the leading qubits of this one.
  Circuit& extend(const Circuit& other);

  /// The same gates on a wider register (extra qubits untouched).
  Circuit widened(int width) const;

  /// One line per gate: "KIND c0,c1->t angle" (controls and angle only when present).
  std::string dump() const;

 private:
  int width_;
  std::vector<Gate> gates_;
};

/// Width max(1, 2m - 1): system qubits 0..m-2, middle qubit m-1, ancillas m..2m-2.
/// Tracing out the ancillas leaves (1/n) I_n (x) |+y><+y| on qubits 0..m-1.
Circuit prep_purified_vacuum(int num_qubits);

/// X/CX conjugation around one multi-controlled RY(2 theta); its unitary equals
/// givens_matrix(i, j, theta, 2^m).
std::vector<Gate> compile_givens(const GivensRotation& rotation, int num_qubits);

/// compile_givens for every factor in plan order, then MCX when parity_flip.
Circuit compile_ansatz(const RotationPlan& plan, int num_qubits);

/// One RY(2 theta_k) per qubit k; equals composing ry_givens_decomposition over k.
Circuit compile_restricted_ansatz(std::span<const double> angles, int num_qubits);

/// CX fan-out from the pivot (lowest A qubit) to the other A qubits, X S H on
/// the pivot, then the same fan-out again.
Circuit diagonalizer(const AxisPattern& pattern);

/// s in V (E_lk - E_kl) V^dag = s i (E_ll - E_kk) for (k, l) in the support of
/// `pattern`. Computed exactly by propagating |k> and |l> through V.
int diagonalizer_sign(const AxisPattern& pattern, Index k, Index l);

}  // namespace fermicompress
