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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fermicompress/circuits.hpp"
#include "fermicompress/errors.hpp"
#include "fermicompress/pauli.hpp"

namespace fermicompress {

inline constexpr int kDefaultMaxWidth = 24;
inline constexpr int kDefaultPurifiedMaxWidth = 25;

using Amplitudes = std::vector<std::complex<double>>;

/// Amplitudes over 2^width basis states; qubit 0 is the most significant index bit.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int width);
  static StateVector basis(int width, std::uint64_t index);
  /// Throws when the length is not 2^width or the norm is off by more than 1e-10.
  static StateVector from_amplitudes(int width, Amplitudes amplitudes);

  int width() const { return width_; }
  std::uint64_t size() const { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  std::complex<double> operator[](std::uint64_t i) const { return amplitudes_[i]; }

  double norm() const;
  void apply(const Gate& gate);

 private:
  StateVector(int width, Amplitudes amplitudes);

  int width_;
  Amplitudes amplitudes_;
};

/// Throws ResourceLimitError when width exceeds max_width.
void check_width(int width, int max_width);

StateVector run(const Circuit& circuit, int max_width = kDefaultMaxWidth);
/// Applies `circuit` to `initial`; the circuit may be narrower than the state.
StateVector run(const Circuit& circuit, StateVector initial, int max_width = kDefaultMaxWidth);

/// Outcome probabilities of qubits 0..system_qubits-1 with the rest traced out.
std::vector<double> system_probabilities(const StateVector& state, int system_qubits);

/// system_probabilities of diagonalizer(pattern) applied to the leading qubits of
/// `state`, computed in one pass without copying the state.
std::vector<double> pattern_probabilities(const StateVector& state, const AxisPattern& pattern);

/// Reduced density matrix of the leading system qubits. Test utility.
Eigen::MatrixXcd reduced_density(const StateVector& state, int system_qubits,
                                 int max_system_qubits = kDefaultDenseQubitCap);

struct ShotCounts {
  std::map<std::uint64_t, std::uint64_t> counts;  // outcome index -> count (zeros omitted)
  std::uint64_t shots = 0;

  std::uint64_t count(std::uint64_t outcome) const;
  /// Empirical distribution over `dimension` outcomes.
  std::vector<double> frequencies(std::uint64_t dimension) const;
};

/// Multinomial draw by inverse-CDF lookup of one uniform per shot.
ShotCounts sample(std::span<const double> probabilities, std::uint64_t shots, std::uint64_t seed);

/// Dense unitary, column j = run(circuit, |j>). Test utility.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit, int max_width = kDefaultDenseQubitCap);

}  // namespace fermicompress
