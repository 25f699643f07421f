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
#include <string>

#include <Eigen/Dense>

#include "fermicompress/pauli.hpp"

namespace fermicompress {

/// Largest orbital count accepted by the exact Jordan-Wigner diagonalization.
inline constexpr Index kDefaultBruteForceMaxOrbitals = 12;

/// H = i * sum_{j != k} h_{jk} gamma_j gamma_k over n orbitals (2n Majorana modes),
/// with c_j = (gamma_{2j} + i gamma_{2j+1}) / 2.
///
/// The coefficient matrix is exactly antisymmetric (h^T == -h bitwise) and its
/// dimension 2n is a power of two, so it fits the compressed register of
/// m = log2(n) + 1 qubits.
class QuadraticHamiltonian {
 public:
  explicit QuadraticHamiltonian(Eigen::MatrixXd h);

  static QuadraticHamiltonian zero(Index num_orbitals);

  Index num_orbitals() const { return h_.rows() / 2; }
  Index dimension() const { return h_.rows(); }
  int num_qubits() const;
  const Eigen::MatrixXd& coefficients() const { return h_; }

  /// The compressed operator A = i h.
  Eigen::MatrixXcd compressed_operator() const;

 private:
  Eigen::MatrixXd h_;
};

enum class ModelKind { TightBinding1D, TightBinding2D, KitaevWire, TransverseIsing };
enum class Boundary { Open, Periodic };

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& text);
std::string to_string(Boundary boundary);
Boundary parse_boundary(const std::string& text);

/// Couplings by model:
///   TightBinding1D/2D: t (hopping), mu (chemical potential), phase (Peierls phase of t)
///   KitaevWire:        t, delta (p-wave pairing), mu, phase
///   TransverseIsing:   J (exchange), g (transverse field), anisotropy (1 = Ising, 0 = XX)
/// Missing couplings take their defaults (t = J = g = anisotropy = 1, delta = t, others 0).
struct ModelSpec {
  ModelKind kind = ModelKind::TightBinding1D;
  std::map<std::string, double> couplings;
  Index num_orbitals = 0;  // 1D models
  Index rows = 0;          // 2D models
  Index cols = 0;
  Boundary boundary = Boundary::Open;
  /// Pad non-power-of-two sizes with decoupled zero-energy orbitals.
  bool pad_to_power_of_two = false;
};

QuadraticHamiltonian build_model(const ModelSpec& spec);

/// a_{j,k} = i [[h_{2j,2k}, h_{2j,2k+1}], [h_{2j+1,2k}, h_{2j+1,2k+1}]].
Eigen::Matrix2cd block(const QuadraticHamiltonian& hamiltonian, Index j, Index k);

/// Jordan-Wigner image of gamma_k gamma_l (k < l) as coefficient * word on n qubits.
struct ScaledPauliWord {
  PauliWord word;
  std::complex<double> coefficient;
};
ScaledPauliWord majorana_pair_word(Index k, Index l, Index num_orbitals);

/// Dense Jordan-Wigner matrix of H on 2^n states. Oracle; n <= max_orbitals.
Eigen::MatrixXcd brute_force_matrix(const QuadraticHamiltonian& hamiltonian,
                                    Index max_orbitals = kDefaultBruteForceMaxOrbitals);

/// Lowest eigenvalue of brute_force_matrix.
double brute_force_ground_energy(const QuadraticHamiltonian& hamiltonian,
                                 Index max_orbitals = kDefaultBruteForceMaxOrbitals);

/// Lowest eigenvalue inside each fermion-parity sector (even: even popcount).
struct ParitySectorEnergies {
  double even;
  double odd;
};
ParitySectorEnergies brute_force_sector_energies(const QuadraticHamiltonian& hamiltonian,
                                                 Index max_orbitals = kDefaultBruteForceMaxOrbitals);

/// <0...0| H |0...0> from the Jordan-Wigner words acting on the empty state.
double brute_force_vacuum_energy(const QuadraticHamiltonian& hamiltonian);

}  // namespace fermicompress
