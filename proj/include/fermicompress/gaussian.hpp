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
#include <vector>

#include <Eigen/Dense>

#include "fermicompress/models.hpp"
#include "fermicompress/sogroup.hpp"

namespace fermicompress {

/// Energy per covariance entry: <H> = kEnergyScale * sum_{j<k} h_{jk} Gamma_{jk}.
/// Calibrated against the Jordan-Wigner oracle (see test_gaussian.cpp).
inline constexpr double kEnergyScale = 2.0;

/// Gamma_{kl} = (i/2) Tr(omega [gamma_k, gamma_l]); real antisymmetric, 2n x 2n.
class CovarianceMatrix {
 public:
  /// Accepts antisymmetry residuals up to 1e-12 and symmetrizes them away.
  explicit CovarianceMatrix(Eigen::MatrixXd gamma);

  const Eigen::MatrixXd& matrix() const { return gamma_; }
  Index dimension() const { return gamma_.rows(); }
  Index num_orbitals() const { return gamma_.rows() / 2; }
  double operator()(Index k, Index l) const { return gamma_(k, l); }

  /// Gamma^2 = -I within tolerance.
  bool is_pure(double tolerance = 1e-10) const;

 private:
  Eigen::MatrixXd gamma_;
};

/// rho = (I + i Gamma) / 2n on m = log2(n) + 1 qubits.
struct CompressedState {
  Eigen::MatrixXcd rho;
};

CovarianceMatrix vacuum_covariance(Index num_orbitals);

CompressedState compressed_density(const CovarianceMatrix& gamma);

/// R Gamma R^T for orthogonal R (||R^T R - I|| < 1e-10).
CovarianceMatrix rotate_covariance(const CovarianceMatrix& gamma, const Eigen::MatrixXd& rotation);

/// Same conjugation applied factor by factor, O(dim) per Givens rotation.
CovarianceMatrix rotate_covariance(const CovarianceMatrix& gamma, const RotationPlan& plan);

/// <gamma_k gamma_l> = -i Gamma_{kl}; k == l is rejected.
std::complex<double> two_point(const CovarianceMatrix& gamma, Index k, Index l);

double energy_from_covariance(const QuadraticHamiltonian& hamiltonian, const CovarianceMatrix& gamma);

struct SpectralResult {
  double energy;
  std::vector<double> mode_energies;  // ascending, each >= 0
};

/// Ground energy -2 sum_k eps_k from the +-eps_k spectrum of i h.
SpectralResult spectral_ground_energy(const QuadraticHamiltonian& hamiltonian);

}  // namespace fermicompress
