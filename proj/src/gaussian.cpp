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

#include "fermicompress/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace fermicompress {

namespace {

constexpr double kAntisymmetryTolerance = 1e-12;
constexpr double kOrthogonalityTolerance = 1e-10;

void reantisymmetrize_if_drifted(Eigen::MatrixXd& gamma) {
  const double residual = (gamma + gamma.transpose()).cwiseAbs().maxCoeff();
  if (residual > kAntisymmetryTolerance) gamma = 0.5 * (gamma - gamma.transpose()).eval();
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd gamma) : gamma_(std::move(gamma)) {
  if (gamma_.rows() != gamma_.cols() || gamma_.rows() < 2 || gamma_.rows() % 2) {
    throw std::invalid_argument("covariance matrix must be square with even dimension");
  }
  const double scale = std::max(1.0, gamma_.cwiseAbs().maxCoeff());
  const double residual = (gamma_ + gamma_.transpose()).cwiseAbs().maxCoeff();
  if (!(residual <= kAntisymmetryTolerance * scale)) {
    throw std::invalid_argument("covariance matrix is not antisymmetric (residual " + std::to_string(residual) + ")");
  }
  if (residual > 0.0) gamma_ = 0.5 * (gamma_ - gamma_.transpose()).eval();
}

bool CovarianceMatrix::is_pure(double tolerance) const {
  const Eigen::MatrixXd sq = gamma_ * gamma_;
  return (sq + Eigen::MatrixXd::Identity(dimension(), dimension())).cwiseAbs().maxCoeff() <= tolerance;
}

CovarianceMatrix vacuum_covariance(Index num_orbitals) {
  if (num_orbitals < 1 || (num_orbitals & (num_orbitals - 1))) {
    throw std::invalid_argument("vacuum_covariance: orbital count must be a power of two");
  }
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(2 * num_orbitals, 2 * num_orbitals);
  for (Index l = 0; l < num_orbitals; ++l) {
    gamma(2 * l, 2 * l + 1) = -1.0;
    gamma(2 * l + 1, 2 * l) = 1.0;
  }
  return CovarianceMatrix(std::move(gamma));
}

CompressedState compressed_density(const CovarianceMatrix& gamma) {
  const Index dim = gamma.dimension();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(dim, dim);
  rho += std::complex<double>(0.0, 1.0) * gamma.matrix().cast<std::complex<double>>();
  rho /= static_cast<double>(dim);
  return {std::move(rho)};
}

CovarianceMatrix rotate_covariance(const CovarianceMatrix& gamma, const Eigen::MatrixXd& rotation) {
  const Index dim = gamma.dimension();
  if (rotation.rows() != dim || rotation.cols() != dim) {
    throw std::invalid_argument("rotate_covariance: dimension mismatch");
  }
  const double residual =
      (rotation.transpose() * rotation - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (!(residual < kOrthogonalityTolerance)) {
    throw std::invalid_argument("rotate_covariance: matrix is not orthogonal (residual " +
                                std::to_string(residual) + ")");
  }
  Eigen::MatrixXd out = rotation * gamma.matrix() * rotation.transpose();
  reantisymmetrize_if_drifted(out);
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix rotate_covariance(const CovarianceMatrix& gamma, const RotationPlan& plan) {
  Eigen::MatrixXd out = gamma.matrix();
  const Index dim = out.rows();
  for (const auto& g : plan.rotations) {
    apply_givens_rows(out, g);
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    for (Index row = 0; row < dim; ++row) {
      const double a = out(row, g.i);
      const double b = out(row, g.j);
      out(row, g.i) = c * a - s * b;
      out(row, g.j) = s * a + c * b;
    }
  }
  if (plan.parity_flip) {
    out.row(dim - 2).swap(out.row(dim - 1));
    out.col(dim - 2).swap(out.col(dim - 1));
  }
  reantisymmetrize_if_drifted(out);
  return CovarianceMatrix(std::move(out));
}

std::complex<double> two_point(const CovarianceMatrix& gamma, Index k, Index l) {
  const Index dim = gamma.dimension();
  if (k < 0 || l < 0 || k >= dim || l >= dim) throw std::out_of_range("two_point: index out of range");
  if (k == l) throw std::invalid_argument("two_point: k == l (gamma_k^2 = 1 is not a covariance entry)");
  return {0.0, -gamma(k, l)};
}

double energy_from_covariance(const QuadraticHamiltonian& hamiltonian, const CovarianceMatrix& gamma) {
  if (hamiltonian.dimension() != gamma.dimension()) {
    throw std::invalid_argument("energy_from_covariance: dimension mismatch");
  }
  const auto& h = hamiltonian.coefficients();
  const auto& g = gamma.matrix();
  double sum = 0.0;
  for (Index k = 0; k < h.rows(); ++k) {
    for (Index l = k + 1; l < h.cols(); ++l) sum += h(k, l) * g(k, l);
  }
  return kEnergyScale * sum;
}

SpectralResult spectral_ground_energy(const QuadraticHamiltonian& hamiltonian) {
  const Eigen::MatrixXcd a = hamiltonian.compressed_operator();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spectral_ground_energy: eigensolver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending, +-eps pairs
  const Index n = hamiltonian.num_orbitals();
  const Index dim = hamiltonian.dimension();
  SpectralResult result{0.0, std::vector<double>(static_cast<std::size_t>(n))};
  for (Index k = 0; k < n; ++k) {
    const double eps = std::max(0.0, 0.5 * (ev(dim - 1 - k) - ev(k)));
    result.mode_energies[static_cast<std::size_t>(n - 1 - k)] = eps;
    result.energy -= 2.0 * eps;
  }
  std::sort(result.mode_energies.begin(), result.mode_energies.end());
  return result;
}

}  // namespace fermicompress
