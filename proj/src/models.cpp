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

#include "fermicompress/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fermicompress/errors.hpp"

namespace fermicompress {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(Index v) { return v > 0 && (v & (v - 1)) == 0; }

Index next_power_of_two(Index v) {
  Index p = 1;
  while (p < v) p <<= 1;
  return p;
}

/// Accumulates i*C*gamma_a*gamma_b into an antisymmetric h.
class TermBuilder {
 public:
  explicit TermBuilder(Index num_orbitals) : h_(Eigen::MatrixXd::Zero(2 * num_orbitals, 2 * num_orbitals)) {}

  void add(Index a, Index b, double c) {
    h_(a, b) += c / 2.0;
    h_(b, a) -= c / 2.0;
  }

  // -t (e^{i phase} c_j^dag c_k + h.c.)
  void hopping(Index j, Index k, double t, double phase) {
    const double re = -t * std::cos(phase) / 2.0;
    const double im = -t * std::sin(phase) / 2.0;
    add(2 * j, 2 * k + 1, re);
    add(2 * j + 1, 2 * k, -re);
    if (im != 0.0) {
      add(2 * j, 2 * k, im);
      add(2 * j + 1, 2 * k + 1, im);
    }
  }

  // delta (c_j c_k + h.c.)
  void pairing(Index j, Index k, double delta) {
    add(2 * j, 2 * k + 1, delta / 2.0);
    add(2 * j + 1, 2 * k, delta / 2.0);
  }

  // -mu (n_j - 1/2)
  void onsite(Index j, double mu) { add(2 * j, 2 * j + 1, -mu / 2.0); }

  Eigen::MatrixXd take() { return std::move(h_); }

 private:
  Eigen::MatrixXd h_;
};

double coupling(const std::map<std::string, double>& couplings, const std::string& name, double fallback) {
  auto it = couplings.find(name);
  return it == couplings.end() ? fallback : it->second;
}

void check_coupling_names(const ModelSpec& spec) {
  std::set<std::string> allowed;
  switch (spec.kind) {
    case ModelKind::TightBinding1D:
    case ModelKind::TightBinding2D: allowed = {"t", "mu", "phase"}; break;
    case ModelKind::KitaevWire: allowed = {"t", "delta", "mu", "phase"}; break;
    case ModelKind::TransverseIsing: allowed = {"J", "g", "anisotropy"}; break;
  }
  for (const auto& [name, value] : spec.couplings) {
    if (!allowed.contains(name)) {
      throw std::invalid_argument("unknown coupling '" + name + "' for model " + to_string(spec.kind));
    }
    if (!std::isfinite(value)) throw std::invalid_argument("coupling '" + name + "' is not finite");
  }
}

Index padded_size(Index physical, bool pad) {
  if (physical < 1) throw std::invalid_argument("model size must be positive");
  if (is_power_of_two(physical)) return physical;
  if (!pad) {
    throw std::invalid_argument("orbital count " + std::to_string(physical) +
                                " is not a power of two (enable padding to extend it)");
  }
  return next_power_of_two(physical);
}

/// Chain bonds (j, j+1), plus the wrap bond when periodic and it is distinct.
std::vector<std::pair<Index, Index>> chain_bonds(Index length, Boundary boundary) {
  std::vector<std::pair<Index, Index>> bonds;
  for (Index j = 0; j + 1 < length; ++j) bonds.emplace_back(j, j + 1);
  if (boundary == Boundary::Periodic && length > 2) bonds.emplace_back(length - 1, 0);
  return bonds;
}

/// Applies a Jordan-Wigner word to |x>; qubit q is bit (n - 1 - q).
struct BasisImage {
  std::uint64_t state;
  Complex phase;
};

class WordAction {
 public:
  explicit WordAction(const PauliWord& word) {
    const int n = word.num_qubits();
    for (int q = 0; q < n; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
      switch (word[q]) {
        case Pauli::I: break;
        case Pauli::X: flip_ |= bit; break;
        case Pauli::Y: flip_ |= bit; y_ |= bit; break;
        case Pauli::Z: z_ |= bit; break;
      }
    }
  }

  BasisImage apply(std::uint64_t x) const {
    // Y|0> = i|1>, Y|1> = -i|0>, Z|b> = (-1)^b |b>.
    const int y_total = std::popcount(y_);
    const int y_ones = std::popcount(y_ & x);
    const int z_ones = std::popcount(z_ & x);
    // i^{y_total} * (-1)^{y_ones + z_ones}
    static constexpr Complex kPowI[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex phase = kPowI[y_total % 4];
    if ((y_ones + z_ones) % 2) phase = -phase;
    return {x ^ flip_, phase};
  }

 private:
  std::uint64_t flip_ = 0;
  std::uint64_t y_ = 0;
  std::uint64_t z_ = 0;
};

/// The JW terms of H: 2 h_{ab} * i * coefficient(ab) * word(ab) for a < b.
std::vector<std::pair<WordAction, Complex>> jordan_wigner_terms(const QuadraticHamiltonian& hamiltonian) {
  const Index dim = hamiltonian.dimension();
  const Index n = hamiltonian.num_orbitals();
  const auto& h = hamiltonian.coefficients();
  std::vector<std::pair<WordAction, Complex>> terms;
  for (Index a = 0; a < dim; ++a) {
    for (Index b = a + 1; b < dim; ++b) {
      if (h(a, b) == 0.0) continue;
      auto [word, coefficient] = majorana_pair_word(a, b, n);
      terms.emplace_back(WordAction(word), 2.0 * h(a, b) * kI * coefficient);
    }
  }
  return terms;
}

void check_brute_force_size(const QuadraticHamiltonian& hamiltonian, Index max_orbitals) {
  if (hamiltonian.num_orbitals() > max_orbitals) {
    throw ResourceLimitError("brute-force oracle: " + std::to_string(hamiltonian.num_orbitals()) +
                             " orbitals exceeds the cap of " + std::to_string(max_orbitals));
  }
  if (hamiltonian.num_orbitals() > 30) throw ResourceLimitError("brute-force oracle: too many orbitals");
}

Eigen::MatrixXcd sector_matrix(const std::vector<std::pair<WordAction, Complex>>& terms, Index n, int parity) {
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<Index> position(states, -1);
  std::vector<std::uint64_t> basis;
  for (std::uint64_t x = 0; x < states; ++x) {
    if (parity < 0 || std::popcount(x) % 2 == parity) {
      position[x] = static_cast<Index>(basis.size());
      basis.push_back(x);
    }
  }
  const Index size = static_cast<Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  for (const auto& [action, weight] : terms) {
    for (Index col = 0; col < size; ++col) {
      const BasisImage image = action.apply(basis[col]);
      m(position[image.state], col) += weight * image.phase;
    }
  }
  return m;
}

double lowest_eigenvalue(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("brute-force eigensolver failed");
  return solver.eigenvalues()(0);
}

}  // namespace

QuadraticHamiltonian::QuadraticHamiltonian(Eigen::MatrixXd h) : h_(std::move(h)) {
  if (h_.rows() != h_.cols()) throw std::invalid_argument("coefficient matrix must be square");
  if (!is_power_of_two(h_.rows()) || h_.rows() < 2) {
    throw std::invalid_argument("coefficient matrix dimension must be 2n with n a power of two, got " +
                                std::to_string(h_.rows()));
  }
  for (Index i = 0; i < h_.rows(); ++i) {
    if (h_(i, i) != 0.0) throw std::invalid_argument("coefficient matrix must have a zero diagonal");
    for (Index j = i + 1; j < h_.cols(); ++j) {
      if (h_(i, j) != -h_(j, i)) throw std::invalid_argument("coefficient matrix must be antisymmetric");
      if (!std::isfinite(h_(i, j))) throw std::invalid_argument("coefficient matrix has non-finite entries");
    }
  }
}

QuadraticHamiltonian QuadraticHamiltonian::zero(Index num_orbitals) {
  return QuadraticHamiltonian(Eigen::MatrixXd::Zero(2 * num_orbitals, 2 * num_orbitals));
}

int QuadraticHamiltonian::num_qubits() const {
  return std::countr_zero(static_cast<std::uint64_t>(h_.rows()));
}

Eigen::MatrixXcd QuadraticHamiltonian::compressed_operator() const { return kI * h_.cast<Complex>(); }

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::TightBinding1D: return "tight_binding_1d";
    case ModelKind::TightBinding2D: return "tight_binding_2d";
    case ModelKind::KitaevWire: return "kitaev_wire";
    case ModelKind::TransverseIsing: return "transverse_ising";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& text) {
  for (auto kind : {ModelKind::TightBinding1D, ModelKind::TightBinding2D, ModelKind::KitaevWire,
                    ModelKind::TransverseIsing}) {
    if (to_string(kind) == text) return kind;
  }
  throw std::invalid_argument("unknown model kind '" + text + "'");
}

std::string to_string(Boundary boundary) { return boundary == Boundary::Open ? "open" : "periodic"; }

Boundary parse_boundary(const std::string& text) {
  if (text == "open") return Boundary::Open;
  if (text == "periodic") return Boundary::Periodic;
  throw std::invalid_argument("unknown boundary '" + text + "'");
}

QuadraticHamiltonian build_model(const ModelSpec& spec) {
  check_coupling_names(spec);
  const auto& c = spec.couplings;

  if (spec.kind == ModelKind::TightBinding2D) {
    if (spec.rows < 1 || spec.cols < 1) throw std::invalid_argument("2D model needs positive rows and cols");
    const Index physical = spec.rows * spec.cols;
    const Index n = padded_size(physical, spec.pad_to_power_of_two);
    const double t = coupling(c, "t", 1.0);
    const double mu = coupling(c, "mu", 0.0);
    const double phase = coupling(c, "phase", 0.0);
    TermBuilder terms(n);
    // Row-major: orbital (r, c) -> r * cols + c.
    for (Index r = 0; r < spec.rows; ++r) {
      for (auto [a, b] : chain_bonds(spec.cols, spec.boundary)) {
        terms.hopping(r * spec.cols + a, r * spec.cols + b, t, phase);
      }
    }
    for (Index col = 0; col < spec.cols; ++col) {
      for (auto [a, b] : chain_bonds(spec.rows, spec.boundary)) {
        terms.hopping(a * spec.cols + col, b * spec.cols + col, t, phase);
      }
    }
    if (mu != 0.0) {
      for (Index j = 0; j < physical; ++j) terms.onsite(j, mu);
    }
    return QuadraticHamiltonian(terms.take());
  }

  const Index physical = spec.num_orbitals;
  const Index n = padded_size(physical, spec.pad_to_power_of_two);
  TermBuilder terms(n);
  const auto bonds = chain_bonds(physical, spec.boundary);

  switch (spec.kind) {
    case ModelKind::TightBinding1D:
    case ModelKind::KitaevWire: {
      const double t = coupling(c, "t", 1.0);
      const double mu = coupling(c, "mu", 0.0);
      const double phase = coupling(c, "phase", 0.0);
      const double delta = spec.kind == ModelKind::KitaevWire ? coupling(c, "delta", t) : 0.0;
      for (auto [a, b] : bonds) {
        terms.hopping(a, b, t, phase);
        if (delta != 0.0) terms.pairing(a, b, delta);
      }
      if (mu != 0.0) {
        for (Index j = 0; j < physical; ++j) terms.onsite(j, mu);
      }
      break;
    }
    case ModelKind::TransverseIsing: {
      // -J sum [(1+a)/2 X_j X_{j+1} + (1-a)/2 Y_j Y_{j+1}] - g sum Z_j, with
      // X_j X_{j+1} = -i g_{2j+1} g_{2j+2}, Y_j Y_{j+1} = i g_{2j} g_{2j+3}, Z_j = -i g_{2j} g_{2j+1}.
      // The wrap bond is the fermionic one (no parity string).
      const double J = coupling(c, "J", 1.0);
      const double g = coupling(c, "g", 1.0);
      const double anisotropy = coupling(c, "anisotropy", 1.0);
      for (auto [a, b] : bonds) {
        terms.add(2 * a + 1, 2 * b, J * (1.0 + anisotropy) / 2.0);
        if (anisotropy != 1.0) terms.add(2 * a, 2 * b + 1, -J * (1.0 - anisotropy) / 2.0);
      }
      for (Index j = 0; j < physical; ++j) terms.add(2 * j, 2 * j + 1, g);
      break;
    }
    case ModelKind::TightBinding2D: break;
  }
  return QuadraticHamiltonian(terms.take());
}

Eigen::Matrix2cd block(const QuadraticHamiltonian& hamiltonian, Index j, Index k) {
  const Index n = hamiltonian.num_orbitals();
  if (j < 0 || k < 0 || j >= n || k >= n) {
    throw std::out_of_range("block index out of range for " + std::to_string(n) + " orbitals");
  }
  return kI * hamiltonian.coefficients().block<2, 2>(2 * j, 2 * k).cast<Complex>();
}

ScaledPauliWord majorana_pair_word(Index k, Index l, Index num_orbitals) {
  if (k >= l) throw std::invalid_argument("majorana_pair_word: requires k < l");
  if (k < 0 || l >= 2 * num_orbitals) throw std::out_of_range("majorana_pair_word: index out of range");
  std::vector<Pauli> letters(num_orbitals, Pauli::I);
  const Index alpha = k / 2;
  const Index beta = l / 2;
  const bool k_odd = k % 2;
  const bool l_odd = l % 2;

  if (alpha == beta) {
    // gamma_{2a} gamma_{2a+1} = i Z_a
    letters[alpha] = Pauli::Z;
    return {PauliWord(std::move(letters)), kI};
  }
  for (Index s = alpha + 1; s < beta; ++s) letters[s] = Pauli::Z;
  letters[alpha] = k_odd ? Pauli::X : Pauli::Y;
  letters[beta] = l_odd ? Pauli::Y : Pauli::X;
  // Even k: -i Y ... ; odd k: i X ...
  return {PauliWord(std::move(letters)), k_odd ? kI : -kI};
}

Eigen::MatrixXcd brute_force_matrix(const QuadraticHamiltonian& hamiltonian, Index max_orbitals) {
  check_brute_force_size(hamiltonian, max_orbitals);
  return sector_matrix(jordan_wigner_terms(hamiltonian), hamiltonian.num_orbitals(), -1);
}

double brute_force_ground_energy(const QuadraticHamiltonian& hamiltonian, Index max_orbitals) {
  const auto sectors = brute_force_sector_energies(hamiltonian, max_orbitals);
  return std::min(sectors.even, sectors.odd);
}

ParitySectorEnergies brute_force_sector_energies(const QuadraticHamiltonian& hamiltonian, Index max_orbitals) {
  check_brute_force_size(hamiltonian, max_orbitals);
  const auto terms = jordan_wigner_terms(hamiltonian);
  const Index n = hamiltonian.num_orbitals();
  return {lowest_eigenvalue(sector_matrix(terms, n, 0)), lowest_eigenvalue(sector_matrix(terms, n, 1))};
}

double brute_force_vacuum_energy(const QuadraticHamiltonian& hamiltonian) {
  // <0|P|0> is 1 for words made of I and Z, 0 otherwise; pairs on different
  // orbitals always carry X/Y letters and are skipped up front.
  const Index dim = hamiltonian.dimension();
  const Index n = hamiltonian.num_orbitals();
  const auto& h = hamiltonian.coefficients();
  Complex energy = 0.0;
  for (Index a = 0; a + 1 < dim; a += 2) {
    if (h(a, a + 1) == 0.0) continue;
    auto [word, coefficient] = majorana_pair_word(a, a + 1, n);
    const bool diagonal = std::none_of(word.letters().begin(), word.letters().end(),
                                       [](Pauli p) { return p == Pauli::X || p == Pauli::Y; });
    if (diagonal) energy += 2.0 * h(a, a + 1) * kI * coefficient;
  }
  return energy.real();
}

}  // namespace fermicompress
