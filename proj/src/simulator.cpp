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

#include "fermicompress/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fermicompress/rng.hpp"

namespace fermicompress {

namespace {

using Complex = std::complex<double>;

constexpr int kMaxSupportedWidth = 40;

std::uint64_t qubit_bit(int qubit, int width) { return std::uint64_t{1} << (width - 1 - qubit); }

// Calls f(a0, a1) on every amplitude pair differing only in the target bit
// whose control bits are all set.
template <typename F>
void for_each_pair(Amplitudes& amps, int width, const Gate& gate, F&& f) {
  const std::uint64_t t = qubit_bit(gate.target, width);
  std::uint64_t controls = 0;
  for (int c : gate.controls) controls |= qubit_bit(c, width);
  const std::uint64_t n = amps.size();
  for (std::uint64_t base = 0; base < n; base += 2 * t) {
    for (std::uint64_t i = base; i < base + t; ++i) {
      if ((i & controls) != controls) continue;
      f(amps[i], amps[i | t]);
    }
  }
}

}  // namespace

void check_width(int width, int max_width) {
  if (width > max_width) {
    throw ResourceLimitError("circuit width " + std::to_string(width) + " exceeds the cap of " +
                             std::to_string(max_width) + " qubits");
  }
  if (width > kMaxSupportedWidth) throw ResourceLimitError("circuit width too large to simulate");
}

StateVector::StateVector(int width) : width_(width) {
  if (width < 1) throw std::invalid_argument("state width must be >= 1");
  check_width(width, kMaxSupportedWidth);
  amplitudes_.assign(std::uint64_t{1} << width, Complex(0.0));
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int width, Amplitudes amplitudes)
    : width_(width), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(int width, std::uint64_t index) {
  StateVector s(width);
  if (index >= s.size()) throw std::out_of_range("basis index outside the register");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int width, Amplitudes amplitudes) {
  if (width < 1 || width > kMaxSupportedWidth || amplitudes.size() != (std::uint64_t{1} << width)) {
    throw std::invalid_argument("amplitude count must be 2^width");
  }
  StateVector s(width, std::move(amplitudes));
  if (std::abs(s.norm() - 1.0) > 1e-10) throw std::invalid_argument("state is not normalized");
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::apply(const Gate& gate) {
  validate_gate(gate, width_);
  switch (gate.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      for_each_pair(amplitudes_, width_, gate, [r](Complex& a, Complex& b) {
        const Complex a0 = a;
        a = (a0 + b) * r;
        b = (a0 - b) * r;
      });
      break;
    }
    case GateKind::S:
      for_each_pair(amplitudes_, width_, gate, [](Complex&, Complex& b) { b *= Complex(0.0, 1.0); });
      break;
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MCX:
      for_each_pair(amplitudes_, width_, gate, [](Complex& a, Complex& b) { std::swap(a, b); });
      break;
    case GateKind::RY:
    case GateKind::CRY: {
      const double c = std::cos(gate.angle / 2.0);
      const double s = std::sin(gate.angle / 2.0);
      for_each_pair(amplitudes_, width_, gate, [c, s](Complex& a, Complex& b) {
        const Complex a0 = a;
        a = c * a0 - s * b;
        b = s * a0 + c * b;
      });
      break;
    }
  }
}

StateVector run(const Circuit& circuit, int max_width) {
  check_width(circuit.width(), max_width);
  return run(circuit, StateVector(circuit.width()), max_width);
}

StateVector run(const Circuit& circuit, StateVector initial, int max_width) {
  check_width(initial.width(), max_width);
  if (circuit.width() > initial.width()) throw std::invalid_argument("circuit is wider than the state");
  // Circuit qubit q is state qubit q; any extra state qubits trail.
  for (const auto& g : circuit.gates()) initial.apply(g);
  return initial;
}

std::vector<double> system_probabilities(const StateVector& state, int system_qubits) {
  if (system_qubits < 1 || system_qubits > state.width()) {
    throw std::invalid_argument("system register must span 1..width qubits");
  }
  const int shift = state.width() - system_qubits;
  std::vector<double> probs(std::uint64_t{1} << system_qubits, 0.0);
  const auto& amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) probs[i >> shift] += std::norm(amps[i]);
  return probs;
}

// V = C W C with C the CX fan-out (a permutation of system indices, C = C^-1)
// and W = H S X on the pivot. P_V(x) = P_W(C x) where W acts on C|psi>, so the
// pass reads amplitudes at permuted indices and never materializes C|psi>.
std::vector<double> pattern_probabilities(const StateVector& state, const AxisPattern& pattern) {
  const int m = pattern.num_qubits();
  if (m > state.width()) throw std::invalid_argument("pattern is wider than the state");
  const int shift = state.width() - m;
  const std::uint64_t dim = std::uint64_t{1} << m;
  const std::uint64_t ancillas = std::uint64_t{1} << shift;
  const std::uint64_t mask = pattern.mask();
  const std::uint64_t pivot = std::uint64_t{1} << (std::bit_width(mask) - 1);
  const std::uint64_t others = mask ^ pivot;
  auto fan_out = [pivot, others](std::uint64_t x) { return (x & pivot) ? x ^ others : x; };

  const auto& amps = state.amplitudes();
  const double half = 0.5;
  std::vector<double> after_w(dim, 0.0);
  for (std::uint64_t z0 = 0; z0 < dim; ++z0) {
    if (z0 & pivot) continue;
    const std::uint64_t z1 = z0 | pivot;
    const std::uint64_t src0 = fan_out(z0) << shift;
    const std::uint64_t src1 = fan_out(z1) << shift;
    double p0 = 0.0;
    double p1 = 0.0;
    for (std::uint64_t a = 0; a < ancillas; ++a) {
      const Complex a0 = amps[src0 | a];
      const Complex a1 = amps[src1 | a];
      // H S X = (1/sqrt 2) [[i, 1], [-i, 1]]
      const Complex ia0(-a0.imag(), a0.real());
      p0 += std::norm(ia0 + a1);
      p1 += std::norm(a1 - ia0);
    }
    after_w[z0] = half * p0;
    after_w[z1] = half * p1;
  }
  std::vector<double> probs(dim);
  for (std::uint64_t x = 0; x < dim; ++x) probs[x] = after_w[fan_out(x)];
  return probs;
}

Eigen::MatrixXcd reduced_density(const StateVector& state, int system_qubits, int max_system_qubits) {
  if (system_qubits < 1 || system_qubits > state.width()) {
    throw std::invalid_argument("system register must span 1..width qubits");
  }
  if (system_qubits > max_system_qubits) throw std::invalid_argument("reduced_density: system too large");
  const int shift = state.width() - system_qubits;
  const Index dim = Index{1} << system_qubits;
  const std::uint64_t ancillas = std::uint64_t{1} << shift;
  const auto& amps = state.amplitudes();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (Index x = 0; x < dim; ++x) {
    for (Index y = 0; y < dim; ++y) {
      Complex sum = 0.0;
      for (std::uint64_t a = 0; a < ancillas; ++a) {
        sum += amps[(static_cast<std::uint64_t>(x) << shift) | a] *
               std::conj(amps[(static_cast<std::uint64_t>(y) << shift) | a]);
      }
      rho(x, y) = sum;
    }
  }
  return rho;
}

std::uint64_t ShotCounts::count(std::uint64_t outcome) const {
  const auto it = counts.find(outcome);
  return it == counts.end() ? 0 : it->second;
}

std::vector<double> ShotCounts::frequencies(std::uint64_t dimension) const {
  if (shots == 0) throw std::invalid_argument("frequencies: no shots recorded");
  std::vector<double> f(dimension, 0.0);
  for (const auto& [outcome, c] : counts) {
    if (outcome >= dimension) throw std::out_of_range("frequencies: outcome outside the register");
    f[outcome] = static_cast<double>(c) / static_cast<double>(shots);
  }
  return f;
}

ShotCounts sample(std::span<const double> probabilities, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be >= 1");
  if (probabilities.empty()) throw std::invalid_argument("sample: empty distribution");
  std::vector<double> cdf(probabilities.size());
  double total = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!(p >= -1e-12)) throw std::invalid_argument("sample: negative or NaN probability");
    total += std::max(p, 0.0);
    cdf[i] = total;
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw std::invalid_argument("sample: probabilities sum to " + std::to_string(total) + ", not 1");
  }
  Rng rng(seed);
  std::vector<std::uint64_t> tally(probabilities.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++tally[static_cast<std::size_t>(it - cdf.begin())];
  }
  ShotCounts out;
  out.shots = shots;
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (tally[i] > 0) out.counts.emplace(i, tally[i]);
  }
  return out;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit, int max_width) {
  check_width(circuit.width(), max_width);
  const Index dim = Index{1} << circuit.width();
  Eigen::MatrixXcd u(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    const StateVector column = run(circuit, StateVector::basis(circuit.width(), j), max_width);
    for (Index i = 0; i < dim; ++i) u(i, j) = column[i];
  }
  return u;
}

}  // namespace fermicompress
