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

#include "fermicompress/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace fermicompress {

namespace {

using Complex = std::complex<double>;

/// Sparse superposition over basis states; enough for Clifford circuits with few H gates.
using SparseState = std::vector<std::pair<std::uint64_t, Complex>>;

std::uint64_t bit_of(int qubit, int width) { return std::uint64_t{1} << (width - 1 - qubit); }

SparseState apply_sparse(const Gate& gate, const SparseState& in, int width) {
  const std::uint64_t t = bit_of(gate.target, width);
  std::uint64_t control_mask = 0;
  for (int c : gate.controls) control_mask |= bit_of(c, width);
  SparseState out;
  auto add = [&out](std::uint64_t x, Complex a) {
    for (auto& [y, b] : out) {
      if (y == x) {
        b += a;
        return;
      }
    }
    out.emplace_back(x, a);
  };
  const double r = 1.0 / std::sqrt(2.0);
  for (const auto& [x, a] : in) {
    if ((x & control_mask) != control_mask) {
      add(x, a);
      continue;
    }
    const bool one = x & t;
    switch (gate.kind) {
      case GateKind::X:
      case GateKind::CX:
      case GateKind::MCX: add(x ^ t, a); break;
      case GateKind::S: add(x, one ? a * Complex(0, 1) : a); break;
      case GateKind::H:
        add(x & ~t, a * r);
        add(x | t, one ? -a * r : a * r);
        break;
      case GateKind::RY:
      case GateKind::CRY: {
        const double c = std::cos(gate.angle / 2.0);
        const double s = std::sin(gate.angle / 2.0);
        add(x & ~t, one ? -s * a : c * a);
        add(x | t, one ? c * a : s * a);
        break;
      }
    }
  }
  std::erase_if(out, [](const auto& e) { return std::abs(e.second) == 0.0; });
  return out;
}

Complex amplitude(const SparseState& state, std::uint64_t x) {
  for (const auto& [y, a] : state) {
    if (y == x) return a;
  }
  return 0.0;
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::X: return "X";
    case GateKind::CX: return "CX";
    case GateKind::RY: return "RY";
    case GateKind::CRY: return "CRY";
    case GateKind::MCX: return "MCX";
  }
  return "?";
}

void validate_gate(const Gate& gate, int width) {
  auto in_range = [width](int q) { return q >= 0 && q < width; };
  if (!in_range(gate.target)) {
    throw std::invalid_argument(to_string(gate.kind) + ": target " + std::to_string(gate.target) +
                                " outside width " + std::to_string(width));
  }
  for (std::size_t a = 0; a < gate.controls.size(); ++a) {
    const int c = gate.controls[a];
    if (!in_range(c)) throw std::invalid_argument(to_string(gate.kind) + ": control outside width");
    if (c == gate.target) throw std::invalid_argument(to_string(gate.kind) + ": control equals target");
    for (std::size_t b = a + 1; b < gate.controls.size(); ++b) {
      if (gate.controls[b] == c) throw std::invalid_argument(to_string(gate.kind) + ": repeated control");
    }
  }
  const std::size_t nc = gate.controls.size();
  switch (gate.kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::X:
    case GateKind::RY:
      if (nc != 0) throw std::invalid_argument(to_string(gate.kind) + " takes no controls");
      break;
    case GateKind::CX:
      if (nc != 1) throw std::invalid_argument("CX takes exactly one control");
      break;
    case GateKind::CRY:
    case GateKind::MCX:
      if (nc == 0) throw std::invalid_argument(to_string(gate.kind) + " needs at least one control");
      break;
  }
  if ((gate.kind == GateKind::RY || gate.kind == GateKind::CRY) && !std::isfinite(gate.angle)) {
    throw std::invalid_argument("rotation angle is not finite");
  }
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw std::invalid_argument("circuit width must be >= 1");
}

Circuit& Circuit::append(Gate gate) {
  validate_gate(gate, width_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(std::span<const Gate> gates) {
  for (const auto& g : gates) append(g);
  return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
  if (other.width() > width_) throw std::invalid_argument("extend: circuit is wider than the target");
  return append(std::span<const Gate>(other.gates()));
}

Circuit Circuit::widened(int width) const {
  Circuit out(width);
  out.extend(*this);
  return out;
}

std::string Circuit::dump() const {
  std::ostringstream out;
  out.precision(17);
  for (const auto& g : gates_) {
    out << to_string(g.kind) << ' ';
    for (std::size_t c = 0; c < g.controls.size(); ++c) out << (c ? "," : "") << g.controls[c];
    if (!g.controls.empty()) out << "->";
    out << g.target;
    if (g.kind == GateKind::RY || g.kind == GateKind::CRY) out << ' ' << g.angle;
    out << '\n';
  }
  return out.str();
}

Circuit prep_purified_vacuum(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("prep_purified_vacuum: m must be >= 1");
  const int m = num_qubits;
  const int middle = m - 1;
  Circuit c(2 * m - 1);
  c.append(Gate::h(middle));
  for (int a = m; a <= 2 * m - 2; ++a) c.append(Gate::h(a));
  c.append(Gate::s(middle));
  for (int q = 0; q < m - 1; ++q) c.append(Gate::cx(m + q, q));
  return c;
}

std::vector<Gate> compile_givens(const GivensRotation& rotation, int num_qubits) {
  const int m = num_qubits;
  if (m < 1 || m > 62) throw std::invalid_argument("compile_givens: bad qubit count");
  const Index dim = Index{1} << m;
  if (rotation.i == rotation.j) throw std::invalid_argument("compile_givens: i == j");
  if (rotation.i < 0 || rotation.j < 0 || rotation.i >= dim || rotation.j >= dim) {
    throw std::out_of_range("compile_givens: index outside the 2^m basis");
  }
  // Orient so the first index maps to the RY |0> branch: R_{ji}(t) = R_{ij}(-t).
  Index lo = rotation.i;
  Index hi = rotation.j;
  double theta = rotation.theta;
  if (lo > hi) {
    std::swap(lo, hi);
    theta = -theta;
  }
  const auto diff = static_cast<std::uint64_t>(lo ^ hi);
  // Pivot: the most significant differing bit, where lo has 0 and hi has 1.
  int pivot = 0;
  while (!(diff & bit_of(pivot, m))) ++pivot;

  std::vector<Gate> conj;
  // Make hi agree with lo everywhere except the pivot.
  for (int q = 0; q < m; ++q) {
    if (q != pivot && (diff & bit_of(q, m))) conj.push_back(Gate::cx(pivot, q));
  }
  // Then raise every non-pivot bit to 1.
  for (int q = 0; q < m; ++q) {
    if (q != pivot && !(static_cast<std::uint64_t>(lo) & bit_of(q, m))) conj.push_back(Gate::x(q));
  }
  std::vector<int> controls;
  for (int q = 0; q < m; ++q) {
    if (q != pivot) controls.push_back(q);
  }
  std::vector<Gate> out = conj;
  out.push_back(controls.empty() ? Gate::ry(pivot, 2.0 * theta) : Gate::cry(controls, pivot, 2.0 * theta));
  out.insert(out.end(), conj.rbegin(), conj.rend());
  return out;
}

Circuit compile_ansatz(const RotationPlan& plan, int num_qubits) {
  Circuit c(num_qubits);
  for (const auto& g : plan.rotations) {
    const auto gates = compile_givens(g, num_qubits);
    c.append(std::span<const Gate>(gates));
  }
  if (plan.parity_flip) {
    std::vector<int> controls;
    for (int q = 0; q + 1 < num_qubits; ++q) controls.push_back(q);
    c.append(num_qubits == 1 ? Gate::x(0) : Gate::mcx(std::move(controls), num_qubits - 1));
  }
  return c;
}

Circuit compile_restricted_ansatz(std::span<const double> angles, int num_qubits) {
  if (static_cast<int>(angles.size()) != num_qubits) {
    throw std::invalid_argument("restricted ansatz takes one angle per qubit");
  }
  Circuit c(num_qubits);
  for (int q = 0; q < num_qubits; ++q) c.append(Gate::ry(q, 2.0 * angles[q]));
  return c;
}

Circuit diagonalizer(const AxisPattern& pattern) {
  const auto a_qubits = pattern.antidiagonal_qubits();
  const int pivot = a_qubits.front();
  Circuit c(pattern.num_qubits());
  for (std::size_t t = 1; t < a_qubits.size(); ++t) c.append(Gate::cx(pivot, a_qubits[t]));
  c.append(Gate::x(pivot));
  c.append(Gate::s(pivot));
  c.append(Gate::h(pivot));
  for (std::size_t t = 1; t < a_qubits.size(); ++t) c.append(Gate::cx(pivot, a_qubits[t]));
  return c;
}

int diagonalizer_sign(const AxisPattern& pattern, Index k, Index l) {
  const int m = pattern.num_qubits();
  if (k < 0 || k >= l || static_cast<std::uint64_t>(k ^ l) != pattern.mask()) {
    throw std::invalid_argument("diagonalizer_sign: (" + std::to_string(k) + ", " + std::to_string(l) +
                                ") is not in the support of " + pattern.str());
  }
  const Circuit v = diagonalizer(pattern);
  auto propagate = [&](Index basis) {
    SparseState s{{static_cast<std::uint64_t>(basis), 1.0}};
    for (const auto& g : v.gates()) s = apply_sparse(g, s, m);
    return s;
  };
  const SparseState vk = propagate(k);
  const SparseState vl = propagate(l);
  const auto ku = static_cast<std::uint64_t>(k);
  const auto lu = static_cast<std::uint64_t>(l);
  // <x| V (|l><k| - |k><l|) V^dag |x> = <x|V|l> conj(<x|V|k>) - <x|V|k> conj(<x|V|l>)
  auto diagonal = [&](std::uint64_t x) {
    const Complex a = amplitude(vl, x);
    const Complex b = amplitude(vk, x);
    return a * std::conj(b) - b * std::conj(a);
  };
  const Complex at_l = diagonal(lu);
  const Complex at_k = diagonal(ku);
  constexpr double kTol = 1e-12;
  for (int sign : {+1, -1}) {
    if (std::abs(at_l - Complex(0, sign)) < kTol && std::abs(at_k - Complex(0, -sign)) < kTol) return sign;
  }
  throw std::logic_error("diagonalizer does not map (" + std::to_string(k) + ", " + std::to_string(l) +
                         ") onto the diagonal for pattern " + pattern.str());
}

}  // namespace fermicompress
