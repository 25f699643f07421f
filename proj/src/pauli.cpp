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

#include "fermicompress/pauli.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fermicompress {

namespace {

constexpr int kMaxMaskQubits = 62;

bool letters_anticommute(Pauli a, Pauli b) {
  return a != Pauli::I && b != Pauli::I && a != b;
}

Eigen::Matrix2cd single_qubit_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

void check_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxMaskQubits) {
    throw std::invalid_argument("qubit count must lie in [1, 62], got " +
                                std::to_string(num_qubits));
  }
}

}  // namespace

char to_char(Pauli p) {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  return kNames[static_cast<int>(p)];
}

char to_char(Axis a) { return a == Axis::D ? 'D' : 'A'; }

PauliWord::PauliWord(std::vector<Pauli> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("Pauli word must have at least one letter");
}

PauliWord PauliWord::parse(std::string_view text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" + std::string(1, c) + "'");
    }
  }
  return PauliWord(std::move(letters));
}

int PauliWord::y_count() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), Pauli::Y));
}

std::string PauliWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(to_char(p));
  return s;
}

AxisPattern::AxisPattern(std::vector<Axis> axes) : axes_(std::move(axes)) {
  check_qubits(num_qubits());
  if (std::none_of(axes_.begin(), axes_.end(), [](Axis a) { return a == Axis::A; })) {
    throw std::invalid_argument("axis pattern needs at least one A position");
  }
}

AxisPattern AxisPattern::parse(std::string_view text) {
  std::vector<Axis> axes;
  for (char c : text) {
    if (c == 'D') {
      axes.push_back(Axis::D);
    } else if (c == 'A') {
      axes.push_back(Axis::A);
    } else {
      throw std::invalid_argument("invalid axis letter '" + std::string(1, c) + "'");
    }
  }
  return AxisPattern(std::move(axes));
}

AxisPattern AxisPattern::from_mask(std::uint64_t mask, int num_qubits) {
  check_qubits(num_qubits);
  if (mask >> num_qubits) throw std::invalid_argument("pattern mask has bits beyond the qubit count");
  std::vector<Axis> axes(num_qubits, Axis::D);
  for (int q = 0; q < num_qubits; ++q) {
    if ((mask >> (num_qubits - 1 - q)) & 1U) axes[q] = Axis::A;
  }
  return AxisPattern(std::move(axes));
}

std::uint64_t AxisPattern::mask() const {
  std::uint64_t mask = 0;
  const int m = num_qubits();
  for (int q = 0; q < m; ++q) {
    if (axes_[q] == Axis::A) mask |= std::uint64_t{1} << (m - 1 - q);
  }
  return mask;
}

std::vector<int> AxisPattern::antidiagonal_qubits() const {
  std::vector<int> out;
  for (int q = 0; q < num_qubits(); ++q) {
    if (axes_[q] == Axis::A) out.push_back(q);
  }
  return out;
}

std::string AxisPattern::str() const {
  std::string s;
  for (Axis a : axes_) s.push_back(to_char(a));
  return s;
}

bool commutes(const PauliWord& p, const PauliWord& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("commutes: word lengths differ (" + std::to_string(p.num_qubits()) +
                                " vs " + std::to_string(q.num_qubits()) + ")");
  }
  int anticommuting_sites = 0;
  for (int i = 0; i < p.num_qubits(); ++i) {
    if (letters_anticommute(p[i], q[i])) ++anticommuting_sites;
  }
  return anticommuting_sites % 2 == 0;
}

std::vector<PauliWord> words_of_set(const AxisPattern& pattern) {
  const int m = pattern.num_qubits();
  if (m > 30) throw std::invalid_argument("words_of_set: too many qubits to enumerate");
  std::vector<PauliWord> words;
  words.reserve(std::size_t{1} << (m - 1));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    std::vector<Pauli> letters(m);
    int ys = 0;
    for (int q = 0; q < m; ++q) {
      const bool choice = (code >> (m - 1 - q)) & 1U;
      if (pattern[q] == Axis::D) {
        letters[q] = choice ? Pauli::Z : Pauli::I;
      } else {
        letters[q] = choice ? Pauli::Y : Pauli::X;
        ys += choice;
      }
    }
    if (ys % 2 == 1) words.emplace_back(std::move(letters));
  }
  return words;
}

std::vector<CommutingSet> enumerate_commuting_sets(int num_qubits) {
  check_qubits(num_qubits);
  if (num_qubits > 20) throw std::invalid_argument("enumerate_commuting_sets: too many qubits");
  std::vector<CommutingSet> sets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << num_qubits); ++mask) {
    AxisPattern pattern = AxisPattern::from_mask(mask, num_qubits);
    auto words = words_of_set(pattern);
    sets.push_back({std::move(pattern), std::move(words)});
  }
  return sets;
}

// Selecting the antidiagonal subblock at qubit q pairs row bit q with the
// complementary column bit; the diagonal subblock keeps them equal. The
// recursion therefore reduces to l = k XOR mask.
std::vector<std::pair<Index, Index>> support_of_set(const AxisPattern& pattern) {
  const std::uint64_t mask = pattern.mask();
  const std::uint64_t dim = std::uint64_t{1} << pattern.num_qubits();
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(dim / 2);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const std::uint64_t l = k ^ mask;
    if (k < l) pairs.emplace_back(static_cast<Index>(k), static_cast<Index>(l));
  }
  return pairs;
}

AxisPattern set_of_element(Index k, Index l, int num_qubits) {
  check_qubits(num_qubits);
  const Index dim = Index{1} << num_qubits;
  if (k < 0 || l >= dim) {
    throw std::out_of_range("set_of_element: indices out of range for " +
                            std::to_string(num_qubits) + " qubits");
  }
  if (k >= l) throw std::invalid_argument("set_of_element: requires k < l");
  return AxisPattern::from_mask(static_cast<std::uint64_t>(k ^ l), num_qubits);
}

Eigen::MatrixXcd word_matrix(const PauliWord& word, int max_qubits) {
  if (word.num_qubits() > max_qubits) {
    throw std::invalid_argument("word_matrix: " + std::to_string(word.num_qubits()) +
                                " qubits exceeds the dense cap of " + std::to_string(max_qubits));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (Pauli p : word.letters()) {
    const Eigen::Matrix2cd s = single_qubit_matrix(p);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Index r = 0; r < out.rows(); ++r) {
      for (Index c = 0; c < out.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = out(r, c) * s;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace fermicompress
