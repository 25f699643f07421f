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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fermicompress {

using Index = Eigen::Index;

/// Upper bound on qubit counts for helpers that materialize dense 2^m x 2^m matrices.
inline constexpr int kDefaultDenseQubitCap = 6;

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// D = {I, Z} (diagonal letters), A = {X, Y} (antidiagonal letters).
enum class Axis : std::uint8_t { D, A };

char to_char(Pauli p);
char to_char(Axis a);

/// A tensor product of single-qubit Pauli letters. Letter 0 acts on qubit 0,
/// which is the most significant bit of matrix row/column indices.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::vector<Pauli> letters);

  /// Parses "XYZI"-style text. Throws std::invalid_argument on other characters.
  static PauliWord parse(std::string_view text);

  int num_qubits() const { return static_cast<int>(letters_.size()); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  std::span<const Pauli> letters() const { return letters_; }

  int y_count() const;
  bool is_antisymmetric() const { return y_count() % 2 == 1; }
  std::string str() const;

  auto operator<=>(const PauliWord&) const = default;

 private:
  std::vector<Pauli> letters_;
};

/// Per-qubit choice of diagonal or antidiagonal letters; labels one commuting set.
class AxisPattern {
 public:
  /// Throws std::invalid_argument when empty or when every axis is D.
  explicit AxisPattern(std::vector<Axis> axes);

  static AxisPattern parse(std::string_view text);

  /// Pattern whose A positions are the set bits of `mask`; qubit q owns bit (m - 1 - q).
  static AxisPattern from_mask(std::uint64_t mask, int num_qubits);

  int num_qubits() const { return static_cast<int>(axes_.size()); }
  Axis operator[](std::size_t q) const { return axes_[q]; }
  std::span<const Axis> axes() const { return axes_; }

  /// Index bits that differ between row and column of every support element.
  std::uint64_t mask() const;
  std::vector<int> antidiagonal_qubits() const;
  std::string str() const;

  auto operator<=>(const AxisPattern&) const = default;

 private:
  std::vector<Axis> axes_;
};

struct CommutingSet {
  AxisPattern pattern;
  std::vector<PauliWord> words;
};

/// True iff the number of sites where the letters anticommute is even.
bool commutes(const PauliWord& p, const PauliWord& q);

/// All odd-Y words matching `pattern`, ordered by their letter-choice encoding.
std::vector<PauliWord> words_of_set(const AxisPattern& pattern);

/// The 2^m - 1 commuting sets of an antisymmetric operator on m qubits, ordered by mask.
std::vector<CommutingSet> enumerate_commuting_sets(int num_qubits);

/// Strictly upper-triangular matrix positions spanned by the set, ordered by row.
std::vector<std::pair<Index, Index>> support_of_set(const AxisPattern& pattern);

/// The unique pattern whose support contains (k, l). Requires 0 <= k < l < 2^m.
AxisPattern set_of_element(Index k, Index l, int num_qubits);

/// Dense Kronecker product of the letters. Test utility, capped at `max_qubits`.
Eigen::MatrixXcd word_matrix(const PauliWord& word, int max_qubits = kDefaultDenseQubitCap);

}  // namespace fermicompress
