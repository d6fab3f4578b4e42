// Copyright 2026 The qnetbound Authors
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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qnb {

/// Single-qubit Pauli label. The numeric value encodes the symplectic bits:
/// bit 0 is the X bit, bit 1 the Z bit, so Y = X|Z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);
/// Maps 'x'/'y'/'z' (any case) to the label; anything else is a ParseError.
Pauli pauli_from_axis(char axis);
/// Lower-case axis name used in schedule files ('x', 'y', 'z').
char axis_char(Pauli p);

/// The three non-identity labels in x < y < z order, which is the order
/// every lexicographic tie-break in this library uses.
inline constexpr Pauli kAxes[3] = {Pauli::X, Pauli::Y, Pauli::Z};

/// An n-qubit Pauli word i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1} stored as
/// symplectic bit vectors. Qubit 0 is the leftmost text character and the
/// most significant tensor factor.
class PauliString {
 public:
  /// Identity on n qubits; n must be at least 1.
  explicit PauliString(std::size_t n);

  /// Parses an uppercase word over {I,X,Y,Z}. The phase is 0.
  static PauliString parse(std::string_view text);
  /// Identity with `label` on qubit q.
  static PauliString single(std::size_t n, std::size_t q, Pauli label);
  /// sigma_a on u and sigma_b on v.
  static PauliString two_body(std::size_t n, std::size_t u, Pauli a,
                              std::size_t v, Pauli b);

  std::size_t size() const noexcept { return n_; }
  Pauli at(std::size_t q) const;
  void set(std::size_t q, Pauli label);
  bool x_bit(std::size_t q) const;
  bool z_bit(std::size_t q) const;

  /// Power of i multiplying the bare word, in [0, 4).
  int phase() const noexcept { return phase_; }
  void set_phase(int phase_exp) noexcept { phase_ = ((phase_exp % 4) + 4) % 4; }
  /// Same word with phase 0.
  PauliString word() const;

  std::size_t weight() const;
  std::vector<std::size_t> support() const;
  /// Support as a bitmask (bit q set for qubit q); requires n <= 64.
  std::uint64_t support_mask() const;
  bool is_identity_word() const;

  /// Word text without phase, e.g. "XYZ".
  std::string str() const;
  /// Word text with a phase prefix: "+", "-", "+i" or "-i".
  std::string signed_str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  /// Orders by word text, then phase.
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  std::size_t n_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  int phase_ = 0;
};

/// Exact product P*Q with the phase folded into the result.
PauliString multiply(const PauliString& p, const PauliString& q);

/// True iff the symplectic inner product of p and q is even.
bool commutes(const PauliString& p, const PauliString& q);

/// [P, Q] = scale * i^phase * word, for anticommuting P and Q.
struct Commutator {
  double scale = 2.0;
  int phase = 0;
  PauliString word;
};

/// Empty when P and Q commute.
std::optional<Commutator> commutator(const PauliString& p,
                                     const PauliString& q);

/// Hilbert-Schmidt norm of [P, Q]: 0 or 2 * sqrt(2^n).
double hs_norm_commutator(const PauliString& p, const PauliString& q);

inline constexpr std::size_t kDefaultMatrixQubitCap = 12;

/// Dense 2^n x 2^n matrix of the word, including i^phase. Throws
/// ResourceError above `max_qubits`.
Eigen::MatrixXcd to_matrix(const PauliString& p,
                           std::size_t max_qubits = kDefaultMatrixQubitCap);

}  // namespace qnb
