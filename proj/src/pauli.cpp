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

#include "qnetbound/pauli.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include "qnetbound/errors.hpp"

namespace qnb {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void check_same_size(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) {
    throw DimensionError("Pauli strings act on " + std::to_string(p.size()) +
                         " and " + std::to_string(q.size()) + " qubits");
  }
}

// sigma_a * sigma_b = i^k sigma_{a^b}; returns k.
int label_product_phase(Pauli a, Pauli b) {
  if (a == Pauli::I || b == Pauli::I || a == b) return 0;
  const bool cyclic = (a == Pauli::X && b == Pauli::Y) ||
                      (a == Pauli::Y && b == Pauli::Z) ||
                      (a == Pauli::Z && b == Pauli::X);
  return cyclic ? 1 : 3;
}

const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

char axis_char(Pauli p) {
  switch (p) {
    case Pauli::X: return 'x';
    case Pauli::Y: return 'y';
    case Pauli::Z: return 'z';
    default: throw DomainError("identity has no axis");
  }
}

Pauli pauli_from_axis(char axis) {
  switch (axis) {
    case 'x': case 'X': return Pauli::X;
    case 'y': case 'Y': return Pauli::Y;
    case 'z': case 'Z': return Pauli::Z;
    default: throw ParseError(std::string("invalid axis '") + axis + "'");
  }
}

PauliString::PauliString(std::size_t n)
    : n_(n), x_(word_count(n), 0), z_(word_count(n), 0) {
  if (n == 0) throw DimensionError("Pauli string needs at least one qubit");
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli word", 0);
  PauliString p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'X': p.set(q, Pauli::X); break;
      case 'Y': p.set(q, Pauli::Y); break;
      case 'Z': p.set(q, Pauli::Z); break;
      default:
        throw ParseError("invalid Pauli character '" + std::string(1, text[q]) +
                             "' at position " + std::to_string(q),
                         q);
    }
  }
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t q, Pauli label) {
  PauliString p(n);
  p.set(q, label);
  return p;
}

PauliString PauliString::two_body(std::size_t n, std::size_t u, Pauli a,
                                  std::size_t v, Pauli b) {
  PauliString p(n);
  p.set(u, a);
  p.set(v, b);
  return p;
}

Pauli PauliString::at(std::size_t q) const {
  return static_cast<Pauli>((x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0));
}

void PauliString::set(std::size_t q, Pauli label) {
  if (q >= n_) throw DimensionError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
  const auto v = static_cast<std::uint8_t>(label);
  auto& xw = x_[q / kWordBits];
  auto& zw = z_[q / kWordBits];
  xw = (v & 1) ? (xw | bit) : (xw & ~bit);
  zw = (v & 2) ? (zw | bit) : (zw & ~bit);
}

bool PauliString::x_bit(std::size_t q) const {
  if (q >= n_) throw DimensionError("qubit index out of range");
  return (x_[q / kWordBits] >> (q % kWordBits)) & 1;
}

bool PauliString::z_bit(std::size_t q) const {
  if (q >= n_) throw DimensionError("qubit index out of range");
  return (z_[q / kWordBits] >> (q % kWordBits)) & 1;
}

PauliString PauliString::word() const {
  PauliString w = *this;
  w.phase_ = 0;
  return w;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < x_.size(); ++k) w += std::popcount(x_[k] | z_[k]);
  return w;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> s;
  for (std::size_t q = 0; q < n_; ++q) {
    if (at(q) != Pauli::I) s.push_back(q);
  }
  return s;
}

std::uint64_t PauliString::support_mask() const {
  if (n_ > 64) throw ResourceError("support mask needs n <= 64");
  return x_[0] | z_[0];
}

bool PauliString::is_identity_word() const { return weight() == 0; }

std::string PauliString::str() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = pauli_char(at(q));
  return s;
}

std::string PauliString::signed_str() const {
  static const char* const kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + str();
}

bool operator<(const PauliString& a, const PauliString& b) {
  const auto sa = a.str();
  const auto sb = b.str();
  if (sa != sb) return sa < sb;
  return a.phase() < b.phase();
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  PauliString r(p.size());
  int phase = p.phase() + q.phase();
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Pauli a = p.at(k);
    const Pauli b = q.at(k);
    phase += label_product_phase(a, b);
    r.set(k, static_cast<Pauli>(static_cast<std::uint8_t>(a) ^
                                static_cast<std::uint8_t>(b)));
  }
  r.set_phase(phase);
  return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  std::size_t parity = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    parity += (p.x_bit(k) && q.z_bit(k)) ? 1 : 0;
    parity += (p.z_bit(k) && q.x_bit(k)) ? 1 : 0;
  }
  return parity % 2 == 0;
}

std::optional<Commutator> commutator(const PauliString& p,
                                     const PauliString& q) {
  if (commutes(p, q)) return std::nullopt;
  // Anticommuting: PQ - QP = 2 PQ.
  PauliString pq = multiply(p, q);
  Commutator c{2.0, pq.phase(), pq.word()};
  return c;
}

double hs_norm_commutator(const PauliString& p, const PauliString& q) {
  if (commutes(p, q)) return 0.0;
  return 2.0 * std::sqrt(std::ldexp(1.0, static_cast<int>(p.size())));
}

Eigen::MatrixXcd to_matrix(const PauliString& p, std::size_t max_qubits) {
  const std::size_t n = p.size();
  if (n > max_qubits) {
    throw ResourceError("to_matrix: " + std::to_string(n) +
                        " qubits exceeds cap of " + std::to_string(max_qubits));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::size_t xmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) xmask |= std::size_t{1} << (n - 1 - q);
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    int phase = p.phase();
    double sign = 1.0;
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (col >> (n - 1 - q)) & 1;
      switch (p.at(q)) {
        case Pauli::Z: if (bit) sign = -sign; break;
        // Y|0> = i|1>, Y|1> = -i|0>.
        case Pauli::Y: phase += bit ? 3 : 1; break;
        default: break;
      }
    }
    m(col ^ xmask, col) = sign * kIPow[phase % 4];
  }
  return m;
}

}  // namespace qnb
