// Copyright 2026 qftsynth contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "qftsynth/circuit.hpp"

namespace qftsynth {

using Complex = std::complex<double>;

inline constexpr int kDenseQubitCap = 12;   // 2^12 x 2^12 complex doubles
inline constexpr int kVerifyQubitCap = 10;  // full QFT reference comparison

/**
 * Dense 2^n x 2^n matrix, row-major. Basis convention: vertex 0 is the most
 * significant bit of the basis index; this fixes gate embedding, the QFT
 * reference and the layout permutations consistently.
 */
class Unitary {
 public:
  /// Identity on `qubit_count` qubits.
  explicit Unitary(int qubit_count);

  int qubit_count() const { return n_; }
  size_t dim() const { return dim_; }

  Complex& at(size_t row, size_t col) { return a_[row * dim_ + col]; }
  const Complex& at(size_t row, size_t col) const {
    return a_[row * dim_ + col];
  }

  /// Left-multiplies by a one-qubit gate embedded at `wire`.
  void apply_1q(const std::array<Complex, 4>& m, int wire);

  /// Left-multiplies by a two-qubit gate embedded at (first, second), where
  /// `first` is the more significant qubit of the 4x4 basis.
  void apply_2q(const std::array<Complex, 16>& m, int first, int second);

 private:
  int n_;
  size_t dim_;
  std::vector<Complex> a_;
};

/// The fixed gate matrices, straight from their defining formulas.
namespace gate_matrix {
std::array<Complex, 4> h();
std::array<Complex, 4> x();
std::array<Complex, 4> ry(double xi);
std::array<Complex, 4> rz(double xi);
std::array<Complex, 4> rk(int k);
std::array<Complex, 16> cnot();
std::array<Complex, 16> crk(int k);
std::array<Complex, 16> crz(double xi);
std::array<Complex, 16> swap();
}  // namespace gate_matrix

/// Product of the circuit's gate matrices in program order (barriers are
/// skipped). Throws std::invalid_argument above kDenseQubitCap.
Unitary unitary_of(const Circuit& c);

/// Normalized QFT matrix: entry (k, j) = 2^{-n/2} * exp(2*pi*i*j*k / 2^n).
Unitary qft_matrix(int n);

/// a * b (matrix product); both operands must have equal dimension.
Unitary multiply(const Unitary& a, const Unitary& b);

/// Smallest max-norm difference between a and exp(i*alpha)*b over the global
/// phase alpha (estimated from the inner product of the two matrices).
double max_norm_distance_up_to_phase(const Unitary& a, const Unitary& b);

struct VerifyResult {
  bool equivalent = false;
  double residual = 0.0;
  double phase = 0.0;  // radians
};

/**
 * Checks a synthesized circuit against the QFT reference, taking the
 * recorded layouts into account: the circuit must equal (up to global phase)
 * P_out * QFT * P_in^{-1}, where P_in places logical qubit j at vertex
 * initial_layout[j] and P_out accounts for the cascade structure emitting
 * the transform's output bits in reversed logical order, at the vertices
 * recorded in final_layout. Equivalent iff the residual is below 1e-9.
 */
VerifyResult verify_synthesis(const Circuit& c);

}  // namespace qftsynth
