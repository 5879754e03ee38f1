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

#include "qftsynth/simulator.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace qftsynth {

namespace {

constexpr Complex kI{0.0, 1.0};

double phase_step(int k) {
  if (k < 1 || k > 62) {
    throw std::invalid_argument("phase degree out of range");
  }
  return std::numbers::pi / static_cast<double>(int64_t{1} << (k - 1));
}

}  // namespace

namespace gate_matrix {

std::array<Complex, 4> h() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s, -s};
}

std::array<Complex, 4> x() { return {0, 1, 1, 0}; }

std::array<Complex, 4> ry(double xi) {
  return {std::cos(xi / 2), -std::sin(xi / 2), std::sin(xi / 2),
          std::cos(xi / 2)};
}

std::array<Complex, 4> rz(double xi) {
  return {std::exp(kI * (xi / 2)), 0, 0, std::exp(-kI * (xi / 2))};
}

std::array<Complex, 4> rk(int k) {
  return {1, 0, 0, std::exp(kI * phase_step(k))};
}

std::array<Complex, 16> cnot() {
  return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
}

std::array<Complex, 16> crk(int k) {
  return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0,
          0, 0, 0, std::exp(kI * phase_step(k))};
}

std::array<Complex, 16> crz(double xi) {
  return {1, 0, 0, 0,
          0, 1, 0, 0,
          0, 0, std::exp(kI * (xi / 2)), 0,
          0, 0, 0, std::exp(-kI * (xi / 2))};
}

std::array<Complex, 16> swap() {
  return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
}

}  // namespace gate_matrix

Unitary::Unitary(int qubit_count) : n_(qubit_count) {
  if (qubit_count < 1 || qubit_count > kDenseQubitCap) {
    throw std::invalid_argument("dense unitary supports 1.." +
                                std::to_string(kDenseQubitCap) + " qubits");
  }
  dim_ = size_t{1} << n_;
  a_.assign(dim_ * dim_, Complex{0, 0});
  for (size_t i = 0; i < dim_; ++i) at(i, i) = 1.0;
}

void Unitary::apply_1q(const std::array<Complex, 4>& m, int wire) {
  if (wire < 0 || wire >= n_) {
    throw std::invalid_argument("wire out of range");
  }
  const size_t bit = size_t{1} << (n_ - 1 - wire);
  for (size_t r = 0; r < dim_; ++r) {
    if (r & bit) continue;
    Complex* row0 = &a_[r * dim_];
    Complex* row1 = &a_[(r | bit) * dim_];
    for (size_t col = 0; col < dim_; ++col) {
      const Complex v0 = row0[col];
      const Complex v1 = row1[col];
      row0[col] = m[0] * v0 + m[1] * v1;
      row1[col] = m[2] * v0 + m[3] * v1;
    }
  }
}

void Unitary::apply_2q(const std::array<Complex, 16>& m, int first,
                       int second) {
  if (first < 0 || first >= n_ || second < 0 || second >= n_ ||
      first == second) {
    throw std::invalid_argument("invalid two-qubit wires");
  }
  const size_t b0 = size_t{1} << (n_ - 1 - first);
  const size_t b1 = size_t{1} << (n_ - 1 - second);
  for (size_t r = 0; r < dim_; ++r) {
    if ((r & b0) || (r & b1)) continue;
    Complex* rows[4] = {&a_[r * dim_], &a_[(r | b1) * dim_],
                        &a_[(r | b0) * dim_], &a_[(r | b0 | b1) * dim_]};
    for (size_t col = 0; col < dim_; ++col) {
      Complex v[4];
      for (int i = 0; i < 4; ++i) v[i] = rows[i][col];
      for (int i = 0; i < 4; ++i) {
        rows[i][col] = m[static_cast<size_t>(i) * 4 + 0] * v[0] +
                       m[static_cast<size_t>(i) * 4 + 1] * v[1] +
                       m[static_cast<size_t>(i) * 4 + 2] * v[2] +
                       m[static_cast<size_t>(i) * 4 + 3] * v[3];
      }
    }
  }
}

Unitary unitary_of(const Circuit& c) {
  if (c.qubit_count() > kDenseQubitCap) {
    throw std::invalid_argument("circuit exceeds the dense simulation cap");
  }
  Unitary u(c.qubit_count());
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kH:
        u.apply_1q(gate_matrix::h(), g.q0);
        break;
      case GateKind::kX:
        u.apply_1q(gate_matrix::x(), g.q0);
        break;
      case GateKind::kRz:
        u.apply_1q(gate_matrix::rz(g.angle), g.q0);
        break;
      case GateKind::kCnot:
        u.apply_2q(gate_matrix::cnot(), g.q0, g.q1);
        break;
      case GateKind::kCrd:
        u.apply_2q(gate_matrix::crk(g.degree), g.q0, g.q1);
        break;
      case GateKind::kSwap:
        u.apply_2q(gate_matrix::swap(), g.q0, g.q1);
        break;
      case GateKind::kBarrier:
        break;
    }
  }
  return u;
}

Unitary qft_matrix(int n) {
  Unitary u(n);
  const size_t dim = u.dim();
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  const double unit = 2.0 * std::numbers::pi / static_cast<double>(dim);
  for (size_t k = 0; k < dim; ++k) {
    for (size_t j = 0; j < dim; ++j) {
      const double angle = unit * static_cast<double>((j * k) % dim);
      u.at(k, j) = norm * std::exp(kI * angle);
    }
  }
  return u;
}

Unitary multiply(const Unitary& a, const Unitary& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  Unitary out(a.qubit_count());
  const size_t dim = a.dim();
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) out.at(r, c) = 0;
    for (size_t k = 0; k < dim; ++k) {
      const Complex ark = a.at(r, k);
      if (ark == Complex{0, 0}) continue;
      for (size_t c = 0; c < dim; ++c) out.at(r, c) += ark * b.at(k, c);
    }
  }
  return out;
}

double max_norm_distance_up_to_phase(const Unitary& a, const Unitary& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const size_t dim = a.dim();
  Complex inner{0, 0};
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      inner += a.at(r, c) * std::conj(b.at(r, c));
    }
  }
  const double alpha = std::abs(inner) < 1e-12 ? 0.0 : std::arg(inner);
  const Complex rot = std::exp(kI * alpha);
  double worst = 0.0;
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      worst = std::max(worst, std::abs(a.at(r, c) - rot * b.at(r, c)));
    }
  }
  return worst;
}

VerifyResult verify_synthesis(const Circuit& c) {
  const int n = c.qubit_count();
  if (n > kVerifyQubitCap) {
    throw std::invalid_argument("verification supports at most " +
                                std::to_string(kVerifyQubitCap) + " qubits");
  }
  if (static_cast<int>(c.initial_layout.size()) != n ||
      static_cast<int>(c.final_layout.size()) != n) {
    throw std::invalid_argument("circuit carries no layout metadata");
  }

  const Unitary u = unitary_of(c);
  const Unitary qft = qft_matrix(n);
  const size_t dim = u.dim();

  // Places logical-space basis bits at the vertices given by the map.
  auto embed = [&](const std::vector<int>& map, size_t x) {
    size_t y = 0;
    for (int j = 0; j < n; ++j) {
      if ((x >> (n - 1 - j)) & 1) {
        y |= size_t{1} << (n - 1 - map[static_cast<size_t>(j)]);
      }
    }
    return y;
  };

  // The cascades leave the transform of logical qubit j on the wire that
  // carries output bit n-1-j, so the output permutation reads final_layout
  // in reverse logical order.
  std::vector<int> out_map(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    out_map[static_cast<size_t>(i)] =
        c.final_layout[static_cast<size_t>(n - 1 - i)];
  }

  Unitary ref(n);
  for (size_t a = 0; a < dim; ++a) {
    const size_t row = embed(out_map, a);
    for (size_t b = 0; b < dim; ++b) {
      ref.at(row, embed(c.initial_layout, b)) = qft.at(a, b);
    }
  }

  VerifyResult result;
  Complex inner{0, 0};
  for (size_t r = 0; r < dim; ++r) {
    for (size_t col = 0; col < dim; ++col) {
      inner += u.at(r, col) * std::conj(ref.at(r, col));
    }
  }
  result.phase = std::abs(inner) < 1e-12 ? 0.0 : std::arg(inner);
  const Complex rot = std::exp(kI * result.phase);
  double worst = 0.0;
  for (size_t r = 0; r < dim; ++r) {
    for (size_t col = 0; col < dim; ++col) {
      worst = std::max(worst, std::abs(u.at(r, col) - rot * ref.at(r, col)));
    }
  }
  result.residual = worst;
  result.equivalent = worst < 1e-9;
  return result;
}

}  // namespace qftsynth
