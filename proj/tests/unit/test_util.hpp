// Copyright 2026 The bakerlab Authors
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

#include <cmath>
#include <random>

#include "bakerlab/tensor.hpp"

namespace bakerlab::testing {

// Test-local generator, independent of RngStream.
inline ComplexMatrix random_matrix(Index rows, Index cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(gen), normal(gen));
  }
  return m;
}

inline StateVector random_state(Index d, std::mt19937_64& gen) {
  StateVector v = random_matrix(d, 1, gen).col(0);
  return v / v.norm();
}

inline ComplexMatrix random_unitary(Index d, std::mt19937_64& gen) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(d, d, gen));
  return qr.householderQ();
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

// sum_k |k>|k> / sqrt(d_small) embedded in d_a x d_b.
inline StateVector maximally_entangled(Index d_a, Index d_b) {
  StateVector v = StateVector::Zero(d_a * d_b);
  const Index small = std::min(d_a, d_b);
  for (Index k = 0; k < small; ++k) v(k * d_b + k) = 1.0 / std::sqrt(static_cast<double>(small));
  return v;
}

}  // namespace bakerlab::testing
