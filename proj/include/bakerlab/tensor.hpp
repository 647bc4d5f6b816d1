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

// Dense complex linear algebra shared by the whole library.
//
// Index convention: a basis state |j> of a bipartite space H_A (x) H_B is
// |j_A> (x) |j_B> with j = j_A * d_B + j_B, i.e. the left tensor factor is
// the most significant digit. kron() and partial_trace() both follow it.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bakerlab/error.hpp"

namespace bakerlab {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kEigenTol = 1e-8;

enum class Subsystem { A, B };

/// Split of a d-dimensional space into d_A x d_B. Both factors must be at
/// least 2.
class Bipartition {
 public:
  Bipartition(Index d_a, Index d_b);

  Index d_a() const { return d_a_; }
  Index d_b() const { return d_b_; }
  Index dim() const { return d_a_ * d_b_; }
  /// (d_A + 1)(d_B + 1)
  Index dim_prime() const { return (d_a_ + 1) * (d_b_ + 1); }
  Index dim_of(Subsystem s) const { return s == Subsystem::A ? d_a_ : d_b_; }

  Bipartition swapped() const { return {d_b_, d_a_}; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  Index d_a_;
  Index d_b_;
};

ComplexMatrix identity(Index d);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
/// Kronecker product, left factor most significant.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a d x d operator. rho need not be Hermitian, which lets
/// the same routine produce the off-diagonal reductions tr_B |e_i><e_j|.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Bipartition& part,
                            Subsystem keep);

/// Reduced density matrix of a pure state without forming |psi><psi|.
ComplexMatrix reduced_density(const StateVector& psi, const Bipartition& part,
                              Subsystem keep);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& a);
/// max |U U^dagger - I|
double unitarity_residual(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kUnitaryTol);
/// Throws NumericalError naming `what` when u fails the unitarity gate.
void require_unitary(const ComplexMatrix& u, const char* what);

/// Operator exchanging the two factors of a d_sub x d_sub space.
ComplexMatrix swap_operator(Index d_sub);

/// Re-expresses a state of H_A (x) H_B as a state of H_B (x) H_A.
StateVector swap_subsystems(const StateVector& psi, const Bipartition& part);

/// Eigen-decomposition of a unitary. phases[k] is in [0, 2pi), ascending, and
/// vectors.col(k) is the matching eigenvector; the columns are orthonormal.
struct EigenSystem {
  std::vector<double> phases;
  ComplexMatrix vectors;
  /// max_k |U e_k - exp(i phi_k) e_k|_2
  double max_residual = 0.0;
  /// max_{j != k} |<e_j|e_k>|
  double max_overlap = 0.0;

  Index dim() const { return vectors.cols(); }
};

/// Throws InvalidArgument for non-square input, NumericalError for a
/// non-unitary input or a failed eigensolve.
EigenSystem eigensystem(const ComplexMatrix& u);

/// max |sum_k exp(i phi_k) |e_k><e_k| - U|
double reconstruction_residual(const EigenSystem& eig, const ComplexMatrix& u);

}  // namespace bakerlab
