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

// Unitary maps built from the antiperiodic Fourier transform: the quantum
// baker, its reflection symmetry, the parity basis change and the
// symmetry-free D maps.

#include <optional>
#include <string_view>

#include "bakerlab/tensor.hpp"

namespace bakerlab {

enum class MapKind {
  Baker,
  DMap,
  DPrimeMap,
  BBar,
  Reflection,
  AntiperiodicFourier,
  LambdaBasisChange,
};

std::string_view to_string(MapKind kind);
/// Accepts the CLI spellings: baker, dmap, dprime, bbar, reflection, fourier,
/// lambda.
std::optional<MapKind> parse_map_kind(std::string_view name);

/// G_d[j,k] = exp(+2 pi i (j + 1/2)(k + 1/2) / d) / sqrt(d). d >= 2.
ComplexMatrix antiperiodic_fourier(Index d);

/// |j> -> |d - 1 - j>. d >= 1.
ComplexMatrix reflection(Index d);

/// B_d = G_d blockdiag(G_{d/2}^-1, G_{d/2}^-1) for any even d >= 4.
ComplexMatrix baker(Index d);

/// Lambda = (I_d + i Y (x) R_{d/2}) / sqrt(2). Its first d/2 columns are
/// odd under R_d, the last d/2 even.
ComplexMatrix lambda_basis(Index d);

/// |0><0| (x) upper + |1><1| (x) lower.
ComplexMatrix block_diagonal(const ComplexMatrix& upper, const ComplexMatrix& lower);

/// G_d (|0><0| (x) G_{d/2}^-1 + sign |1><1| (x) G_{d/2}). sign = +1 gives
/// D_d, sign = -1 gives D'_d.
ComplexMatrix d_map(Index d, int sign);

/// Lambda (|0><0| (x) D_{d/2} + |1><1| (x) R_{d/2} D'_{d/2} R_{d/2}) Lambda^dagger,
/// d divisible by 4.
ComplexMatrix bbar(Index d);

/// Dispatches to the constructors above. DPrimeMap is d_map(d, -1).
ComplexMatrix make_map(MapKind kind, Index d);

struct SymmetryBlocks {
  ComplexMatrix minus;  ///< odd-parity sector
  ComplexMatrix plus;   ///< even-parity sector
  /// max entry of the off-diagonal blocks of Lambda^dagger U Lambda
  double off_diagonal = 0.0;
};

/// Block-diagonalizes a reflection-symmetric unitary. Throws NumericalError
/// carrying the measured commutator norm when U does not commute with R_d.
SymmetryBlocks reduce_by_symmetry(const ComplexMatrix& u);

/// max |U R_d - R_d U|
double reflection_commutator(const ComplexMatrix& u);

/// max |(G_d^-1 M G_d)^* - M^-1|; zero for time-reversal symmetric maps.
double time_reversal_residual(const ComplexMatrix& m);

}  // namespace bakerlab
