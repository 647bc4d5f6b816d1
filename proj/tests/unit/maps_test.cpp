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


#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "bakerlab/maps.hpp"
#include "bakerlab/random.hpp"
#include "bakerlab/tensor.hpp"

namespace bakerlab {
namespace {

constexpr double kTol = 1e-10;

ComplexMatrix pauli_z_kron_identity(Index half) {
  ComplexMatrix z = ComplexMatrix::Identity(2 * half, 2 * half);
  z.bottomRightCorner(half, half) *= -1.0;
  return z;
}

TEST(Fourier, TwoByTwoKernel) {
  const ComplexMatrix g = antiperiodic_fourier(2);
  const double s = 1.0 / std::sqrt(2.0);
  const double pi = std::numbers::pi;
  EXPECT_LT(std::abs(g(0, 0) - s * std::polar(1.0, pi / 4)), 1e-15);
  EXPECT_LT(std::abs(g(0, 1) - s * std::polar(1.0, 3 * pi / 4)), 1e-15);
  EXPECT_LT(std::abs(g(1, 0) - s * std::polar(1.0, 3 * pi / 4)), 1e-15);
  EXPECT_LT(std::abs(g(1, 1) - s * std::polar(1.0, pi / 4)), 1e-15);
}

TEST(Fourier, KernelAtLargerDimension) {
  const Index d = 10;
  const ComplexMatrix g = antiperiodic_fourier(d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const double arg = 2.0 * std::numbers::pi * (j + 0.5) * (k + 0.5) / d;
      EXPECT_LT(std::abs(g(j, k) - std::polar(1.0 / std::sqrt(10.0), arg)), 1e-14);
    }
}

TEST(Fourier, UnitaryAndReflectionSymmetric) {
  for (Index d = 2; d <= 40; ++d) {
    SCOPED_TRACE(d);
    const ComplexMatrix g = antiperiodic_fourier(d);
    EXPECT_LT(unitarity_residual(g), kTol);
    EXPECT_LT(max_abs(g * reflection(d) - reflection(d) * g), kTol);
  }
  EXPECT_THROW(antiperiodic_fourier(1), InvalidArgument);
}

TEST(Reflection, SendsJToMirror) {
  const ComplexMatrix r = reflection(4);
  StateVector e1 = StateVector::Zero(4);
  e1(1) = 1.0;
  StateVector e0 = StateVector::Zero(4);
  e0(0) = 1.0;
  EXPECT_EQ((r * e1)(2), Complex(1.0));
  EXPECT_EQ((r * e0)(3), Complex(1.0));
  EXPECT_EQ(reflection(1), identity(1));
}

TEST(Reflection, Involution) {
  for (Index d = 1; d <= 12; ++d) EXPECT_EQ(reflection(d) * reflection(d), identity(d));
}

TEST(Reflection, QubitRegisterIsKronOfSingleQubitFlips) {
  ComplexMatrix r = reflection(2);
  for (int n = 2; n <= 8; ++n) {
    r = kron(r, reflection(2));
    EXPECT_EQ(r, reflection(Index{1} << n));
  }
}

TEST(Baker, RejectsOddOrTinyDimension) {
  try {
    baker(7);
    FAIL() << "odd dimension accepted";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("dimension must be even"), std::string::npos);
  }
  EXPECT_THROW(baker(2), InvalidArgument);
  EXPECT_THROW(baker(0), InvalidArgument);
}

TEST(Baker, CommutesWithReflection) {
  for (Index d = 4; d <= 64; d += 2) {
    SCOPED_TRACE(d);
    const ComplexMatrix b = baker(d);
    EXPECT_LT(unitarity_residual(b), kTol);
    EXPECT_LT(reflection_commutator(b), kTol);
  }
}

TEST(Baker, TimeReversalSymmetric) {
  EXPECT_LT(time_reversal_residual(baker(8)), kTol);
  for (Index d : {4, 6, 10, 16, 30, 64}) EXPECT_LT(time_reversal_residual(baker(d)), kTol);
}

TEST(Baker, QubitFormEqualsKronWithInverseHalfTransform) {
  for (Index d = 4; d <= 256; d *= 2) {
    SCOPED_TRACE(d);
    const ComplexMatrix expected =
        antiperiodic_fourier(d) * kron(identity(2), antiperiodic_fourier(d / 2).adjoint());
    EXPECT_LT(max_abs(baker(d) - expected), 1e-12);
  }
}

TEST(Baker, DefiningBlockForm) {
  const Index d = 14;
  const ComplexMatrix ginv = antiperiodic_fourier(7).adjoint();
  ComplexMatrix blocks = ComplexMatrix::Zero(d, d);
  blocks.topLeftCorner(7, 7) = ginv;
  blocks.bottomRightCorner(7, 7) = ginv;
  EXPECT_LT(max_abs(baker(d) - antiperiodic_fourier(d) * blocks), 1e-13);
}

TEST(Lambda, Unitary) {
  for (Index d = 2; d <= 32; d += 2) EXPECT_LT(unitarity_residual(lambda_basis(d)), kTol);
  EXPECT_THROW(lambda_basis(5), InvalidArgument);
}

TEST(Lambda, FourDimensionalBlockForm) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.topLeftCorner(2, 2) = s * identity(2);
  expected.bottomRightCorner(2, 2) = s * identity(2);
  expected.topRightCorner(2, 2) = s * reflection(2);
  expected.bottomLeftCorner(2, 2) = -s * reflection(2);
  EXPECT_LT(max_abs(lambda_basis(4) - expected), 1e-15);
}

TEST(Lambda, ColumnsHaveDefiniteParity) {
  for (Index d : {4, 8, 10, 16}) {
    const ComplexMatrix l = lambda_basis(d);
    EXPECT_LT(max_abs(reflection(d) * l + l * pauli_z_kron_identity(d / 2)), kTol);
  }
}

TEST(ReduceBySymmetry, IdentityGivesIdentityBlocks) {
  const SymmetryBlocks blocks = reduce_by_symmetry(identity(8));
  EXPECT_LT(max_abs(blocks.minus - identity(4)), 1e-14);
  EXPECT_LT(max_abs(blocks.plus - identity(4)), 1e-14);
  EXPECT_LT(blocks.off_diagonal, 1e-14);
}

TEST(ReduceBySymmetry, BakerBlocksAreUnitary) {
  for (Index d : {8, 16, 32, 64, 128, 256}) {
    SCOPED_TRACE(d);
    const SymmetryBlocks blocks = reduce_by_symmetry(baker(d));
    EXPECT_LT(blocks.off_diagonal, 1e-9);
    EXPECT_LT(unitarity_residual(blocks.minus), kTol);
    EXPECT_LT(unitarity_residual(blocks.plus), kTol);
  }
}

TEST(ReduceBySymmetry, RejectsAsymmetricMap) {
  RngStream rng(3, 0);
  try {
    reduce_by_symmetry(sample_cue(8, rng));
    FAIL() << "asymmetric map accepted";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("commut"), std::string::npos);
  }
  EXPECT_THROW(reduce_by_symmetry(identity(5)), InvalidArgument);
}

TEST(DMap, LacksReflectionSymmetry) { EXPECT_GT(reflection_commutator(d_map(8, +1)), 0.1); }

TEST(DMap, TimeReversalSymmetric) {
  for (Index d : {4, 8, 16, 32, 64, 128, 256}) {
    SCOPED_TRACE(d);
    EXPECT_LT(time_reversal_residual(d_map(d, +1)), kTol);
    EXPECT_LT(time_reversal_residual(d_map(d, -1)), kTol);
  }
}

TEST(DMap, UnitaryForEvenDimensions) {
  for (Index d = 4; d <= 40; d += 2) {
    EXPECT_LT(unitarity_residual(d_map(d, +1)), kTol);
    EXPECT_LT(unitarity_residual(d_map(d, -1)), kTol);
  }
  EXPECT_THROW(d_map(9, +1), InvalidArgument);
  EXPECT_THROW(d_map(8, 0), InvalidArgument);
}

TEST(DMap, DefiningBlockForm) {
  const Index d = 12;
  const ComplexMatrix g = antiperiodic_fourier(6);
  for (int sign : {+1, -1}) {
    ComplexMatrix blocks = ComplexMatrix::Zero(d, d);
    blocks.topLeftCorner(6, 6) = g.adjoint();
    blocks.bottomRightCorner(6, 6) = static_cast<double>(sign) * g;
    EXPECT_LT(max_abs(d_map(d, sign) - antiperiodic_fourier(d) * blocks), 1e-13);
  }
}

TEST(BBar, BlocksAreTheHalfSizeDMaps) {
  const ComplexMatrix l = lambda_basis(8);
  const ComplexMatrix reduced = l.adjoint() * bbar(8) * l;
  const ComplexMatrix r4 = reflection(4);
  EXPECT_LT(max_abs(reduced.topLeftCorner(4, 4) - d_map(4, +1)), 1e-12);
  EXPECT_LT(max_abs(reduced.bottomRightCorner(4, 4) - r4 * d_map(4, -1) * r4), 1e-12);
  EXPECT_LT(max_abs(reduced.topRightCorner(4, 4)), 1e-12);
  EXPECT_LT(max_abs(reduced.bottomLeftCorner(4, 4)), 1e-12);
}

TEST(BBar, UnitaryAndSymmetric) {
  for (Index d : {8, 12, 16, 64, 256}) {
    SCOPED_TRACE(d);
    const ComplexMatrix b = bbar(d);
    EXPECT_LT(unitarity_residual(b), kTol);
    EXPECT_LT(reflection_commutator(b), kTol);
  }
  EXPECT_THROW(bbar(6), InvalidArgument);
  EXPECT_THROW(bbar(10), InvalidArgument);
}

TEST(SymmetrySuite, AllQubitDimensions) {
  for (Index d = 4; d <= 256; d *= 2) {
    SCOPED_TRACE(d);
    for (const ComplexMatrix& m :
         {antiperiodic_fourier(d), baker(d), d_map(d, +1), d_map(d, -1), lambda_basis(d),
          reflection(d)}) {
      EXPECT_LT(unitarity_residual(m), kTol);
    }
    const ComplexMatrix b = baker(d);
    EXPECT_LT(reflection_commutator(b), kTol);
    EXPECT_LT(time_reversal_residual(b), kTol);
    EXPECT_LT(time_reversal_residual(d_map(d, +1)), kTol);
    EXPECT_LT(reduce_by_symmetry(b).off_diagonal, 1e-9);
  }
}

TEST(MapKind, NamesRoundTrip) {
  for (MapKind k : {MapKind::Baker, MapKind::DMap, MapKind::DPrimeMap, MapKind::BBar,
                    MapKind::Reflection, MapKind::AntiperiodicFourier,
                    MapKind::LambdaBasisChange}) {
    const auto parsed = parse_map_kind(to_string(k));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, k);
  }
  EXPECT_FALSE(parse_map_kind("cat").has_value());
  EXPECT_EQ(make_map(MapKind::DPrimeMap, 8), d_map(8, -1));
  EXPECT_EQ(make_map(MapKind::Baker, 8), baker(8));
}

}  // namespace
}  // namespace bakerlab
