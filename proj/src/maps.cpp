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

#include "bakerlab/maps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace bakerlab {

namespace {

void require_even(Index d, Index min_d, const char* what) {
  if (d % 2 != 0) {
    throw InvalidArgument(std::string(what) + ": dimension must be even, got " +
                          std::to_string(d));
  }
  if (d < min_d) {
    throw InvalidArgument(std::string(what) + ": dimension must be >= " +
                          std::to_string(min_d) + ", got " + std::to_string(d));
  }
}

}  // namespace

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Baker: return "baker";
    case MapKind::DMap: return "dmap";
    case MapKind::DPrimeMap: return "dprime";
    case MapKind::BBar: return "bbar";
    case MapKind::Reflection: return "reflection";
    case MapKind::AntiperiodicFourier: return "fourier";
    case MapKind::LambdaBasisChange: return "lambda";
  }
  return "unknown";
}

std::optional<MapKind> parse_map_kind(std::string_view name) {
  for (MapKind k : {MapKind::Baker, MapKind::DMap, MapKind::DPrimeMap, MapKind::BBar,
                    MapKind::Reflection, MapKind::AntiperiodicFourier,
                    MapKind::LambdaBasisChange}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ComplexMatrix antiperiodic_fourier(Index d) {
  if (d < 2) {
    throw InvalidArgument("antiperiodic_fourier: dimension must be >= 2, got " +
                          std::to_string(d));
  }
  // (j + 1/2)(k + 1/2) / d = (2j + 1)(2k + 1) / (4d); reduce the integer
  // numerator mod 4d before forming the angle.
  const Index period = 4 * d;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(period);
  ComplexMatrix g(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index k = 0; k < d; ++k) {
      const Index n = ((2 * j + 1) * (2 * k + 1)) % period;
      g(j, k) = std::polar(scale, step * static_cast<double>(n));
    }
  }
  return g;
}

ComplexMatrix reflection(Index d) {
  if (d < 1) {
    throw InvalidArgument("reflection: dimension must be >= 1");
  }
  ComplexMatrix r = ComplexMatrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) r(d - 1 - j, j) = 1.0;
  return r;
}

ComplexMatrix block_diagonal(const ComplexMatrix& upper, const ComplexMatrix& lower) {
  ComplexMatrix out = ComplexMatrix::Zero(upper.rows() + lower.rows(),
                                          upper.cols() + lower.cols());
  out.topLeftCorner(upper.rows(), upper.cols()) = upper;
  out.bottomRightCorner(lower.rows(), lower.cols()) = lower;
  return out;
}

ComplexMatrix baker(Index d) {
  require_even(d, 4, "baker");
  const ComplexMatrix g_half_inv = antiperiodic_fourier(d / 2).adjoint();
  return antiperiodic_fourier(d) * block_diagonal(g_half_inv, g_half_inv);
}

ComplexMatrix lambda_basis(Index d) {
  require_even(d, 2, "lambda_basis");
  const Index h = d / 2;
  const ComplexMatrix r = reflection(h);
  // i Y = [[0, 1], [-1, 0]]
  ComplexMatrix out(d, d);
  out << identity(h), r, -r, identity(h);
  return out / std::sqrt(2.0);
}

ComplexMatrix d_map(Index d, int sign) {
  require_even(d, 4, "d_map");
  if (sign != 1 && sign != -1) {
    throw InvalidArgument("d_map: sign must be +1 or -1");
  }
  const ComplexMatrix g_half = antiperiodic_fourier(d / 2);
  return antiperiodic_fourier(d) *
         block_diagonal(g_half.adjoint(), static_cast<double>(sign) * g_half);
}

ComplexMatrix bbar(Index d) {
  if (d % 4 != 0 || d < 8) {
    throw InvalidArgument("bbar: dimension must be a multiple of 4 and >= 8, got " +
                          std::to_string(d));
  }
  const Index h = d / 2;
  const ComplexMatrix r = reflection(h);
  const ComplexMatrix lambda = lambda_basis(d);
  return lambda * block_diagonal(d_map(h, 1), r * d_map(h, -1) * r) * lambda.adjoint();
}

ComplexMatrix make_map(MapKind kind, Index d) {
  switch (kind) {
    case MapKind::Baker: return baker(d);
    case MapKind::DMap: return d_map(d, 1);
    case MapKind::DPrimeMap: return d_map(d, -1);
    case MapKind::BBar: return bbar(d);
    case MapKind::Reflection: return reflection(d);
    case MapKind::AntiperiodicFourier: return antiperiodic_fourier(d);
    case MapKind::LambdaBasisChange: return lambda_basis(d);
  }
  throw InvalidArgument("make_map: unknown map kind");
}

double reflection_commutator(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw InvalidArgument("reflection_commutator: matrix is not square");
  }
  // U R - R U without forming R: (U R)(j,k) = U(j, d-1-k), (R U)(j,k) = U(d-1-j, k).
  const ComplexMatrix ur = u.rowwise().reverse();
  const ComplexMatrix ru = u.colwise().reverse();
  return max_abs(ur - ru);
}

SymmetryBlocks reduce_by_symmetry(const ComplexMatrix& u) {
  require_unitary(u, "reduce_by_symmetry");
  const Index d = u.rows();
  require_even(d, 2, "reduce_by_symmetry");
  const double comm = reflection_commutator(u);
  if (!(comm < kUnitaryTol)) {
    std::ostringstream os;
    os << "reduce_by_symmetry: matrix does not commute with the reflection "
          "(max|UR - RU| = "
       << comm << ")";
    throw NumericalError(os.str());
  }
  const Index h = d / 2;
  const ComplexMatrix lambda = lambda_basis(d);
  const ComplexMatrix reduced = lambda.adjoint() * u * lambda;
  SymmetryBlocks blocks;
  blocks.minus = reduced.topLeftCorner(h, h);
  blocks.plus = reduced.bottomRightCorner(h, h);
  blocks.off_diagonal = std::max(max_abs(reduced.topRightCorner(h, h)),
                                 max_abs(reduced.bottomLeftCorner(h, h)));
  return blocks;
}

double time_reversal_residual(const ComplexMatrix& m) {
  require_unitary(m, "time_reversal_residual");
  const ComplexMatrix g = antiperiodic_fourier(m.rows());
  const ComplexMatrix conjugated = (g.adjoint() * m * g).conjugate();
  return max_abs(conjugated - m.adjoint());
}

}  // namespace bakerlab
