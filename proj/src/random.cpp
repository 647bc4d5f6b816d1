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

#include "bakerlab/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bakerlab/maps.hpp"

namespace bakerlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed),
      stream_id_(stream_id),
      engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(~stream_id))) {}

double RngStream::uniform() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

Complex RngStream::complex_normal() {
  const double radius = std::sqrt(-std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  return std::polar(radius, angle);
}

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::CUE: return "cue";
    case EnsembleKind::COE: return "coe";
    case EnsembleKind::SymmetricBaker: return "symmetric";
  }
  return "unknown";
}

std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name) {
  for (EnsembleKind k : {EnsembleKind::CUE, EnsembleKind::COE, EnsembleKind::SymmetricBaker}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

StateVector haar_state(Index d, RngStream& rng) {
  if (d < 1) throw InvalidArgument("haar_state: dimension must be >= 1");
  StateVector psi(d);
  for (Index j = 0; j < d; ++j) psi(j) = rng.complex_normal();
  psi /= psi.norm();
  return psi;
}

StateVector product_state(const Bipartition& part, RngStream& rng) {
  const StateVector a = haar_state(part.d_a(), rng);
  const StateVector b = haar_state(part.d_b(), rng);
  StateVector psi(part.dim());
  for (Index ja = 0; ja < part.d_a(); ++ja) {
    psi.segment(ja * part.d_b(), part.d_b()) = a(ja) * b;
  }
  return psi;
}

ComplexMatrix sample_cue(Index d, RngStream& rng) {
  if (d < 1) throw InvalidArgument("sample_cue: dimension must be >= 1");
  ComplexMatrix z(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) z(i, j) = rng.complex_normal();
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Index k = 0; k < d; ++k) {
    const double mod = std::abs(r(k, k));
    if (mod > 0.0) q.col(k) *= r(k, k) / mod;
  }
  return q;
}

ComplexMatrix sample_coe(Index d, RngStream& rng) {
  const ComplexMatrix v = sample_cue(d, rng);
  const ComplexMatrix w = v * v.transpose();
  return 0.5 * (w + w.transpose());
}

ComplexMatrix sample_symmetric(Index d, RngStream& rng) {
  if (d % 2 != 0 || d < 2) {
    throw InvalidArgument("sample_symmetric: dimension must be even, got " +
                          std::to_string(d));
  }
  const ComplexMatrix w1 = sample_coe(d / 2, rng);
  const ComplexMatrix w2 = sample_coe(d / 2, rng);
  const ComplexMatrix lambda = lambda_basis(d);
  return lambda * block_diagonal(w1, w2) * lambda.adjoint();
}

ComplexMatrix sample_local_unitary(const Bipartition& part, RngStream& rng) {
  const ComplexMatrix va = sample_cue(part.d_a(), rng);
  const ComplexMatrix vb = sample_cue(part.d_b(), rng);
  return kron(va, vb);
}

ComplexMatrix sample_ensemble(EnsembleKind kind, Index d, RngStream& rng) {
  switch (kind) {
    case EnsembleKind::CUE: return sample_cue(d, rng);
    case EnsembleKind::COE: return sample_coe(d, rng);
    case EnsembleKind::SymmetricBaker: return sample_symmetric(d, rng);
  }
  throw InvalidArgument("sample_ensemble: unknown ensemble");
}

}  // namespace bakerlab
