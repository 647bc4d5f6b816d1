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

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "bakerlab/tensor.hpp"

namespace bakerlab {

/// Deterministic random stream identified by (master_seed, stream_id). Two
/// streams with the same pair produce bit-identical draws. Monte-Carlo code
/// uses one stream per sample index so results do not depend on scheduling.
/// A stream is not thread-safe; give each worker its own.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on (0, 1], 53 bits.
  double uniform();
  /// Standard complex normal, E|z|^2 = 1. Box-Muller on two uniforms.
  Complex complex_normal();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

enum class EnsembleKind { CUE, COE, SymmetricBaker };

std::string_view to_string(EnsembleKind kind);
/// cue, coe, symmetric
std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name);

/// Unitarily invariant random pure state of dimension d >= 1.
StateVector haar_state(Index d, RngStream& rng);

/// |psi_A> (x) |psi_B> with both factors Haar distributed (A drawn first).
StateVector product_state(const Bipartition& part, RngStream& rng);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of diag(R) folded back into Q.
ComplexMatrix sample_cue(Index d, RngStream& rng);

/// W = V V^T with V from sample_cue; symmetric and unitary.
ComplexMatrix sample_coe(Index d, RngStream& rng);

/// Lambda (|0><0| (x) W1 + |1><1| (x) W2) Lambda^dagger with W1, W2
/// independent COE matrices of dimension d/2. Commutes with the reflection.
ComplexMatrix sample_symmetric(Index d, RngStream& rng);

/// V_A (x) V_B with independent CUE factors (A drawn first).
ComplexMatrix sample_local_unitary(const Bipartition& part, RngStream& rng);

ComplexMatrix sample_ensemble(EnsembleKind kind, Index d, RngStream& rng);

}  // namespace bakerlab
