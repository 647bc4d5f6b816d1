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

// Entanglement functionals of bipartite pure states and of unitary dynamics:
// linear entropy, its time evolution, Monte-Carlo entangling power, and the
// closed-form long-time averages expressed through reduced eigenvectors.

#include <cstdint>
#include <span>
#include <vector>

#include "bakerlab/random.hpp"
#include "bakerlab/tensor.hpp"

namespace bakerlab {

struct EntropySample {
  double value = 0.0;
  std::int64_t time_step = 0;
  std::int64_t state_id = 0;
  std::int64_t map_id = 0;
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
};

/// tr(rho_A^2) of a pure state.
double purity(const StateVector& psi, const Bipartition& part);

/// 1 - tr(rho_keep^2). The A and B values agree for pure states.
double linear_entropy(const StateVector& psi, const Bipartition& part,
                      Subsystem keep = Subsystem::A);

/// 1 - 1/min(d_A, d_B), reached by maximally entangled states.
double max_linear_entropy(const Bipartition& part);

/// (d_A - 1)(d_B - 1) / (d_A d_B + 1), the mean linear entropy of Haar-random
/// pure states.
double cue_mean_entropy(const Bipartition& part);

/// S_L(U^n psi0) for n = 1..n_max by repeated application of U.
std::vector<EntropySample> entropy_timeseries(const ComplexMatrix& u,
                                              const StateVector& psi0,
                                              const Bipartition& part,
                                              std::int64_t n_max,
                                              std::int64_t state_id = 0);

/// Mean of S_L(U |psi_A> (x) |psi_B>) over n_samples Haar product states.
/// Sample i is drawn from RngStream(seed, i). Needs n_samples >= 2.
MonteCarloEstimate entangling_power_mc(const ComplexMatrix& u, const Bipartition& part,
                                       std::int64_t n_samples, std::uint64_t seed);

/// For each of n_states product states (state s from RngStream(seed, s)), the
/// entropies S_L(U^n psi_s) for n_min <= n <= n_max. State-major order.
std::vector<EntropySample> empirical_asymptotic_distribution(
    const ComplexMatrix& u, const Bipartition& part, std::int64_t n_min,
    std::int64_t n_max, std::int64_t n_states, std::uint64_t seed);

/// Same sweep as empirical_asymptotic_distribution, reduced on the fly: the
/// mean over all samples and the standard error from the spread of the
/// per-state time averages. Needs n_states >= 2.
MonteCarloEstimate time_state_average(const ComplexMatrix& u, const Bipartition& part,
                                      std::int64_t n_min, std::int64_t n_max,
                                      std::int64_t n_states, std::uint64_t seed);

/// Single-application entropies over a random-map ensemble. Map i and its
/// n_states product states all come from RngStream(seed, i), map first.
std::vector<EntropySample> ensemble_entropies(EnsembleKind kind, const Bipartition& part,
                                              std::int64_t n_maps, std::int64_t n_states,
                                              std::uint64_t seed);

/// Linear entropies of n Haar-random (generally entangled) states.
std::vector<double> haar_state_entropies(const Bipartition& part, std::int64_t n,
                                         std::uint64_t seed);

// ---------------------------------------------------------------------------
// Eigenphase commensurability

/// One nontrivial solution of phi_k - phi_l + phi_m - phi_n = 0 (mod 2 pi).
struct Resonance {
  Index k = 0, l = 0, m = 0, n = 0;
  double mismatch = 0.0;
};

struct CommensurabilityPolicy {
  double tol = 1e-8;
  /// Up to this dimension every quadruple is covered; above it `budget`
  /// uniformly drawn quadruples are tested instead. The exhaustive scan costs
  /// O(d^2 log d) and may be raised freely, but at tol = 1e-8 spectra with
  /// d >~ 200 show accidental near-coincidences (see expected_accidental).
  Index exhaustive_max_dim = 64;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  std::size_t max_listed = 32;
};

struct CommensurabilityReport {
  bool exhaustive = true;
  double tol = 0.0;
  Index dim = 0;
  /// Quadruples represented by the search. Exhaustive: d^4.
  double quadruples_covered = 0.0;
  /// Fraction of all d^4 quadruples covered.
  double coverage = 0.0;
  /// Distinct resonances found; for the exhaustive scan each counts an
  /// unordered pair of distinct unordered index pairs {k,m} != {l,n}.
  std::uint64_t violation_count = 0;
  /// Hits expected from uniformly random, uncorrelated phases at this
  /// tolerance and coverage. A violation count of this order is accidental.
  double expected_accidental = 0.0;
  /// True when counting stopped early on a heavily degenerate spectrum.
  bool count_saturated = false;
  std::vector<Resonance> violations;

  bool clean() const { return violation_count == 0; }
};

/// Searches for resonances phi_k - phi_l + phi_m - phi_n = 0 (mod 2 pi) other
/// than the trivial k = l, m = n and k = n, l = m. A clean report only says
/// none was found in the searched set.
CommensurabilityReport commensurability_check(std::span<const double> phases,
                                              const CommensurabilityPolicy& policy = {});

// ---------------------------------------------------------------------------
// Long-time averages from the eigenbasis

/// Reduced density matrices of each eigenvector and their Hilbert-Schmidt
/// overlaps overlap_a(i, j) = tr(rho_A^i rho_A^j), likewise for B.
struct ReducedEigenData {
  std::vector<ComplexMatrix> rho_a;
  std::vector<ComplexMatrix> rho_b;
  Eigen::MatrixXd overlap_a;
  Eigen::MatrixXd overlap_b;
};

ReducedEigenData reduce_eigenvectors(const EigenSystem& eig, const Bipartition& part);

/// Asymptotic entropy and asymptotic entangling power of one unitary. The
/// formulas hold when the eigenphases have no nontrivial resonance; the
/// commensurability report is computed once at construction and exposed so
/// callers can flag results that rest on violated assumptions.
///
/// The cross term tr(rho_A^{ij} rho_A^{ji}) is evaluated as
/// tr(rho_B^i rho_B^j), so only the d diagonal reductions per side are kept.
class AsymptoticEntanglement {
 public:
  AsymptoticEntanglement(const EigenSystem& eig, const Bipartition& part,
                         const CommensurabilityPolicy& policy = {});

  /// Long-time average of S_L(U^n psi).
  double entropy(const StateVector& psi) const;
  /// Long-time average of e_p(U^n) over Haar product states.
  double entangling_power() const;

  bool assumptions_hold() const { return report_.clean(); }
  const CommensurabilityReport& commensurability() const { return report_; }
  const ReducedEigenData& reduced() const { return reduced_; }
  const Bipartition& bipartition() const { return part_; }

 private:
  Bipartition part_;
  ComplexMatrix vectors_;
  ReducedEigenData reduced_;
  CommensurabilityReport report_;
};

struct FormulaValue {
  double value = 0.0;
  /// Set when the commensurability search found a resonance.
  bool assumptions_violated = false;
};

FormulaValue asymptotic_entropy(const EigenSystem& eig, const StateVector& psi,
                                const Bipartition& part,
                                const CommensurabilityPolicy& policy = {});

FormulaValue asymptotic_entangling_power(const EigenSystem& eig, const Bipartition& part,
                                         const CommensurabilityPolicy& policy = {});

}  // namespace bakerlab
