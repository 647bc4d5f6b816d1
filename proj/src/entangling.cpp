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

#include "bakerlab/entangling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bakerlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// States are propagated in fixed-width blocks so the result for a given state
// does not depend on how many other states share its block.
constexpr Index kBlockWidth = 16;

// Resonance counting stops here; spectra this degenerate are reported as
// saturated.
constexpr std::uint64_t kResonanceCountCap = 1'000'000;

void require_positive(std::int64_t value, std::int64_t min, const char* what) {
  if (value < min) {
    throw InvalidArgument(std::string(what) + " must be >= " + std::to_string(min) +
                          ", got " + std::to_string(value));
  }
}

void require_operator_dim(const ComplexMatrix& u, const Bipartition& part,
                          const char* what) {
  if (u.rows() != part.dim() || u.cols() != part.dim()) {
    throw InvalidArgument(std::string(what) + ": map dimension " +
                          std::to_string(u.rows()) + " does not match bipartition " +
                          std::to_string(part.d_a()) + "x" + std::to_string(part.d_b()));
  }
}

// Purity of pure-state columns, reusing one small Gram workspace.
class PurityKernel {
 public:
  explicit PurityKernel(const Bipartition& part)
      : d_a_(part.d_a()), d_b_(part.d_b()) {
    const Index small = std::min(d_a_, d_b_);
    gram_.resize(small, small);
  }

  double operator()(const Complex* amplitudes) {
    const Eigen::Map<const ComplexMatrix> m(amplitudes, d_b_, d_a_);
    if (d_a_ <= d_b_) {
      gram_.noalias() = m.adjoint() * m;
    } else {
      gram_.noalias() = m * m.adjoint();
    }
    return gram_.squaredNorm();
  }

 private:
  Index d_a_;
  Index d_b_;
  ComplexMatrix gram_;
};

// Applies u to the block n_max times and reports S_L for the first `used`
// columns at every step n >= n_min.
template <class Visitor>
void evolve_block(const ComplexMatrix& u, ComplexMatrix block, Index used,
                  const Bipartition& part, std::int64_t n_min, std::int64_t n_max,
                  Visitor&& visit) {
  PurityKernel purity_of(part);
  ComplexMatrix next(block.rows(), block.cols());
  for (std::int64_t n = 1; n <= n_max; ++n) {
    next.noalias() = u * block;
    block.swap(next);
    if (n < n_min) continue;
    for (Index c = 0; c < used; ++c) {
      visit(c, n, 1.0 - purity_of(block.col(c).data()));
    }
  }
}

// Runs evolve_block over n_states product states, state s drawn from
// RngStream(seed, s). visit(state_id, n, entropy).
template <class Visitor>
void sweep_product_states(const ComplexMatrix& u, const Bipartition& part,
                          std::int64_t n_min, std::int64_t n_max,
                          std::int64_t n_states, std::uint64_t seed, Visitor&& visit) {
  for (std::int64_t first = 0; first < n_states; first += kBlockWidth) {
    const Index used = static_cast<Index>(std::min<std::int64_t>(kBlockWidth, n_states - first));
    ComplexMatrix block = ComplexMatrix::Zero(part.dim(), kBlockWidth);
    for (Index c = 0; c < used; ++c) {
      RngStream rng(seed, static_cast<std::uint64_t>(first + c));
      block.col(c) = product_state(part, rng);
    }
    evolve_block(u, std::move(block), used, part, n_min, n_max,
                 [&](Index c, std::int64_t n, double s) { visit(first + c, n, s); });
  }
}

MonteCarloEstimate summarize(std::span<const double> values) {
  MonteCarloEstimate est;
  est.n_samples = static_cast<std::int64_t>(values.size());
  if (values.empty()) return est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    const double var = ss / static_cast<double>(values.size() - 1);
    est.std_error = std::sqrt(var / static_cast<double>(values.size()));
  }
  return est;
}

double wrap_to_pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x > std::numbers::pi) x -= kTwoPi;
  if (x < -std::numbers::pi) x += kTwoPi;
  return x;
}

struct PairSum {
  double sum;
  Index k;
  Index m;
};

void scan_exhaustive(std::span<const double> phases, const CommensurabilityPolicy& policy,
                     CommensurabilityReport& report) {
  const auto d = static_cast<Index>(phases.size());
  std::vector<PairSum> pairs;
  pairs.reserve(static_cast<std::size_t>(d * (d + 1) / 2));
  for (Index k = 0; k < d; ++k) {
    for (Index m = k; m < d; ++m) {
      double s = phases[static_cast<std::size_t>(k)] + phases[static_cast<std::size_t>(m)];
      s = std::fmod(s, kTwoPi);
      if (s < 0.0) s += kTwoPi;
      pairs.push_back({s, k, m});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairSum& x, const PairSum& y) {
    return x.sum < y.sum || (x.sum == y.sum && (x.k < y.k || (x.k == y.k && x.m < y.m)));
  });

  // Two distinct unordered pairs {k,m} != {l,n} with equal sums give the
  // nontrivial resonance phi_k - phi_l + phi_m - phi_n = 0.
  const auto record = [&](const PairSum& p, const PairSum& q, double mismatch) {
    ++report.violation_count;
    if (report.violations.size() < policy.max_listed) {
      report.violations.push_back({p.k, q.k, p.m, q.m, mismatch});
    }
    if (report.violation_count >= kResonanceCountCap) {
      report.count_saturated = true;
      return false;
    }
    return true;
  };

  const std::size_t count = pairs.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count && pairs[j].sum - pairs[i].sum < policy.tol; ++j) {
      if (!record(pairs[i], pairs[j], pairs[i].sum - pairs[j].sum)) return;
    }
  }
  // Sums just below 2 pi against sums just above 0.
  for (std::size_t i = count; i-- > 0;) {
    if (!(pairs[0].sum + kTwoPi - pairs[i].sum < policy.tol)) break;
    for (std::size_t j = 0; j < i && pairs[j].sum + kTwoPi - pairs[i].sum < policy.tol; ++j) {
      if (!record(pairs[i], pairs[j], pairs[i].sum - pairs[j].sum - kTwoPi)) return;
    }
  }
}

void scan_sampled(std::span<const double> phases, const CommensurabilityPolicy& policy,
                  CommensurabilityReport& report) {
  const auto d = static_cast<std::uint64_t>(phases.size());
  RngStream rng(policy.seed, 0);
  for (std::uint64_t t = 0; t < policy.budget; ++t) {
    const std::uint64_t k = rng.next_u64() % d;
    const std::uint64_t l = rng.next_u64() % d;
    const std::uint64_t m = rng.next_u64() % d;
    const std::uint64_t n = rng.next_u64() % d;
    if ((k == l && m == n) || (k == n && l == m)) continue;
    const double mismatch = wrap_to_pi(phases[k] - phases[l] + phases[m] - phases[n]);
    if (std::abs(mismatch) < policy.tol) {
      ++report.violation_count;
      if (report.violations.size() < policy.max_listed) {
        report.violations.push_back({static_cast<Index>(k), static_cast<Index>(l),
                                     static_cast<Index>(m), static_cast<Index>(n),
                                     mismatch});
      }
    }
  }
}

}  // namespace

double purity(const StateVector& psi, const Bipartition& part) {
  if (psi.size() != part.dim()) {
    throw InvalidArgument("purity: state dimension " + std::to_string(psi.size()) +
                          " does not match bipartition dimension " +
                          std::to_string(part.dim()));
  }
  PurityKernel kernel(part);
  return kernel(psi.data());
}

double linear_entropy(const StateVector& psi, const Bipartition& part, Subsystem keep) {
  const ComplexMatrix rho = reduced_density(psi, part, keep);
  return 1.0 - (rho * rho).trace().real();
}

double max_linear_entropy(const Bipartition& part) {
  return 1.0 - 1.0 / static_cast<double>(std::min(part.d_a(), part.d_b()));
}

double cue_mean_entropy(const Bipartition& part) {
  const auto da = static_cast<double>(part.d_a());
  const auto db = static_cast<double>(part.d_b());
  return (da - 1.0) * (db - 1.0) / (da * db + 1.0);
}

std::vector<EntropySample> entropy_timeseries(const ComplexMatrix& u,
                                              const StateVector& psi0,
                                              const Bipartition& part,
                                              std::int64_t n_max,
                                              std::int64_t state_id) {
  require_operator_dim(u, part, "entropy_timeseries");
  require_unitary(u, "entropy_timeseries");
  require_positive(n_max, 1, "entropy_timeseries: n_max");
  if (psi0.size() != part.dim()) {
    throw InvalidArgument("entropy_timeseries: initial state has the wrong dimension");
  }
  ComplexMatrix block = ComplexMatrix::Zero(part.dim(), kBlockWidth);
  block.col(0) = psi0;
  std::vector<EntropySample> out;
  out.reserve(static_cast<std::size_t>(n_max));
  evolve_block(u, std::move(block), 1, part, 1, n_max,
               [&](Index, std::int64_t n, double s) {
                 out.push_back({s, n, state_id, 0});
               });
  return out;
}

MonteCarloEstimate entangling_power_mc(const ComplexMatrix& u, const Bipartition& part,
                                       std::int64_t n_samples, std::uint64_t seed) {
  require_operator_dim(u, part, "entangling_power_mc");
  require_unitary(u, "entangling_power_mc");
  require_positive(n_samples, 2, "entangling_power_mc: n_samples");
  std::vector<double> values(static_cast<std::size_t>(n_samples));
  sweep_product_states(u, part, 1, 1, n_samples, seed,
                       [&](std::int64_t s, std::int64_t, double v) {
                         values[static_cast<std::size_t>(s)] = v;
                       });
  return summarize(values);
}

std::vector<EntropySample> empirical_asymptotic_distribution(
    const ComplexMatrix& u, const Bipartition& part, std::int64_t n_min,
    std::int64_t n_max, std::int64_t n_states, std::uint64_t seed) {
  require_operator_dim(u, part, "empirical_asymptotic_distribution");
  require_unitary(u, "empirical_asymptotic_distribution");
  require_positive(n_min, 1, "empirical_asymptotic_distribution: n_min");
  require_positive(n_max, n_min, "empirical_asymptotic_distribution: n_max");
  require_positive(n_states, 1, "empirical_asymptotic_distribution: n_states");
  const std::int64_t window = n_max - n_min + 1;
  std::vector<EntropySample> out(static_cast<std::size_t>(window * n_states));
  sweep_product_states(u, part, n_min, n_max, n_states, seed,
                       [&](std::int64_t s, std::int64_t n, double v) {
                         out[static_cast<std::size_t>(s * window + (n - n_min))] = {v, n, s, 0};
                       });
  return out;
}

MonteCarloEstimate time_state_average(const ComplexMatrix& u, const Bipartition& part,
                                      std::int64_t n_min, std::int64_t n_max,
                                      std::int64_t n_states, std::uint64_t seed) {
  require_operator_dim(u, part, "time_state_average");
  require_unitary(u, "time_state_average");
  require_positive(n_min, 1, "time_state_average: n_min");
  require_positive(n_max, n_min, "time_state_average: n_max");
  require_positive(n_states, 2, "time_state_average: n_states");
  const std::int64_t window = n_max - n_min + 1;
  // Per-state sums are accumulated in time order, then reduced in state order.
  std::vector<double> per_state(static_cast<std::size_t>(n_states), 0.0);
  sweep_product_states(u, part, n_min, n_max, n_states, seed,
                       [&](std::int64_t s, std::int64_t, double v) {
                         per_state[static_cast<std::size_t>(s)] += v;
                       });
  for (double& v : per_state) v /= static_cast<double>(window);
  MonteCarloEstimate est = summarize(per_state);
  est.n_samples = window * n_states;
  return est;
}

std::vector<EntropySample> ensemble_entropies(EnsembleKind kind, const Bipartition& part,
                                              std::int64_t n_maps, std::int64_t n_states,
                                              std::uint64_t seed) {
  require_positive(n_maps, 1, "ensemble_entropies: n_maps");
  require_positive(n_states, 1, "ensemble_entropies: n_states");
  std::vector<EntropySample> out;
  out.reserve(static_cast<std::size_t>(n_maps * n_states));
  PurityKernel purity_of(part);
  ComplexMatrix states(part.dim(), n_states);
  ComplexMatrix evolved(part.dim(), n_states);
  for (std::int64_t i = 0; i < n_maps; ++i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const ComplexMatrix u = sample_ensemble(kind, part.dim(), rng);
    for (Index s = 0; s < n_states; ++s) states.col(s) = product_state(part, rng);
    evolved.noalias() = u * states;
    for (Index s = 0; s < n_states; ++s) {
      out.push_back({1.0 - purity_of(evolved.col(s).data()), 1, s, i});
    }
  }
  return out;
}

std::vector<double> haar_state_entropies(const Bipartition& part, std::int64_t n,
                                         std::uint64_t seed) {
  require_positive(n, 1, "haar_state_entropies: n");
  PurityKernel purity_of(part);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const StateVector psi = haar_state(part.dim(), rng);
    out[static_cast<std::size_t>(i)] = 1.0 - purity_of(psi.data());
  }
  return out;
}

CommensurabilityReport commensurability_check(std::span<const double> phases,
                                              const CommensurabilityPolicy& policy) {
  CommensurabilityReport report;
  report.tol = policy.tol;
  report.dim = static_cast<Index>(phases.size());
  const double d = static_cast<double>(phases.size());
  const double total = d * d * d * d;
  if (phases.empty()) return report;
  if (report.dim <= policy.exhaustive_max_dim) {
    report.exhaustive = true;
    report.quadruples_covered = total;
    report.coverage = 1.0;
    const double pairs = d * (d + 1.0) / 2.0;
    report.expected_accidental = pairs * (pairs - 1.0) / 2.0 * policy.tol / std::numbers::pi;
    scan_exhaustive(phases, policy, report);
  } else {
    report.exhaustive = false;
    report.quadruples_covered = static_cast<double>(policy.budget);
    report.coverage = std::min(1.0, static_cast<double>(policy.budget) / total);
    report.expected_accidental =
        static_cast<double>(policy.budget) * policy.tol / std::numbers::pi;
    scan_sampled(phases, policy, report);
  }
  return report;
}

ReducedEigenData reduce_eigenvectors(const EigenSystem& eig, const Bipartition& part) {
  if (eig.dim() != part.dim()) {
    throw InvalidArgument("reduce_eigenvectors: eigensystem dimension " +
                          std::to_string(eig.dim()) + " does not match bipartition " +
                          std::to_string(part.dim()));
  }
  const Index d = eig.dim();
  const Index da = part.d_a();
  const Index db = part.d_b();
  ReducedEigenData data;
  data.rho_a.reserve(static_cast<std::size_t>(d));
  data.rho_b.reserve(static_cast<std::size_t>(d));
  // Row i holds rho^i flattened; tr(rho^i rho^j) = sum rho^i_ab conj(rho^j_ab)
  // for Hermitian rho^j.
  ComplexMatrix flat_a(d, da * da);
  ComplexMatrix flat_b(d, db * db);
  for (Index i = 0; i < d; ++i) {
    const StateVector e = eig.vectors.col(i);
    data.rho_a.push_back(reduced_density(e, part, Subsystem::A));
    data.rho_b.push_back(reduced_density(e, part, Subsystem::B));
    flat_a.row(i) = Eigen::Map<const Eigen::RowVectorXcd>(data.rho_a.back().data(), da * da);
    flat_b.row(i) = Eigen::Map<const Eigen::RowVectorXcd>(data.rho_b.back().data(), db * db);
  }
  data.overlap_a = (flat_a * flat_a.adjoint()).real();
  data.overlap_b = (flat_b * flat_b.adjoint()).real();
  return data;
}

AsymptoticEntanglement::AsymptoticEntanglement(const EigenSystem& eig,
                                               const Bipartition& part,
                                               const CommensurabilityPolicy& policy)
    : part_(part),
      vectors_(eig.vectors),
      reduced_(reduce_eigenvectors(eig, part)),
      report_(commensurability_check(eig.phases, policy)) {}

double AsymptoticEntanglement::entropy(const StateVector& psi) const {
  if (psi.size() != part_.dim()) {
    throw InvalidArgument("asymptotic_entropy: state has the wrong dimension");
  }
  const Eigen::VectorXd p = (vectors_.adjoint() * psi).cwiseAbs2();
  const Eigen::VectorXd purities = reduced_.overlap_a.diagonal();
  // 1 - sum_i p_i^2 P_i - sum_{i != j} p_i p_j X_ij with X = overlap_a +
  // overlap_b and X_ii = 2 P_i.
  const double quadratic =
      p.dot(reduced_.overlap_a * p) + p.dot(reduced_.overlap_b * p);
  const double diagonal = p.cwiseAbs2().dot(purities);
  return 1.0 - quadratic + diagonal;
}

double AsymptoticEntanglement::entangling_power() const {
  const auto d = static_cast<double>(part_.dim());
  const auto dp = static_cast<double>(part_.dim_prime());
  const Eigen::MatrixXd x = reduced_.overlap_a + reduced_.overlap_b;
  const Eigen::VectorXd purities = reduced_.overlap_a.diagonal();
  const double diagonal_sq = purities.squaredNorm();
  const double off_diagonal_sq = x.squaredNorm() - x.diagonal().squaredNorm();
  return (d + 1.0) / dp - 2.0 * diagonal_sq / (d * dp) - off_diagonal_sq / (d * dp);
}

FormulaValue asymptotic_entropy(const EigenSystem& eig, const StateVector& psi,
                                const Bipartition& part,
                                const CommensurabilityPolicy& policy) {
  const AsymptoticEntanglement ae(eig, part, policy);
  return {ae.entropy(psi), !ae.assumptions_hold()};
}

FormulaValue asymptotic_entangling_power(const EigenSystem& eig, const Bipartition& part,
                                         const CommensurabilityPolicy& policy) {
  const AsymptoticEntanglement ae(eig, part, policy);
  return {ae.entangling_power(), !ae.assumptions_hold()};
}

}  // namespace bakerlab
