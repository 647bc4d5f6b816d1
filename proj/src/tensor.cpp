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

#include "bakerlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

namespace bakerlab {

namespace {

// Eigenvectors whose phases are closer than this are re-orthonormalized
// together after the Schur step.
constexpr double kClusterGap = 1e-8;

std::string dims(const ComplexMatrix& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": expected a non-empty square matrix, got " +
                          dims(a));
  }
}

// Modified Gram-Schmidt on columns [first, last) of v.
void orthonormalize_columns(ComplexMatrix& v, Index first, Index last) {
  for (Index k = first; k < last; ++k) {
    for (Index j = first; j < k; ++j) {
      const Complex overlap = v.col(j).dot(v.col(k));
      v.col(k) -= overlap * v.col(j);
    }
    const double norm = v.col(k).norm();
    if (norm < 1e-300) {
      throw NumericalError("eigensystem: eigenvector cluster is rank deficient");
    }
    v.col(k) /= norm;
  }
}

// A cluster straddling 0 == 2pi sits at both ends of the sorted range; gather
// it, orthonormalize, scatter back.
void polish_wraparound_cluster(EigenSystem& eig) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const Index d = eig.dim();
  const auto phase = [&](Index k) { return eig.phases[static_cast<std::size_t>(k)]; };
  if (d < 2 || !(phase(0) + two_pi - phase(d - 1) < kClusterGap)) return;
  Index head = 1;
  while (head < d && phase(head) - phase(head - 1) < kClusterGap) ++head;
  if (head == d) return;  // whole spectrum is one cluster, already polished
  Index tail = d - 1;
  while (tail > head && phase(tail) - phase(tail - 1) < kClusterGap) --tail;
  const Index n_tail = d - tail;
  ComplexMatrix cluster(d, head + n_tail);
  cluster << eig.vectors.middleCols(tail, n_tail), eig.vectors.leftCols(head);
  orthonormalize_columns(cluster, 0, cluster.cols());
  eig.vectors.middleCols(tail, n_tail) = cluster.leftCols(n_tail);
  eig.vectors.leftCols(head) = cluster.rightCols(head);
}

}  // namespace

Bipartition::Bipartition(Index d_a, Index d_b) : d_a_(d_a), d_b_(d_b) {
  if (d_a < 2 || d_b < 2) {
    throw InvalidArgument("bipartition factors must both be >= 2, got " +
                          std::to_string(d_a) + "x" + std::to_string(d_b));
  }
}

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matmul: dimension mismatch " + dims(a) + " * " + dims(b));
  }
  return a * b;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Bipartition& part,
                            Subsystem keep) {
  const Index da = part.d_a();
  const Index db = part.d_b();
  if (rho.rows() != part.dim() || rho.cols() != part.dim()) {
    throw InvalidArgument("partial_trace: operator is " + dims(rho) +
                          " but the bipartition has dimension " +
                          std::to_string(part.dim()));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Index a = 0; a < da; ++a) {
      for (Index ap = 0; ap < da; ++ap) {
        Complex acc = 0.0;
        for (Index b = 0; b < db; ++b) {
          acc += rho(a * db + b, ap * db + b);
        }
        out(a, ap) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Index b = 0; b < db; ++b) {
    for (Index bp = 0; bp < db; ++bp) {
      Complex acc = 0.0;
      for (Index a = 0; a < da; ++a) {
        acc += rho(a * db + b, a * db + bp);
      }
      out(b, bp) = acc;
    }
  }
  return out;
}

ComplexMatrix reduced_density(const StateVector& psi, const Bipartition& part,
                              Subsystem keep) {
  if (psi.size() != part.dim()) {
    throw InvalidArgument("reduced_density: state has dimension " +
                          std::to_string(psi.size()) + ", bipartition " +
                          std::to_string(part.dim()));
  }
  // Column-major view: m(b, a) = psi[a * d_B + b].
  const Eigen::Map<const ComplexMatrix> m(psi.data(), part.d_b(), part.d_a());
  if (keep == Subsystem::A) {
    return (m.adjoint() * m).transpose();
  }
  return m * m.adjoint();
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double unitarity_residual(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return max_abs(u * u.adjoint() - identity(u.rows()));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return u.rows() == u.cols() && u.rows() > 0 && unitarity_residual(u) < tol;
}

void require_unitary(const ComplexMatrix& u, const char* what) {
  require_square(u, what);
  const double r = unitarity_residual(u);
  if (!(r < kUnitaryTol)) {
    std::ostringstream os;
    os << what << ": matrix is not unitary (max|UU^dagger - I| = " << r << ")";
    throw NumericalError(os.str());
  }
}

ComplexMatrix swap_operator(Index d_sub) {
  const Index d = d_sub * d_sub;
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (Index a = 0; a < d_sub; ++a) {
    for (Index b = 0; b < d_sub; ++b) {
      s(b * d_sub + a, a * d_sub + b) = 1.0;
    }
  }
  return s;
}

StateVector swap_subsystems(const StateVector& psi, const Bipartition& part) {
  if (psi.size() != part.dim()) {
    throw InvalidArgument("swap_subsystems: dimension mismatch");
  }
  StateVector out(psi.size());
  for (Index a = 0; a < part.d_a(); ++a) {
    for (Index b = 0; b < part.d_b(); ++b) {
      out(b * part.d_a() + a) = psi(a * part.d_b() + b);
    }
  }
  return out;
}

EigenSystem eigensystem(const ComplexMatrix& u) {
  require_unitary(u, "eigensystem");
  const Index d = u.rows();

  // U is normal, so its Schur form is diagonal up to round-off and the Schur
  // vectors are an orthonormal eigenbasis.
  Eigen::ComplexSchur<ComplexMatrix> schur(u, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw NumericalError("eigensystem: Schur iteration did not converge");
  }
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& q = schur.matrixU();

  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> raw(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    double phi = std::arg(t(k, k));
    if (phi < 0.0) phi += two_pi;
    if (phi >= two_pi) phi = 0.0;
    raw[static_cast<std::size_t>(k)] = phi;
  }
  std::vector<Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return raw[static_cast<std::size_t>(x)] < raw[static_cast<std::size_t>(y)];
  });

  EigenSystem eig;
  eig.phases.resize(static_cast<std::size_t>(d));
  eig.vectors.resize(d, d);
  for (Index k = 0; k < d; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    eig.phases[static_cast<std::size_t>(k)] = raw[static_cast<std::size_t>(src)];
    eig.vectors.col(k) = q.col(src);
  }

  // Polish clusters of nearly equal phases.
  Index start = 0;
  for (Index k = 1; k <= d; ++k) {
    if (k == d || eig.phases[static_cast<std::size_t>(k)] -
                          eig.phases[static_cast<std::size_t>(k - 1)] >=
                      kClusterGap) {
      if (k - start > 1) orthonormalize_columns(eig.vectors, start, k);
      start = k;
    }
  }
  polish_wraparound_cluster(eig);

  StateVector lambda(d);
  for (Index k = 0; k < d; ++k) {
    lambda(k) = std::polar(1.0, eig.phases[static_cast<std::size_t>(k)]);
  }
  const ComplexMatrix residual = u * eig.vectors - eig.vectors * lambda.asDiagonal();
  eig.max_residual = residual.colwise().norm().maxCoeff();
  ComplexMatrix gram = eig.vectors.adjoint() * eig.vectors;
  gram.diagonal().setZero();
  eig.max_overlap = max_abs(gram);

  const double bound = kEigenTol * std::sqrt(static_cast<double>(d));
  if (!(eig.max_residual < bound) || !(eig.max_overlap < bound)) {
    std::ostringstream os;
    os << "eigensystem: invariants violated (residual " << eig.max_residual
       << ", overlap " << eig.max_overlap << ")";
    throw NumericalError(os.str());
  }
  return eig;
}

double reconstruction_residual(const EigenSystem& eig, const ComplexMatrix& u) {
  StateVector lambda(eig.dim());
  for (Index k = 0; k < eig.dim(); ++k) {
    lambda(k) = std::polar(1.0, eig.phases[static_cast<std::size_t>(k)]);
  }
  return max_abs(eig.vectors * lambda.asDiagonal() * eig.vectors.adjoint() - u);
}

}  // namespace bakerlab
