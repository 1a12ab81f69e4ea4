/*
 * Copyright 2026 The photonsynth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "photonsynth/linalg.hpp"

#include "photonsynth/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace photonsynth {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PhotonNumberMismatch: return "PhotonNumberMismatch";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::SignalMismatch: return "SignalMismatch";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::InfeasibleRank: return "InfeasibleRank";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace linalg {

bool is_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!is_finite(m)) {
    throw Error(ErrorCode::NonFinite, std::string(what) + " has non-finite entries");
  }
}

double unitarity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const auto n = m.rows();
  return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return unitarity_error(m) < tol;
}

double symmetry_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.transpose()).norm();
}

bool is_symmetric(const ComplexMatrix& m, double tol) {
  return symmetry_error(m) < tol * std::max(1.0, m.norm());
}

SvdResult svd(const ComplexMatrix& m) {
  if (m.size() == 0) {
    throw Error(ErrorCode::InvalidArgument, "svd of an empty matrix");
  }
  require_finite(m, "svd input");
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult result{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  if (!result.u.allFinite() || !result.v.allFinite() || !result.singular_values.allFinite()) {
    throw Error(ErrorCode::ConvergenceFailure, "svd produced non-finite factors");
  }
  const auto k = result.singular_values.size();
  const ComplexMatrix rebuilt = result.u.leftCols(k) *
                                result.singular_values.cast<Complex>().asDiagonal() *
                                result.v.leftCols(k).adjoint();
  if ((rebuilt - m).norm() > 1e-8 * std::max(1.0, m.norm())) {
    throw Error(ErrorCode::ConvergenceFailure, "svd reconstruction failed");
  }
  return result;
}

RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values input");
  if (m.size() == 0) return RealVector{};
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

// Complex symmetric S = A + iB admits the real symmetric embedding
//   H = [[A, -B], [-B, -A]]
// whose spectrum is {+sigma_k, -sigma_k}. An eigenvector [x; y] for +sigma
// yields v = x + iy with S v = sigma conj(v), which is the Takagi relation
// column by column. Vectors for distinct positive eigenvalues map to
// orthonormal complex vectors; the null space needs an explicit complex
// orthogonalization because [x; y] and [-y; x] map to parallel vectors.
TakagiFactorization takagi(const ComplexMatrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "takagi requires a nonempty square matrix");
  }
  require_finite(s, "takagi input");
  if (!is_symmetric(s, tol)) {
    throw Error(ErrorCode::NotSymmetric,
                "takagi input is not complex symmetric (|S - S^T| = " +
                    std::to_string(symmetry_error(s)) + ")");
  }
  const Eigen::Index m = s.rows();
  const ComplexMatrix sym = (s + s.transpose()) / 2.0;
  const Eigen::MatrixXd a = sym.real();
  const Eigen::MatrixXd b = sym.imag();

  Eigen::MatrixXd h(2 * m, 2 * m);
  h << a, -b, -b, -a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "takagi eigensolver did not converge");
  }
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const Eigen::MatrixXd& vecs = eig.eigenvectors();

  const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1e-300);
  const double cutoff = 1e-12 * scale;

  TakagiFactorization out{ComplexMatrix::Zero(m, m), RealVector::Zero(m)};
  auto as_complex = [&](Eigen::Index col) {
    ComplexVector v(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      v(i) = Complex(vecs(i, col), vecs(m + i, col));
    }
    return v;
  };

  // Eigenvalues come out ascending; walk from the top for descending order.
  Eigen::Index filled = 0;
  for (Eigen::Index col = 2 * m - 1; col >= 0 && filled < m; --col) {
    if (lambda(col) <= cutoff) break;
    out.v.col(filled) = as_complex(col);
    out.diagonal(filled) = lambda(col);
    ++filled;
  }

  if (filled < m) {
    std::vector<ComplexVector> candidates;
    for (Eigen::Index col = 0; col < 2 * m; ++col) {
      if (std::abs(lambda(col)) <= cutoff) candidates.push_back(as_complex(col));
    }
    while (filled < m) {
      double best_norm = 0.0;
      ComplexVector best;
      for (auto& c : candidates) {
        ComplexVector r = c;
        for (Eigen::Index k = 0; k < filled; ++k) {
          r -= out.v.col(k).dot(r) * out.v.col(k);
        }
        const double n = r.norm();
        if (n > best_norm) {
          best_norm = n;
          best = std::move(r);
        }
      }
      if (best_norm < 1e-6) {
        throw Error(ErrorCode::ConvergenceFailure, "takagi null space is rank deficient");
      }
      // One reorthogonalization pass keeps V unitary to machine precision.
      for (Eigen::Index k = 0; k < filled; ++k) {
        best -= out.v.col(k).dot(best) * out.v.col(k);
      }
      out.v.col(filled) = best.normalized();
      out.diagonal(filled) = 0.0;
      ++filled;
    }
  }

  if (!out.v.allFinite() || unitarity_error(out.v) > 1e-8) {
    throw Error(ErrorCode::ConvergenceFailure, "takagi produced a non-unitary V");
  }
  return out;
}

UnitaryExtension unitary_extension(const ComplexMatrix& a) {
  if (a.size() == 0) {
    throw Error(ErrorCode::InvalidArgument, "unitary_extension of an empty matrix");
  }
  require_finite(a, "unitary_extension input");
  if (a.rows() > a.cols()) {
    UnitaryExtension transposed = unitary_extension(a.transpose());
    transposed.u.transposeInPlace();
    return transposed;
  }

  const Eigen::Index m1 = a.rows();
  const Eigen::Index m2 = a.cols();
  const Eigen::Index n = m1 + m2;

  const RealVector sv = singular_values(a);
  const double sigma1 = sv(0);
  if (!(sigma1 > 0.0)) {
    throw Error(ErrorCode::ZeroMatrix, "unitary_extension of the zero matrix");
  }
  const SvdResult f = svd(a / sigma1);

  RealVector d = f.singular_values.cwiseMin(1.0).cwiseMax(0.0);
  const RealVector c = (RealVector::Ones(m1) - d.cwiseProduct(d)).cwiseMax(0.0).cwiseSqrt();

  // Block layout (m1, m2 - m1, m1):
  //   [ D  0  C ]
  //   [ 0  I  0 ]
  //   [ C  0 -D ]
  ComplexMatrix core = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < m1; ++i) {
    core(i, i) = d(i);
    core(i, m2 + i) = c(i);
    core(m2 + i, i) = c(i);
    core(m2 + i, m2 + i) = -d(i);
  }
  for (Eigen::Index i = m1; i < m2; ++i) core(i, i) = 1.0;

  const ComplexMatrix left = direct_sum(f.u, f.v);
  const ComplexMatrix right = direct_sum(f.v.adjoint(), f.u.adjoint());

  UnitaryExtension out;
  out.u = left * core * right;
  out.sigma1 = sigma1;
  return out;
}

int numerical_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  const RealVector sv = singular_values(m);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = tol * sv(0);
  return static_cast<int>((sv.array() > cutoff).count());
}

ComplexMatrix zero_pad(const ComplexMatrix& m, Eigen::Index rows, Eigen::Index cols) {
  if (rows < m.rows() || cols < m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "zero_pad target is smaller than the source");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace linalg
}  // namespace photonsynth
