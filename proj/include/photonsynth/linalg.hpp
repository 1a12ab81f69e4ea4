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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace photonsynth {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tolerance {
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kSymmetry = 1e-10;
inline constexpr double kReconstruction = 1e-9;
/// Relative cutoff used when counting nonzero singular values.
inline constexpr double kRank = 1e-10;
}  // namespace tolerance

namespace linalg {

/// M = U * diag(singular_values) * V^dagger with full (square) U and V.
/// singular_values has min(rows, cols) entries, sorted descending.
struct SvdResult {
  ComplexMatrix u;
  RealVector singular_values;
  ComplexMatrix v;
};

/// D = V^T S V for a complex symmetric S; V unitary, D real, nonnegative,
/// sorted descending.
struct TakagiFactorization {
  ComplexMatrix v;
  RealVector diagonal;

  ComplexMatrix d() const { return diagonal.cast<Complex>().asDiagonal(); }
};

/// U is N x N unitary and its top-left rows(A) x cols(A) block is A / sigma1.
struct UnitaryExtension {
  ComplexMatrix u;
  double sigma1 = 0.0;
  std::size_t size() const { return static_cast<std::size_t>(u.rows()); }
};

bool is_finite(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, const char* what);

/// Frobenius distance between M^dagger M and the identity.
double unitarity_error(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol = tolerance::kUnitarity);

double symmetry_error(const ComplexMatrix& m);
bool is_symmetric(const ComplexMatrix& m, double tol = tolerance::kSymmetry);

SvdResult svd(const ComplexMatrix& m);
RealVector singular_values(const ComplexMatrix& m);

TakagiFactorization takagi(const ComplexMatrix& s,
                           double tol = tolerance::kSymmetry);

UnitaryExtension unitary_extension(const ComplexMatrix& a);

/// Number of singular values strictly greater than tol * sigma_max.
int numerical_rank(const ComplexMatrix& m, double tol = tolerance::kRank);

/// Embeds `m` in the top-left corner of a zero matrix of the given size.
ComplexMatrix zero_pad(const ComplexMatrix& m, Eigen::Index rows,
                       Eigen::Index cols);

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace linalg
}  // namespace photonsynth
