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

#include "photonsynth/random.hpp"

#include "photonsynth/error.hpp"

#include <cmath>

namespace photonsynth::random {

ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

ComplexMatrix unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

ComplexMatrix symmetric(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = complex_gaussian(n, n, rng);
  return g + g.transpose();
}

namespace {
RealVector positive_weights(Eigen::Index modes, int rank, Rng& rng) {
  if (rank < 1 || rank > modes) {
    throw Error(ErrorCode::InvalidArgument, "rank must lie in [1, modes]");
  }
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  RealVector d = RealVector::Zero(modes);
  for (int i = 0; i < rank; ++i) d(i) = weight(rng);
  return d;
}
}  // namespace

TwoPhotonState state_of_rank(Eigen::Index modes, int rank, Rng& rng) {
  const RealVector d = positive_weights(modes, rank, rng);
  const ComplexMatrix w = unitary(modes, rng);
  return normalize(w.transpose() * d.cast<Complex>().asDiagonal() * w);
}

TwoPhotonState diagonal_state_of_rank(Eigen::Index modes, int rank, Rng& rng) {
  const RealVector d = positive_weights(modes, rank, rng);
  return normalize(d.cast<Complex>().asDiagonal().toDenseMatrix());
}

QuditTarget qudit_target(Eigen::Index d1, Eigen::Index d2, int rank, Rng& rng) {
  if (rank < 1 || rank > std::min(d1, d2)) {
    throw Error(ErrorCode::InvalidArgument, "target rank must lie in [1, min(d1, d2)]");
  }
  const ComplexMatrix c = complex_gaussian(d1, rank, rng) * complex_gaussian(rank, d2, rng);
  return QuditTarget(c / c.norm());
}

int uniform_int(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace photonsynth::random
