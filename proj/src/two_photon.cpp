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

#include "photonsynth/two_photon.hpp"

#include "photonsynth/error.hpp"

#include <cmath>
#include <string>

namespace photonsynth {

double state_norm_squared(const ComplexMatrix& s) {
  return 2.0 * s.squaredNorm();
}

TwoPhotonState::TwoPhotonState(const ComplexMatrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "two-photon state matrix must be square and nonempty");
  }
  linalg::require_finite(s, "two-photon state");
  if (!linalg::is_symmetric(s, tolerance::kSymmetry)) {
    throw Error(ErrorCode::NotSymmetric, "two-photon state matrix is not symmetric");
  }
  s_ = (s + s.transpose()) / 2.0;
  const double norm2 = state_norm_squared(s_);
  if (std::abs(norm2 - 1.0) > tol) {
    throw Error(ErrorCode::InvalidArgument,
                "two-photon state is not normalized (2 Tr(S^dagger S) = " +
                    std::to_string(norm2) + ")");
  }
}

TwoPhotonState TwoPhotonState::padded(Eigen::Index modes) const {
  if (modes == s_.rows()) return *this;
  return TwoPhotonState(linalg::zero_pad(s_, modes, modes));
}

QuditTarget::QuditTarget(ComplexMatrix c, double tol) : c_(std::move(c)) {
  if (c_.size() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "qudit target must have d1, d2 >= 1");
  }
  linalg::require_finite(c_, "qudit target");
  const double norm2 = c_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol) {
    throw Error(ErrorCode::InvalidArgument,
                "qudit target is not unit norm (sum |C_ij|^2 = " + std::to_string(norm2) + ")");
  }
}

int QuditTarget::rank(double tol) const {
  return linalg::numerical_rank(c_, tol);
}

TwoPhotonState from_qudit_target(const QuditTarget& target) {
  const Eigen::Index d1 = target.d1();
  const Eigen::Index d2 = target.d2();
  ComplexMatrix s = ComplexMatrix::Zero(d1 + d2, d1 + d2);
  s.topRightCorner(d1, d2) = target.matrix() / 2.0;
  s.bottomLeftCorner(d2, d1) = target.matrix().transpose() / 2.0;
  return TwoPhotonState(s);
}

ComplexMatrix qudit_block(const ComplexMatrix& s, Eigen::Index d1, Eigen::Index d2) {
  if (s.rows() < d1 + d2 || s.cols() < d1 + d2) {
    throw Error(ErrorCode::DimensionMismatch, "state has fewer than d1 + d2 modes");
  }
  return 2.0 * s.block(0, d1, d1, d2);
}

TwoPhotonState single_photons_state(Eigen::Index modes) {
  if (modes < 2) {
    throw Error(ErrorCode::InvalidArgument, "two single photons need at least two modes");
  }
  ComplexMatrix s = ComplexMatrix::Zero(modes, modes);
  s(0, 1) = 0.5;
  s(1, 0) = 0.5;
  return TwoPhotonState(s);
}

int state_rank(const TwoPhotonState& state, double tol) {
  return linalg::numerical_rank(state.matrix(), tol);
}

TwoPhotonState normalize(const ComplexMatrix& s) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "normalize requires a square matrix");
  }
  linalg::require_finite(s, "normalize input");
  if (!linalg::is_symmetric(s, tolerance::kSymmetry)) {
    throw Error(ErrorCode::NotSymmetric, "normalize input is not symmetric");
  }
  const double norm2 = state_norm_squared(s);
  if (!(norm2 > 0.0)) {
    throw Error(ErrorCode::ZeroState, "cannot normalize the zero state");
  }
  return TwoPhotonState(s / std::sqrt(norm2));
}

}  // namespace photonsynth
