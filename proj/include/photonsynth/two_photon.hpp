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

#include "photonsynth/linalg.hpp"

namespace photonsynth {

/// Two photons over m modes written as (a^dagger)^T S a^dagger |vac>, with S
/// complex symmetric and 2 Tr(S^dagger S) = 1. The coefficient of
/// a_i^dagger a_j^dagger |vac> is S_ij + S_ji.
class TwoPhotonState {
 public:
  /// Validates symmetry and normalization; the stored matrix is (S + S^T)/2.
  explicit TwoPhotonState(const ComplexMatrix& s, double tol = tolerance::kReconstruction);

  const ComplexMatrix& matrix() const noexcept { return s_; }
  Eigen::Index modes() const noexcept { return s_.rows(); }

  /// The same state on `modes` >= this->modes() modes, extra modes empty.
  TwoPhotonState padded(Eigen::Index modes) const;

 private:
  ComplexMatrix s_;
};

/// Two qudits in d-rail encoding: one photon over modes 0..d1-1, the other
/// over d1..d1+d2-1, with amplitude C(i, j) on |i>|j>.
class QuditTarget {
 public:
  explicit QuditTarget(ComplexMatrix c, double tol = tolerance::kReconstruction);

  const ComplexMatrix& matrix() const noexcept { return c_; }
  Eigen::Index d1() const noexcept { return c_.rows(); }
  Eigen::Index d2() const noexcept { return c_.cols(); }
  int rank(double tol = tolerance::kRank) const;

 private:
  ComplexMatrix c_;
};

/// 2 Tr(S^dagger S), the squared norm of the state S describes.
double state_norm_squared(const ComplexMatrix& s);

/// S = (1/2) [[0, C], [C^T, 0]].
TwoPhotonState from_qudit_target(const QuditTarget& target);

/// Reads C back from the off-diagonal block of a state on d1 + d2 (or more)
/// modes: C = 2 * S[0:d1, d1:d1+d2].
ComplexMatrix qudit_block(const ComplexMatrix& s, Eigen::Index d1, Eigen::Index d2);

/// a_0^dagger a_1^dagger |vac> on m >= 2 modes.
TwoPhotonState single_photons_state(Eigen::Index modes);

int state_rank(const TwoPhotonState& state, double tol = tolerance::kRank);

/// Rescales a nonzero symmetric S so that 2 Tr(S^dagger S) = 1.
TwoPhotonState normalize(const ComplexMatrix& s);

}  // namespace photonsynth
