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

#include "photonsynth/synthesis.hpp"
#include "photonsynth/two_photon.hpp"

namespace photonsynth::postselect {

/// A two-qudit target C is reachable from s_in by post-selection iff
/// rank(C) <= rank(S_in), i.e. rank(S_out) <= 2 rank(S_in).
bool feasible(const TwoPhotonState& s_in, const QuditTarget& target,
              double tol = tolerance::kRank);

/// A state on d1 + d2 modes whose qudit block is proportional to C and whose
/// rank equals rank(C):
///   (N/2) [[V1 D V1^T, C], [C^T, conj(V2) D V2^dagger]]
/// for the SVD C = V1 D V2^dagger.
TwoPhotonState build_sps(const QuditTarget& target);

/// Entrywise Lambda with d_ps = Lambda d_in Lambda. Both diagonals sorted
/// descending and of equal length; entries at or below `tol` are zero.
RealVector rescaling_lambda(const RealVector& d_in, const RealVector& d_ps, double tol);

struct Construction {
  SynthesisResult result;
  /// T with T^T S_in T = S_ps, before the unitary embedding.
  ComplexMatrix transfer;
  TwoPhotonState sps;
};

/// Builds U with the qudit block of U^T [[S_in, 0], [0, 0]] U equal to
/// (alpha / 2) C. The result is checked against the oracle before it is
/// returned; a mismatch throws VerificationFailure.
Construction construct(const TwoPhotonState& s_in, const QuditTarget& target);

SynthesisResult synthesize(const TwoPhotonState& s_in, const QuditTarget& target);

}  // namespace photonsynth::postselect
