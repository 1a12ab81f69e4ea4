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

#include "photonsynth/two_photon.hpp"

#include <random>

namespace photonsynth::random {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix unitary(Eigen::Index n, Rng& rng);

/// G + G^T for Gaussian G.
ComplexMatrix symmetric(Eigen::Index n, Rng& rng);

/// Normalized W^T diag(d) W with `rank` positive entries in d and Haar W.
TwoPhotonState state_of_rank(Eigen::Index modes, int rank, Rng& rng);

/// Normalized diagonal state with `rank` nonzero entries.
TwoPhotonState diagonal_state_of_rank(Eigen::Index modes, int rank, Rng& rng);

/// Unit-norm d1 x d2 matrix of the given rank.
QuditTarget qudit_target(Eigen::Index d1, Eigen::Index d2, int rank, Rng& rng);

int uniform_int(int lo, int hi, Rng& rng);

}  // namespace photonsynth::random
