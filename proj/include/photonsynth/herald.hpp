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

#include <optional>
#include <span>
#include <vector>

namespace photonsynth::herald {

/// One herald mode: the first n entries of its column in the interferometer
/// (the amplitudes with which each input photon reaches it), together with
/// the number of photons that mode must detect.
struct HeraldRow {
  ComplexVector row;
  int multiplicity = 1;
};

/// F(a, b) = Per(e_a, e_b, herald rows...), the matrix of the bilinear form
/// that maps two payload rows to their joint heralded amplitude.
ComplexMatrix bilinear_matrix(std::span<const HeraldRow> rows, int photons);

/// n single photons can herald S_out iff n >= rank(S_out) (and n >= 2, since
/// the output carries two photons).
bool feasible(const TwoPhotonState& s_out, int photons, double tol = tolerance::kRank);

/// No herald for n = 2; otherwise one herald mode detecting n - 2 photons
/// with row (1, ..., 1) / sqrt(n - 2). Its bilinear form has full rank n.
std::vector<HeraldRow> default_witness(int photons);

struct Options {
  /// Herald rows to try first; replaced by the default witness when their
  /// bilinear form is rank deficient.
  std::optional<std::vector<HeraldRow>> herald_rows;
};

struct Construction {
  SynthesisResult result;
  /// Rows l_0..l_{m-1} followed by the herald rows, before embedding.
  ComplexMatrix rows;
  /// Takagi diagonal of the target, descending.
  RealVector target_diagonal;
  HeraldPattern pattern;
  bool used_default_witness = true;
};

/// Builds U over [payload m | herald h | auxiliary n] modes such that the
/// herald-conditioned output of n photons in modes 0..n-1 is
/// sqrt(p_s) S_out. Verified against the oracle before returning.
Construction construct(const TwoPhotonState& s_out, int photons, const Options& options = {});

SynthesisResult synthesize(const TwoPhotonState& s_out, int photons, const Options& options = {});

/// max_{i,j} |Per(l_i, l_j, l_s) - sqrt(2 s_1! ... s_h!) D_ii delta_ij| over
/// payload rows of a construction.
double identity_residual(const Construction& construction, int photons);

}  // namespace photonsynth::herald
