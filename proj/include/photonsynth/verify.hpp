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

namespace photonsynth::verify {

struct ExtractionReport {
  /// Normalized extracted state (C for post-selection, S for heralding).
  ComplexMatrix extracted;
  /// Probability that the post-selection / herald condition fires.
  double probability = 0.0;
  /// Set when a target was supplied.
  std::optional<double> fidelity_vs_target;
  /// Unit phase c minimizing |target - c * extracted|.
  std::optional<Complex> global_phase;
};

/// |<a, b>_F| / (|a|_F |b|_F); 0 when either side vanishes.
double fidelity(const ComplexMatrix& a, const ComplexMatrix& b);

struct PhaseComparison {
  bool equal = false;
  Complex phase{1.0, 0.0};
  double distance = 0.0;
};

/// Looks for a unit c with |s1 - c s2|_F < tol.
PhaseComparison states_equal_up_to_phase(const ComplexMatrix& s1, const ComplexMatrix& s2,
                                         double tol);

/// Evolves the zero-padded input through U (S -> U^T S U) and reads off the
/// computational block, i.e. the coefficients of a_i^dagger a_{d1+j}^dagger.
/// The returned matrix is unnormalized.
ComplexMatrix postselected_block(const ComplexMatrix& u, const TwoPhotonState& s_in,
                                 Eigen::Index d1, Eigen::Index d2);

/// Same block computed output by output from Fock transition amplitudes,
/// expanding the input state into its Fock components.
ComplexMatrix postselected_block_by_permanents(const ComplexMatrix& u,
                                               const TwoPhotonState& s_in, Eigen::Index d1,
                                               Eigen::Index d2);

ExtractionReport extract_postselected(const ComplexMatrix& u, const TwoPhotonState& s_in,
                                      Eigen::Index d1, Eigen::Index d2,
                                      const ComplexMatrix* target = nullptr);

/// Probability that one photon ends in each qudit register.
double success_probability_postselect(const ComplexMatrix& u, const TwoPhotonState& s_in,
                                      Eigen::Index d1, Eigen::Index d2);

/// Projects U |1..1 0..0> (n photons in the first n modes) onto the herald
/// signal on modes m..m+h-1 and vacuum on the remaining modes, returning
/// the unnormalized payload matrix sqrt(p_s) * S.
ComplexMatrix heralded_state(const ComplexMatrix& u, int photons, const HeraldPattern& pattern,
                             Eigen::Index payload_modes);

ExtractionReport extract_heralded(const ComplexMatrix& u, int photons,
                                  const HeraldPattern& pattern, Eigen::Index payload_modes,
                                  const ComplexMatrix* target = nullptr);

}  // namespace photonsynth::verify
