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

#include "photonsynth/fock.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace photonsynth {

/// Photon counts expected on the herald modes, one entry per herald mode.
struct HeraldPattern {
  std::vector<int> signal;

  int modes() const noexcept { return static_cast<int>(signal.size()); }
  int photons() const noexcept;
  /// s_1! ... s_h!
  std::uint64_t factorial_product() const;
  void validate(int total_photons) const;

  friend bool operator==(const HeraldPattern&, const HeraldPattern&) = default;
};

enum class SynthesisKind { PostSelect, Herald, Cnz };

std::string_view to_string(SynthesisKind kind) noexcept;
SynthesisKind synthesis_kind_from_string(std::string_view name);

/// Output of every synthesizer. Modes are laid out as
/// [relevant | herald | auxiliary]; auxiliary modes start and end empty.
struct SynthesisResult {
  SynthesisKind kind = SynthesisKind::PostSelect;
  Interferometer unitary;
  int relevant_modes = 0;
  int aux_modes = 0;
  /// Scale applied by the unitary embedding (the reciprocal of the largest
  /// singular value of the embedded block), or the state scale alpha for
  /// post-selected preparation.
  double scale_alpha = 1.0;
  std::optional<HeraldPattern> herald;
  double success_probability = 0.0;

  int total_modes() const noexcept { return static_cast<int>(unitary.modes()); }
  int herald_modes() const noexcept { return herald ? herald->modes() : 0; }
};

}  // namespace photonsynth
