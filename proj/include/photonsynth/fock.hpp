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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace photonsynth {

/// Largest matrix accepted by `permanent`. Factorials up to this size fit in
/// 64 bits, which keeps amplitude normalization exact.
inline constexpr int kMaxPhotons = 20;

/// Photon counts per mode.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occupations);
  FockState(std::initializer_list<int> occupations)
      : FockState(std::vector<int>(occupations)) {}

  std::size_t modes() const noexcept { return occupations_.size(); }
  int photons() const noexcept;
  int operator[](std::size_t mode) const { return occupations_[mode]; }
  const std::vector<int>& occupations() const noexcept { return occupations_; }

  /// Product of occupation factorials, exact.
  std::uint64_t factorial_product() const;

  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::vector<int> occupations_;
};

/// A linear-optical mode transformation. Row j of the matrix lists where a
/// photon entering mode j goes: a_j^dagger -> sum_i U(j, i) a_i^dagger. Under
/// this convention a two-photon state matrix S evolves to U^T S U.
class Interferometer {
 public:
  explicit Interferometer(ComplexMatrix u, double tol = tolerance::kUnitarity);

  const ComplexMatrix& matrix() const noexcept { return u_; }
  Eigen::Index modes() const noexcept { return u_.rows(); }

 private:
  ComplexMatrix u_;
};

namespace fock {

/// Gray-code Ryser permanent, O(2^n n).
Complex permanent(const ComplexMatrix& m);

std::uint64_t factorial(int n);

/// Transition amplitude <out| U |in> for Fock states with equal photon
/// number. The permanent runs over the n x n matrix whose rows are the input
/// modes repeated by `in` occupations and whose columns are the output modes
/// repeated by `out` occupations.
Complex amplitude(const ComplexMatrix& u, const FockState& out, const FockState& in);
Complex amplitude(const Interferometer& u, const FockState& out, const FockState& in);

/// The n x n submatrix with row j of `u` repeated in[j] times and column i
/// repeated out[i] times.
ComplexMatrix repeated_submatrix(const ComplexMatrix& u, const FockState& out,
                                 const FockState& in);

/// U^T S U, symmetrized.
ComplexMatrix evolve_two_photon(const Interferometer& u, const ComplexMatrix& s);
ComplexMatrix evolve_two_photon(const ComplexMatrix& u, const ComplexMatrix& s);

/// Every occupation vector with `photons` photons over `modes` modes, in
/// lexicographically descending order.
std::vector<FockState> basis(int modes, int photons);

}  // namespace fock
}  // namespace photonsynth
