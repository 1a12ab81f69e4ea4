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

#include "photonsynth/gates.hpp"

#include "photonsynth/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace photonsynth::gates {

namespace {
constexpr double kTrivialPhase = 1e-12;

void check_qubits(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "controlled-phase gate needs n >= 2");
  if (n > 10) throw Error(ErrorCode::TooLarge, "controlled-phase gate limited to n <= 10");
}
}  // namespace

Complex principal_root(int n, double phi) {
  check_qubits(n);
  // Only e^{i phi} matters; fold phi into [0, 2 pi] where sin(phi / 2) >= 0.
  double folded = std::fmod(phi, 2.0 * std::numbers::pi);
  if (folded < 0.0) folded += 2.0 * std::numbers::pi;
  // A whole turn up to rounding is the identity gate; sin(pi) ~ 1e-16 would
  // otherwise leave an n-th root near 1e-16^(1/n) that costs success rate.
  if (folded < kTrivialPhase || 2.0 * std::numbers::pi - folded < kTrivialPhase) return {};
  const double magnitude = std::pow(std::max(0.0, 2.0 * std::sin(folded / 2.0)), 1.0 / n);
  return std::polar(magnitude, (folded + std::numbers::pi) / (2.0 * n));
}

ComplexMatrix cyclic_block(int n, Complex alpha) {
  ComplexMatrix block = ComplexMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) block(i, (i + 1) % n) += alpha;
  return block;
}

double sigma_max(int n, Complex alpha) {
  check_qubits(n);
  const ComplexMatrix k = linalg::direct_sum(cyclic_block(n, alpha), ComplexMatrix::Identity(n, n));
  return linalg::singular_values(k)(0);
}

double cnz_success_probability(int n, double phi) {
  check_qubits(n);
  if (!std::isfinite(phi)) throw Error(ErrorCode::InvalidArgument, "phi must be finite");
  const Complex alpha = principal_root(n, phi);
  double largest = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    largest = std::max(largest, std::abs(1.0 + alpha * w));
  }
  return std::pow(largest, -2.0 * n);
}

CnzConstruction build_cnz(int n, double phi) {
  return build_cnz(n, phi, principal_root(n, phi));
}

CnzConstruction build_cnz(int n, double phi, Complex alpha) {
  check_qubits(n);
  if (!std::isfinite(phi)) throw Error(ErrorCode::InvalidArgument, "phi must be finite");
  const Complex target = std::polar(1.0, phi) - 1.0;
  if (std::abs(std::pow(alpha, n) - target) > 1e-9) {
    throw Error(ErrorCode::InvalidArgument, "alpha^n differs from e^{i phi} - 1");
  }

  const ComplexMatrix block =
      linalg::direct_sum(cyclic_block(n, alpha), ComplexMatrix::Identity(n, n));
  const linalg::UnitaryExtension ext = linalg::unitary_extension(block);

  CnzSpec spec;
  spec.n = n;
  spec.phi = phi;
  spec.alpha = alpha;
  spec.sigma_max = ext.sigma1;
  spec.success_probability = std::pow(ext.sigma1, -2.0 * n);

  SynthesisResult result{
      .kind = SynthesisKind::Cnz,
      .unitary = Interferometer(ext.u),
      .relevant_modes = 2 * n,
      .aux_modes = static_cast<int>(ext.u.rows()) - 2 * n,
      .scale_alpha = 1.0 / ext.sigma1,
      .herald = std::nullopt,
      .success_probability = spec.success_probability,
  };
  return CnzConstruction{std::move(result), spec};
}

FockState logical_state(int n, std::uint32_t bits, int modes) {
  if (modes < 2 * n) {
    throw Error(ErrorCode::DimensionMismatch, "dual-rail encoding needs 2n modes");
  }
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  for (int i = 0; i < n; ++i) {
    const bool one = (bits >> i) & 1U;
    occ[static_cast<std::size_t>(one ? i : n + i)] = 1;
  }
  return FockState(std::move(occ));
}

bool verify_cnz(const ComplexMatrix& u, int n, double phi, double success_probability,
                double tol) {
  check_qubits(n);
  if (u.rows() != u.cols() || u.rows() < 2 * n) return false;
  if (!linalg::is_finite(u) || linalg::unitarity_error(u) > tol) return false;

  const int modes = static_cast<int>(u.rows());
  const std::uint32_t count = std::uint32_t{1} << n;
  const std::uint32_t all_ones = count - 1;
  const double diag = std::sqrt(success_probability);
  for (std::uint32_t x = 0; x < count; ++x) {
    const FockState in = logical_state(n, x, modes);
    for (std::uint32_t y = 0; y < count; ++y) {
      const Complex amp = fock::amplitude(u, logical_state(n, y, modes), in);
      Complex expected{};
      if (x == y) expected = x == all_ones ? diag * std::polar(1.0, phi) : Complex(diag, 0.0);
      if (std::abs(amp - expected) > tol) return false;
    }
  }
  return true;
}

bool verify_cnz(const SynthesisResult& result, int n, double phi, double tol) {
  return verify_cnz(result.unitary.matrix(), n, phi, result.success_probability, tol);
}

}  // namespace photonsynth::gates
