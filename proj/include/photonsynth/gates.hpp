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

#include <cstdint>

namespace photonsynth::gates {

/// Parameters of the post-selected n-qubit controlled-phase gate
/// Id + (e^{i phi} - 1) |1..1><1..1|.
struct CnzSpec {
  int n = 2;
  double phi = 0.0;
  /// The n-th root of e^{i phi} - 1 used in the cyclic block.
  Complex alpha{};
  double sigma_max = 1.0;
  /// sigma_max^{-2n}
  double success_probability = 1.0;
};

/// Principal root (2 sin(phi/2))^{1/n} e^{i (phi + pi) / (2n)} of
/// alpha^n = e^{i phi} - 1.
Complex principal_root(int n, double phi);

/// I_n + alpha J_n with J_n the cycle i -> i + 1 (mod n).
ComplexMatrix cyclic_block(int n, Complex alpha);

/// Largest singular value of diag(I_n + alpha J_n, I_n).
double sigma_max(int n, Complex alpha);

/// Closed form: (max_k |1 + alpha w^k|)^{-2n} with w = e^{2 pi i / n} and the
/// identity block bounding sigma_max below by one.
double cnz_success_probability(int n, double phi);

struct CnzConstruction {
  SynthesisResult result;
  CnzSpec spec;
};

/// Dual-rail layout: mode i carries qubit i's |1>, mode n + i its |0>,
/// modes 2n.. are auxiliary vacuum modes.
CnzConstruction build_cnz(int n, double phi);
CnzConstruction build_cnz(int n, double phi, Complex alpha);

/// Occupation vector of the logical basis state whose bit i is
/// (bits >> i) & 1, padded to `modes` modes.
FockState logical_state(int n, std::uint32_t bits, int modes);

/// Checks every logical input against every logical output through the Fock
/// oracle: sqrt(p_s) on the diagonal (times e^{i phi} for |1..1>) and zero
/// elsewhere, each within tol.
bool verify_cnz(const ComplexMatrix& u, int n, double phi, double success_probability,
                double tol);
bool verify_cnz(const SynthesisResult& result, int n, double phi, double tol);

}  // namespace photonsynth::gates
