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

#include "photonsynth/fock.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace photonsynth {
namespace {

using testing::error_code_of;
constexpr double kPi = std::numbers::pi;

TEST(CnzProbability, ControlledZIsOneNinth) {
  EXPECT_NEAR(gates::cnz_success_probability(2, kPi), 1.0 / 9.0, 1e-12);
  EXPECT_NEAR(gates::sigma_max(2, gates::principal_root(2, kPi)), std::sqrt(3.0), 1e-12);
}

TEST(CnzProbability, TrivialPhaseIsDeterministic) {
  EXPECT_NEAR(gates::cnz_success_probability(2, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(gates::cnz_success_probability(5, 0.0), 1.0, 1e-15);
}

TEST(CnzProbability, FrozenValues) {
  EXPECT_NEAR(gates::cnz_success_probability(3, kPi), 0.017559993780021075, 1e-12);
  EXPECT_NEAR(gates::cnz_success_probability(3, kPi / 2), 0.017559993780021075, 1e-12);
  EXPECT_NEAR(gates::sigma_max(3, gates::principal_root(3, kPi)), 1.9614591767006195, 1e-12);
  EXPECT_NEAR(gates::cnz_success_probability(4, kPi / 4), 0.006479513755124683, 1e-12);
}

TEST(CnzProbability, BoundedAndMatchesSigmaMax) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= 16; ++k) {
      const double phi = 2.0 * kPi * k / 16.0;
      const double p = gates::cnz_success_probability(n, phi);
      EXPECT_GT(p, 0.0);
      EXPECT_LE(p, 1.0 + 1e-15);
      // |1 + alpha w^k| <= 1 + |alpha| and |alpha|^n <= 2.
      EXPECT_GE(p, std::pow(1.0 + std::pow(2.0, 1.0 / n), -2.0 * n) - 1e-15);
      const double s = gates::sigma_max(n, gates::principal_root(n, phi));
      EXPECT_NEAR(p, std::pow(s, -2.0 * n), 1e-12);
    }
  }
}

TEST(PrincipalRoot, SolvesTheDefiningEquation) {
  for (int n = 2; n <= 8; ++n) {
    for (double phi : {0.1, kPi / 4, kPi / 2, kPi, 3 * kPi / 2, 2 * kPi - 0.1}) {
      const Complex alpha = gates::principal_root(n, phi);
      EXPECT_LT(std::abs(std::pow(alpha, n) - (std::polar(1.0, phi) - 1.0)), 1e-12);
    }
  }
  EXPECT_LT(std::abs(gates::principal_root(3, 2 * kPi)), 1e-12);
}

TEST(CyclicBlock, Structure) {
  const ComplexMatrix a = gates::cyclic_block(3, Complex(0.5, 0.0));
  EXPECT_NEAR(std::abs(a(0, 1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a(2, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a(1, 1) - 1.0), 0.0, 1e-15);
}

TEST(BuildCnz, ControlledZAmplitudes) {
  const auto gate = gates::build_cnz(2, kPi);
  const ComplexMatrix& u = gate.result.unitary.matrix();
  EXPECT_EQ(gate.result.total_modes(), 8);
  EXPECT_EQ(gate.result.relevant_modes, 4);
  EXPECT_EQ(gate.result.aux_modes, 4);
  const double want[4] = {1.0 / 3, 1.0 / 3, 1.0 / 3, -1.0 / 3};
  for (std::uint32_t in = 0; in < 4; ++in) {
    for (std::uint32_t out = 0; out < 4; ++out) {
      const Complex amp = fock::amplitude(u, gates::logical_state(2, out, 8),
                                          gates::logical_state(2, in, 8));
      EXPECT_LT(std::abs(amp - (in == out ? want[in] : 0.0)), 1e-12) << in << "->" << out;
    }
  }
  EXPECT_TRUE(gates::verify_cnz(gate.result, 2, kPi, 1e-10));
}

TEST(BuildCnz, GridVerifies) {
  for (int n = 2; n <= 4; ++n) {
    for (double phi : {kPi / 4, kPi / 2, kPi, 3 * kPi / 2}) {
      const auto gate = gates::build_cnz(n, phi);
      EXPECT_EQ(gate.result.aux_modes, 2 * n);
      EXPECT_NEAR(gate.result.success_probability, gates::cnz_success_probability(n, phi), 1e-12);
      EXPECT_TRUE(gates::verify_cnz(gate.result, n, phi, 1e-10)) << n << " " << phi;
    }
  }
}

TEST(BuildCnz, EveryRootWorks) {
  const double phi = kPi / 2;
  const Complex principal = gates::principal_root(3, phi);
  for (int k = 0; k < 3; ++k) {
    const Complex alpha = principal * std::polar(1.0, 2.0 * kPi * k / 3.0);
    const auto gate = gates::build_cnz(3, phi, alpha);
    EXPECT_NEAR(gate.spec.success_probability, gates::cnz_success_probability(3, phi), 1e-12);
    EXPECT_TRUE(gates::verify_cnz(gate.result, 3, phi, 1e-10));
  }
  EXPECT_EQ(error_code_of([] { gates::build_cnz(3, kPi, Complex(1.0, 0.0)); }),
            ErrorCode::InvalidArgument);
}

TEST(BuildCnz, TrivialAndFullTurnPhases) {
  for (double phi : {0.0, 2 * kPi}) {
    const auto gate = gates::build_cnz(3, phi);
    EXPECT_NEAR(gate.result.success_probability, 1.0, 1e-12);
    EXPECT_TRUE(gates::verify_cnz(gate.result, 3, phi, 1e-10));
  }
}

TEST(BuildCnz, TamperedUnitaryFailsVerification) {
  const auto gate = gates::build_cnz(2, kPi);
  ComplexMatrix u = gate.result.unitary.matrix();
  u(0, 0) += 1e-3;
  EXPECT_FALSE(gates::verify_cnz(u, 2, kPi, gate.result.success_probability, 1e-10));
  EXPECT_FALSE(gates::verify_cnz(gate.result.unitary.matrix(), 2, kPi / 2,
                                 gate.result.success_probability, 1e-10));
}

TEST(BuildCnz, RejectsBadArguments) {
  EXPECT_EQ(error_code_of([] { gates::build_cnz(1, kPi); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code_of([] { gates::build_cnz(2, std::nan("")); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace photonsynth
