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

#include "photonsynth/verify.hpp"

#include "photonsynth/fock.hpp"
#include "photonsynth/herald.hpp"
#include "photonsynth/random.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace photonsynth {
namespace {

using testing::from_rows;

TEST(Extraction, IdentityKeepsBellPair) {
  const QuditTarget bell(ComplexMatrix::Identity(2, 2) / std::numbers::sqrt2);
  const TwoPhotonState s = from_qudit_target(bell);
  const auto report = verify::extract_postselected(ComplexMatrix::Identity(4, 4), s, 2, 2,
                                                   &bell.matrix());
  EXPECT_NEAR(report.probability, 1.0, 1e-14);
  EXPECT_NEAR(*report.fidelity_vs_target, 1.0, 1e-14);
  EXPECT_LT((report.extracted - bell.matrix()).norm(), 1e-14);
}

TEST(Extraction, ConjugationAndPermanentRoutesAgree) {
  random::Rng rng(50);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = random::uniform_int(2, 5, rng);
    const TwoPhotonState s = random::state_of_rank(m, random::uniform_int(1, m, rng), rng);
    const int d1 = random::uniform_int(1, 3, rng), d2 = random::uniform_int(1, 3, rng);
    const int modes = std::max(m, d1 + d2) + 1;
    const ComplexMatrix u = random::unitary(modes, rng);
    const ComplexMatrix a = verify::postselected_block(u, s, d1, d2);
    const ComplexMatrix b = verify::postselected_block_by_permanents(u, s, d1, d2);
    EXPECT_LT((a - b).norm(), 1e-12);
    const double p = verify::success_probability_postselect(u, s, d1, d2);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0 + 1e-12);
    EXPECT_NEAR(p, a.squaredNorm(), 1e-12);
  }
}

TEST(Extraction, ProbabilityVanishesWhenRoutedAway) {
  const TwoPhotonState s = single_photons_state(4);
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 2) = swap(2, 0) = swap(1, 3) = swap(3, 1) = 1.0;
  // Photons in modes 0 and 1 end in the second register only.
  EXPECT_NEAR(verify::success_probability_postselect(swap, s, 2, 2), 0.0, 1e-15);
  EXPECT_NEAR(verify::success_probability_postselect(ComplexMatrix::Identity(4, 4), s, 1, 1),
              1.0, 1e-15);
}

TEST(StatesEqual, UpToGlobalPhase) {
  random::Rng rng(6);
  const ComplexMatrix s = random::state_of_rank(3, 2, rng).matrix();
  const auto self = verify::states_equal_up_to_phase(s, s, 1e-12);
  EXPECT_TRUE(self.equal);
  EXPECT_NEAR(std::abs(self.phase - 1.0), 0.0, 1e-12);

  const Complex c = std::polar(1.0, -std::numbers::pi / 3);
  const auto rotated = verify::states_equal_up_to_phase(s, c * s, 1e-12);
  EXPECT_TRUE(rotated.equal);
  EXPECT_NEAR(std::abs(rotated.phase - std::conj(c)), 0.0, 1e-12);
  EXPECT_TRUE(verify::states_equal_up_to_phase(c * s, s, 1e-12).equal);

  const ComplexMatrix other = random::state_of_rank(3, 2, rng).matrix();
  EXPECT_FALSE(verify::states_equal_up_to_phase(s, other, 1e-6).equal);

  const ComplexMatrix u = random::unitary(3, rng);
  EXPECT_TRUE(verify::states_equal_up_to_phase(u.transpose() * s * u,
                                               u.transpose() * (c * s) * u, 1e-12)
                  .equal);
}

TEST(Fidelity, Basics) {
  const ComplexMatrix a = from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const ComplexMatrix b = from_rows({{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_NEAR(verify::fidelity(a, a), 1.0, 1e-15);
  EXPECT_NEAR(verify::fidelity(a, b), 0.0, 1e-15);
  EXPECT_NEAR(verify::fidelity(a, ComplexMatrix::Zero(2, 2)), 0.0, 0.0);
  EXPECT_NEAR(verify::fidelity(a, Complex(0.0, 3.0) * a), 1.0, 1e-15);
}

TEST(Heralded, TwoPhotonsThroughIdentity) {
  const ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix out = verify::heralded_state(u, 2, HeraldPattern{}, 2);
  EXPECT_LT((out - single_photons_state(2).matrix()).norm(), 1e-15);
}

TEST(Heralded, RankThreeTargetAndMassBalance) {
  random::Rng rng(19);
  const TwoPhotonState s = random::state_of_rank(3, 3, rng);
  const auto c = herald::construct(s, 3);
  const SynthesisResult& r = c.result;
  const auto report =
      verify::extract_heralded(r.unitary.matrix(), 3, *r.herald, 3, &s.matrix());
  EXPECT_GT(*report.fidelity_vs_target, 1.0 - 1e-10);
  EXPECT_TRUE(verify::states_equal_up_to_phase(report.extracted, s.matrix(), 1e-9).equal);

  // Summing the oracle probabilities of every output with the herald signal
  // and two payload photons reproduces the reported probability, and the
  // whole output distribution sums to one.
  const int total = r.total_modes();
  const FockState in = [&] {
    std::vector<int> occ(static_cast<std::size_t>(total), 0);
    for (int i = 0; i < 3; ++i) occ[static_cast<std::size_t>(i)] = 1;
    return FockState(occ);
  }();
  double all = 0.0, heralded = 0.0;
  for (const FockState& out : fock::basis(total, 3)) {
    const double p = std::norm(fock::amplitude(r.unitary.matrix(), out, in));
    all += p;
    bool match = out[3] == r.herald->signal[0];
    for (int k = 4; k < total; ++k) match = match && out[static_cast<std::size_t>(k)] == 0;
    if (match) heralded += p;
  }
  EXPECT_NEAR(all, 1.0, 1e-10);
  EXPECT_NEAR(heralded, r.success_probability, 1e-12);
}

TEST(Heralded, WrongSignalLosesTheState) {
  random::Rng rng(20);
  const TwoPhotonState s = random::state_of_rank(2, 2, rng);
  herald::Options options;
  options.herald_rows = std::vector<herald::HeraldRow>{
      {ComplexVector{{Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(0.0, 0.5)}}, 1},
      {ComplexVector{{Complex(0.5, 0.0), Complex(-0.5, 0.0), Complex(0.0, 0.5), Complex(0.5, 0.0)}}, 1}};
  const auto c = herald::construct(s, 4, options);
  ASSERT_FALSE(c.used_default_witness);
  const ComplexMatrix& u = c.result.unitary.matrix();
  const auto right = verify::extract_heralded(u, 4, HeraldPattern{{1, 1}}, 2, &s.matrix());
  // Both herald photons in the first herald mode, the second one empty.
  const auto wrong = verify::extract_heralded(u, 4, HeraldPattern{{2}}, 2, &s.matrix());
  EXPECT_GT(*right.fidelity_vs_target, 1.0 - 1e-10);
  EXPECT_FALSE(wrong.probability > 0.0 && *wrong.fidelity_vs_target > 1.0 - 1e-6);
}

}  // namespace
}  // namespace photonsynth
