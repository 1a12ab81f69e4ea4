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

#include "photonsynth/postselect.hpp"

#include "photonsynth/fock.hpp"
#include "photonsynth/random.hpp"
#include "photonsynth/verify.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace photonsynth {
namespace {

using testing::error_code_of;
using testing::from_rows;

QuditTarget bell2() { return QuditTarget(ComplexMatrix::Identity(2, 2) / std::numbers::sqrt2); }

TEST(PostselectFeasible, RankCondition) {
  const TwoPhotonState photons = single_photons_state(4);
  EXPECT_TRUE(postselect::feasible(photons, bell2()));
  EXPECT_FALSE(postselect::feasible(photons, QuditTarget(ComplexMatrix::Identity(3, 3) / std::sqrt(3.0))));
  random::Rng rng(1);
  EXPECT_TRUE(postselect::feasible(random::state_of_rank(3, 3, rng),
                                   QuditTarget(ComplexMatrix::Identity(3, 3) / std::sqrt(3.0))));
  EXPECT_TRUE(postselect::feasible(random::state_of_rank(3, 1, rng),
                                   QuditTarget(from_rows({{1.0, 0.0}}))));
}

TEST(BuildSps, RankEqualsRankOfTarget) {
  const TwoPhotonState sps = postselect::build_sps(bell2());
  EXPECT_EQ(state_rank(sps), 2);
  const ComplexMatrix block = qudit_block(sps.matrix(), 2, 2);
  EXPECT_GT(verify::fidelity(block, bell2().matrix()), 1.0 - 1e-12);

  random::Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const int d1 = 1 + trial % 4, d2 = 1 + (trial / 3) % 4;
    const int r = 1 + trial % std::min(d1, d2);
    const QuditTarget c = random::qudit_target(d1, d2, r, rng);
    const TwoPhotonState s = postselect::build_sps(c);
    EXPECT_EQ(state_rank(s), r);
    EXPECT_GT(verify::fidelity(qudit_block(s.matrix(), d1, d2), c.matrix()), 1.0 - 1e-12);
  }
}

TEST(RescalingLambda, Examples) {
  const RealVector l = postselect::rescaling_lambda(RealVector{{0.5, 0.5}}, RealVector{{0.5, 0.0}}, 1e-12);
  EXPECT_NEAR(l(0), 1.0, 1e-15);
  EXPECT_NEAR(l(1), 0.0, 1e-15);
  const RealVector k =
      postselect::rescaling_lambda(RealVector{{0.4, 0.1, 0.0}}, RealVector{{0.1, 0.4, 0.0}}, 1e-12);
  EXPECT_NEAR(k(0), 0.5, 1e-15);
  EXPECT_NEAR(k(1), 2.0, 1e-15);
  EXPECT_NEAR(k(2), 0.0, 1e-15);
}

TEST(RescalingLambda, SupportMismatch) {
  EXPECT_EQ(error_code_of([] {
              postselect::rescaling_lambda(RealVector{{0.5, 0.0}}, RealVector{{0.3, 0.3}}, 1e-12);
            }),
            ErrorCode::SupportMismatch);
  EXPECT_EQ(error_code_of([] {
              postselect::rescaling_lambda(RealVector{{0.5}}, RealVector{{0.3, 0.3}}, 1e-12);
            }),
            ErrorCode::DimensionMismatch);
}

TEST(PostselectSynthesis, SinglePhotonsToBellPair) {
  const TwoPhotonState in = single_photons_state(4);
  const auto c = postselect::construct(in, bell2());
  const SynthesisResult& r = c.result;
  EXPECT_EQ(r.kind, SynthesisKind::PostSelect);
  EXPECT_EQ(r.relevant_modes, 4);
  EXPECT_EQ(r.total_modes(), 8);
  EXPECT_LE(r.aux_modes, 4);
  EXPECT_TRUE(linalg::is_unitary(r.unitary.matrix()));

  const auto report = verify::extract_postselected(r.unitary.matrix(), in, 2, 2, &bell2().matrix());
  EXPECT_GT(*report.fidelity_vs_target, 1.0 - 1e-10);
  EXPECT_NEAR(report.probability, r.success_probability, 1e-12);
  EXPECT_NEAR(r.success_probability, r.scale_alpha * r.scale_alpha, 1e-10);
  EXPECT_GT(r.success_probability, 0.0);
  EXPECT_LE(r.success_probability, 1.0);
}

TEST(PostselectSynthesis, TransferMatrixMapsInputToSps) {
  random::Rng rng(77);
  const TwoPhotonState in = random::state_of_rank(4, 3, rng);
  const QuditTarget target = random::qudit_target(2, 3, 2, rng);
  const auto c = postselect::construct(in, target);
  const ComplexMatrix s = linalg::zero_pad(in.matrix(), 5, 5);
  const ComplexMatrix sps = linalg::zero_pad(c.sps.matrix(), 5, 5);
  EXPECT_LT((c.transfer.transpose() * s * c.transfer - sps).norm(), 1e-10);
}

TEST(PostselectSynthesis, RankOneTargetFromRankOneInput) {
  random::Rng rng(5);
  const TwoPhotonState in = random::state_of_rank(3, 1, rng);
  const QuditTarget product(from_rows({{0.6, 0.0}, {0.0, 0.0}}) + from_rows({{0.0, 0.8}, {0.0, 0.0}}));
  const SynthesisResult r = postselect::synthesize(in, product);
  const auto report = verify::extract_postselected(r.unitary.matrix(), in, 2, 2, &product.matrix());
  EXPECT_GT(*report.fidelity_vs_target, 1.0 - 1e-10);
}

TEST(PostselectSynthesis, QutritBellFromSinglePhotonsIsInfeasible) {
  const QuditTarget bell3(ComplexMatrix::Identity(3, 3) / std::sqrt(3.0));
  EXPECT_EQ(error_code_of([&] { postselect::synthesize(single_photons_state(6), bell3); }),
            ErrorCode::InfeasibleRank);
}

TEST(PostselectSynthesis, InputWiderThanTarget) {
  random::Rng rng(9);
  const TwoPhotonState in = random::state_of_rank(6, 4, rng);
  const QuditTarget target = random::qudit_target(2, 2, 2, rng);
  const SynthesisResult r = postselect::synthesize(in, target);
  EXPECT_EQ(r.relevant_modes, 6);
  EXPECT_EQ(r.total_modes(), 12);
  const auto report = verify::extract_postselected(r.unitary.matrix(), in, 2, 2, &target.matrix());
  EXPECT_GT(*report.fidelity_vs_target, 1.0 - 1e-10);
}

TEST(PostselectSynthesis, PermanentRouteAgrees) {
  random::Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = random::uniform_int(2, 4, rng);
    const int r = random::uniform_int(1, m, rng);
    const TwoPhotonState in = random::state_of_rank(m, r, rng);
    const int d1 = random::uniform_int(1, 2, rng), d2 = random::uniform_int(1, 2, rng);
    const int rc = random::uniform_int(1, std::min({d1, d2, r}), rng);
    const QuditTarget target = random::qudit_target(d1, d2, rc, rng);
    const SynthesisResult res = postselect::synthesize(in, target);
    const ComplexMatrix& u = res.unitary.matrix();
    const ComplexMatrix a = verify::postselected_block(u, in, d1, d2);
    const ComplexMatrix b = verify::postselected_block_by_permanents(u, in, d1, d2);
    EXPECT_LT((a - b).norm(), 1e-11);
    EXPECT_GT(verify::fidelity(a, target.matrix()), 1.0 - 1e-10);
  }
}

TEST(PostselectSynthesis, RandomFeasiblePairsSucceed) {
  random::Rng rng(123);
  int infeasible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int r = random::uniform_int(1, 4, rng);
    const int m = random::uniform_int(std::max(r, 2), 6, rng);
    const TwoPhotonState in = random::state_of_rank(m, r, rng);
    const int d1 = random::uniform_int(1, 4, rng), d2 = random::uniform_int(1, 4, rng);
    const int rc = random::uniform_int(1, std::min(d1, d2), rng);
    const QuditTarget target = random::qudit_target(d1, d2, rc, rng);
    if (rc > r) {
      ++infeasible;
      EXPECT_FALSE(postselect::feasible(in, target));
      EXPECT_EQ(error_code_of([&] { postselect::synthesize(in, target); }),
                ErrorCode::InfeasibleRank);
      continue;
    }
    const SynthesisResult res = postselect::synthesize(in, target);
    EXPECT_EQ(res.total_modes(), 2 * std::max(m, d1 + d2));
    const auto report =
        verify::extract_postselected(res.unitary.matrix(), in, d1, d2, &target.matrix());
    EXPECT_GT(*report.fidelity_vs_target, 1.0 - 1e-9);
  }
  EXPECT_GT(infeasible, 0);
}

}  // namespace
}  // namespace photonsynth
