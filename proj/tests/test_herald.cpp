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

#include "photonsynth/herald.hpp"

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

ComplexMatrix ones_minus_identity(int n) {
  return ComplexMatrix::Ones(n, n) - ComplexMatrix::Identity(n, n);
}

TEST(BilinearMatrix, TwoPhotonsWithoutHerald) {
  const ComplexMatrix f = herald::bilinear_matrix({}, 2);
  EXPECT_LT((f - ones_minus_identity(2)).norm(), 1e-14);
}

TEST(BilinearMatrix, AllOnesHeraldRows) {
  const std::vector<herald::HeraldRow> three{{ComplexVector::Ones(3), 1}};
  const ComplexMatrix f3 = herald::bilinear_matrix(three, 3);
  // Two equal unit rows compete for one column, so the diagonal vanishes.
  EXPECT_LT((f3 - ones_minus_identity(3)).norm(), 1e-13);

  const std::vector<herald::HeraldRow> four{{ComplexVector::Ones(4), 2}};
  const ComplexMatrix f4 = herald::bilinear_matrix(four, 4);
  EXPECT_LT((f4 - 2.0 * ones_minus_identity(4)).norm(), 1e-13);
  EXPECT_EQ(linalg::numerical_rank(f4), 4);
}

TEST(BilinearMatrix, MultiplicityMustMatch) {
  const std::vector<herald::HeraldRow> rows{{ComplexVector::Ones(4), 1}};
  EXPECT_EQ(error_code_of([&] { herald::bilinear_matrix(rows, 4); }),
            ErrorCode::MultiplicityMismatch);
  const std::vector<herald::HeraldRow> wrong_len{{ComplexVector::Ones(3), 2}};
  EXPECT_EQ(error_code_of([&] { herald::bilinear_matrix(wrong_len, 4); }),
            ErrorCode::DimensionMismatch);
}

TEST(DefaultWitness, HasFullRank) {
  EXPECT_TRUE(herald::default_witness(2).empty());
  for (int n = 2; n <= 7; ++n) {
    const auto rows = herald::default_witness(n);
    EXPECT_EQ(linalg::numerical_rank(herald::bilinear_matrix(rows, n)), n) << "n=" << n;
  }
}

TEST(HeraldFeasible, RankAgainstPhotonNumber) {
  random::Rng rng(2);
  const TwoPhotonState rank2 = random::diagonal_state_of_rank(3, 2, rng);
  const TwoPhotonState rank3 = random::diagonal_state_of_rank(3, 3, rng);
  EXPECT_TRUE(herald::feasible(rank2, 2));
  EXPECT_FALSE(herald::feasible(rank3, 2));
  EXPECT_TRUE(herald::feasible(rank3, 3));
  EXPECT_FALSE(herald::feasible(random::diagonal_state_of_rank(3, 1, rng), 1));
}

void expect_heralds(const TwoPhotonState& s, int n, const herald::Options& options = {}) {
  const auto c = herald::construct(s, n, options);
  const SynthesisResult& r = c.result;
  EXPECT_EQ(r.kind, SynthesisKind::Herald);
  EXPECT_TRUE(linalg::is_unitary(r.unitary.matrix()));
  ASSERT_TRUE(r.herald.has_value());
  const auto report =
      verify::extract_heralded(r.unitary.matrix(), n, *r.herald, r.relevant_modes, &s.matrix());
  EXPECT_GT(*report.fidelity_vs_target, 1.0 - 1e-9);
  EXPECT_NEAR(report.probability, r.success_probability, 1e-12);
  EXPECT_NEAR(r.success_probability,
              std::pow(r.scale_alpha, 2 * n) * c.target_diagonal.squaredNorm(), 1e-12);
  EXPECT_LT(herald::identity_residual(c, n), 1e-9);
}

TEST(HeraldSynthesis, DiagonalRankTwoFromTwoPhotons) {
  expect_heralds(normalize(from_rows({{0.3, 0.0}, {0.0, 0.2}})), 2);
}

TEST(HeraldSynthesis, BellPairFromFourPhotons) {
  const TwoPhotonState bell = from_qudit_target(QuditTarget(ComplexMatrix::Identity(2, 2) / std::numbers::sqrt2));
  const auto c = herald::construct(bell, 4);
  EXPECT_EQ(c.pattern.signal, std::vector<int>{2});
  EXPECT_EQ(c.result.relevant_modes, 4);
  EXPECT_EQ(c.result.herald_modes(), 1);
  expect_heralds(bell, 4);
}

TEST(HeraldSynthesis, RankAbovePhotonNumberIsInfeasible) {
  random::Rng rng(3);
  const TwoPhotonState rank3 = random::state_of_rank(4, 3, rng);
  EXPECT_EQ(error_code_of([&] { herald::synthesize(rank3, 2); }), ErrorCode::InfeasibleRank);
  EXPECT_EQ(error_code_of([&] { herald::synthesize(rank3, 1); }), ErrorCode::InfeasibleRank);
}

TEST(HeraldSynthesis, GeneralStatesAndSurplusPhotons) {
  random::Rng rng(31);
  for (int m = 2; m <= 5; ++m) {
    for (int r = 1; r <= m; ++r) {
      const int n = std::max(r, 2) + (m + r) % 2;
      expect_heralds(random::state_of_rank(m, r, rng), n);
    }
  }
  // More photons than payload modes.
  expect_heralds(random::state_of_rank(2, 2, rng), 5);
}

TEST(HeraldSynthesis, UserRowsAreKeptWhenFullRank) {
  random::Rng rng(8);
  const TwoPhotonState s = random::state_of_rank(3, 3, rng);
  herald::Options options;
  options.herald_rows = std::vector<herald::HeraldRow>{
      {ComplexVector{{Complex(0.5, 0.0), Complex(0.0, 0.5), Complex(-0.5, 0.0), Complex(0.3, 0.1)}}, 1},
      {ComplexVector{{Complex(0.2, 0.0), Complex(0.4, 0.0), Complex(0.1, 0.3), Complex(0.6, 0.0)}}, 1}};
  const auto c = herald::construct(s, 4, options);
  EXPECT_FALSE(c.used_default_witness);
  EXPECT_EQ(c.pattern.signal, (std::vector<int>{1, 1}));
  expect_heralds(s, 4, options);
}

TEST(HeraldSynthesis, RankDeficientUserRowsFallBack) {
  random::Rng rng(4);
  const TwoPhotonState s = random::state_of_rank(3, 3, rng);
  herald::Options options;
  // Two herald rows fed only by input 0 make every permanent vanish.
  ComplexVector e0 = ComplexVector::Zero(4);
  e0(0) = 1.0;
  options.herald_rows = std::vector<herald::HeraldRow>{{e0, 1}, {e0, 1}};
  const auto c = herald::construct(s, 4, options);
  EXPECT_TRUE(c.used_default_witness);
  EXPECT_EQ(c.pattern.signal, std::vector<int>{2});
}

}  // namespace
}  // namespace photonsynth
