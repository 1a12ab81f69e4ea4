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

#include "photonsynth/error.hpp"
#include "photonsynth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace photonsynth::postselect {

namespace {
constexpr double kFidelityFloor = 1.0 - 1e-9;

RealVector zero_below_relative(RealVector d, double rel) {
  if (d.size() == 0) return d;
  const double cutoff = rel * d.maxCoeff();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i) <= cutoff) d(i) = 0.0;
  }
  return d;
}
}  // namespace

bool feasible(const TwoPhotonState& s_in, const QuditTarget& target, double tol) {
  return target.rank(tol) <= state_rank(s_in, tol);
}

TwoPhotonState build_sps(const QuditTarget& target) {
  const ComplexMatrix& c = target.matrix();
  const Eigen::Index d1 = target.d1();
  const Eigen::Index d2 = target.d2();
  const linalg::SvdResult f = linalg::svd(c);
  const auto k = f.singular_values.size();

  ComplexMatrix sigma1 = ComplexMatrix::Zero(d1, d1);
  ComplexMatrix sigma2 = ComplexMatrix::Zero(d2, d2);
  sigma1.topLeftCorner(k, k) = f.singular_values.cast<Complex>().asDiagonal();
  sigma2.topLeftCorner(k, k) = f.singular_values.cast<Complex>().asDiagonal();

  const ComplexMatrix a = f.u * sigma1 * f.u.transpose();
  const ComplexMatrix b = f.v.conjugate() * sigma2 * f.v.adjoint();

  ComplexMatrix s(d1 + d2, d1 + d2);
  s.topLeftCorner(d1, d1) = a;
  s.topRightCorner(d1, d2) = c;
  s.bottomLeftCorner(d2, d1) = c.transpose();
  s.bottomRightCorner(d2, d2) = b;
  return normalize(s);
}

RealVector rescaling_lambda(const RealVector& d_in, const RealVector& d_ps, double tol) {
  if (d_in.size() != d_ps.size()) {
    throw Error(ErrorCode::DimensionMismatch, "rescaling needs diagonals of equal length");
  }
  RealVector lambda = RealVector::Zero(d_in.size());
  for (Eigen::Index i = 0; i < d_in.size(); ++i) {
    if (d_in(i) > tol) {
      lambda(i) = std::sqrt(std::max(d_ps(i), 0.0) / d_in(i));
    } else if (d_ps(i) > tol) {
      throw Error(ErrorCode::SupportMismatch,
                  "entry " + std::to_string(i) + " of the target diagonal lies outside the "
                  "support of the input diagonal");
    }
  }
  return lambda;
}

Construction construct(const TwoPhotonState& s_in, const QuditTarget& target) {
  if (!feasible(s_in, target)) {
    throw Error(ErrorCode::InfeasibleRank,
                "rank(C) = " + std::to_string(target.rank()) + " exceeds rank(S_in) = " +
                    std::to_string(state_rank(s_in)) +
                    "; post-selection needs rank(S_out) <= 2 rank(S_in)");
  }
  const Eigen::Index d1 = target.d1();
  const Eigen::Index d2 = target.d2();
  const Eigen::Index modes = std::max(s_in.modes(), d1 + d2);

  const TwoPhotonState sps = build_sps(target);
  const ComplexMatrix s_in_p = linalg::zero_pad(s_in.matrix(), modes, modes);
  const ComplexMatrix sps_p = linalg::zero_pad(sps.matrix(), modes, modes);

  const linalg::TakagiFactorization tk_in = linalg::takagi(s_in_p);
  const linalg::TakagiFactorization tk_ps = linalg::takagi(sps_p);
  const RealVector lambda =
      rescaling_lambda(zero_below_relative(tk_in.diagonal, tolerance::kRank),
                       zero_below_relative(tk_ps.diagonal, tolerance::kRank), 0.0);

  // D_in = V_in^T S_in V_in and S_ps = conj(V_ps) D_ps V_ps^dagger, so
  // T = V_in Lambda V_ps^dagger satisfies T^T S_in T = S_ps.
  const ComplexMatrix transfer =
      tk_in.v * lambda.cast<Complex>().asDiagonal() * tk_ps.v.adjoint();
  const double transfer_err = (transfer.transpose() * s_in_p * transfer - sps_p).norm();
  if (transfer_err > tolerance::kReconstruction * std::max(1.0, transfer.squaredNorm())) {
    throw Error(ErrorCode::VerificationFailure,
                "T^T S_in T differs from S_ps by " + std::to_string(transfer_err));
  }

  const linalg::UnitaryExtension ext = linalg::unitary_extension(transfer);
  const double alpha =
      qudit_block(sps.matrix(), d1, d2).norm() / (ext.sigma1 * ext.sigma1);

  const verify::ExtractionReport report =
      verify::extract_postselected(ext.u, s_in, d1, d2, &target.matrix());
  const double fid = report.fidelity_vs_target.value_or(0.0);
  if (!(fid > kFidelityFloor)) {
    throw Error(ErrorCode::VerificationFailure,
                "post-selected extraction fidelity " + std::to_string(fid));
  }
  if (std::abs(report.probability - alpha * alpha) > 1e-9) {
    throw Error(ErrorCode::VerificationFailure,
                "oracle success probability disagrees with the construction scale");
  }

  SynthesisResult result{
      .kind = SynthesisKind::PostSelect,
      .unitary = Interferometer(ext.u),
      .relevant_modes = static_cast<int>(modes),
      .aux_modes = static_cast<int>(ext.u.rows() - modes),
      .scale_alpha = alpha,
      .herald = std::nullopt,
      .success_probability = report.probability,
  };
  return Construction{std::move(result), transfer, sps};
}

SynthesisResult synthesize(const TwoPhotonState& s_in, const QuditTarget& target) {
  return construct(s_in, target).result;
}

}  // namespace photonsynth::postselect
