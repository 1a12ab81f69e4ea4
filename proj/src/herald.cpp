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

#include "photonsynth/error.hpp"
#include "photonsynth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace photonsynth::herald {

namespace {
constexpr double kFidelityFloor = 1.0 - 1e-9;

/// Rows e_a / e_b / herald rows stacked into the n x n permanent argument.
ComplexMatrix stack_rows(const ComplexVector& first, const ComplexVector& second,
                         std::span<const HeraldRow> rows, int photons) {
  ComplexMatrix m(photons, photons);
  m.row(0) = first.transpose();
  m.row(1) = second.transpose();
  Eigen::Index r = 2;
  for (const auto& h : rows) {
    for (int k = 0; k < h.multiplicity; ++k) m.row(r++) = h.row.transpose();
  }
  return m;
}

void check_rows(std::span<const HeraldRow> rows, int photons) {
  if (photons < 2) {
    throw Error(ErrorCode::InvalidArgument, "heralding needs at least two photons");
  }
  int total = 0;
  for (const auto& h : rows) {
    if (h.multiplicity <= 0) {
      throw Error(ErrorCode::MultiplicityMismatch, "herald multiplicities must be positive");
    }
    if (h.row.size() != photons) {
      throw Error(ErrorCode::DimensionMismatch,
                  "herald row has " + std::to_string(h.row.size()) + " entries, expected " +
                      std::to_string(photons));
    }
    total += h.multiplicity;
  }
  if (total != photons - 2) {
    throw Error(ErrorCode::MultiplicityMismatch,
                "herald rows carry " + std::to_string(total) + " photons, expected " +
                    std::to_string(photons - 2));
  }
}

HeraldPattern pattern_of(std::span<const HeraldRow> rows) {
  HeraldPattern p;
  for (const auto& h : rows) p.signal.push_back(h.multiplicity);
  return p;
}
}  // namespace

ComplexMatrix bilinear_matrix(std::span<const HeraldRow> rows, int photons) {
  check_rows(rows, photons);
  const ComplexMatrix id = ComplexMatrix::Identity(photons, photons);
  ComplexMatrix f(photons, photons);
  for (int a = 0; a < photons; ++a) {
    for (int b = a; b < photons; ++b) {
      const Complex value = fock::permanent(stack_rows(id.col(a), id.col(b), rows, photons));
      f(a, b) = value;
      f(b, a) = value;
    }
  }
  return f;
}

bool feasible(const TwoPhotonState& s_out, int photons, double tol) {
  return photons >= 2 && photons >= state_rank(s_out, tol);
}

std::vector<HeraldRow> default_witness(int photons) {
  if (photons < 2) {
    throw Error(ErrorCode::InvalidArgument, "heralding needs at least two photons");
  }
  if (photons == 2) return {};
  const double scale = std::sqrt(1.0 / (photons - 2));
  return {HeraldRow{ComplexVector::Constant(photons, Complex(scale, 0.0)), photons - 2}};
}

Construction construct(const TwoPhotonState& s_out, int photons, const Options& options) {
  if (!feasible(s_out, photons)) {
    throw Error(ErrorCode::InfeasibleRank,
                "rank(S_out) = " + std::to_string(state_rank(s_out)) + " exceeds " +
                    std::to_string(photons) +
                    " input photons; heralding needs n >= rank and n >= 2");
  }
  const Eigen::Index m = s_out.modes();
  const int n = photons;

  std::vector<HeraldRow> rows;
  bool used_default = true;
  ComplexMatrix f;
  if (options.herald_rows) {
    rows = *options.herald_rows;
    f = bilinear_matrix(rows, n);
    used_default = linalg::numerical_rank(f) < n;
  }
  if (used_default) {
    rows = default_witness(n);
    f = bilinear_matrix(rows, n);
  }
  const HeraldPattern pattern = pattern_of(rows);
  const Eigen::Index h = pattern.modes();

  const linalg::TakagiFactorization tk_out = linalg::takagi(s_out.matrix());
  RealVector d = tk_out.diagonal;
  const double cutoff = tolerance::kRank * d.maxCoeff();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i) <= cutoff || i >= n) d(i) = 0.0;
  }

  // In the Takagi basis of F the herald form is diagonal:
  //   Per(e'_a, e'_b, herald) = F_aa delta_ab.
  const linalg::TakagiFactorization tk_f = linalg::takagi(f);
  const double herald_norm = std::sqrt(2.0 * static_cast<double>(pattern.factorial_product()));

  ComplexMatrix a = ComplexMatrix::Zero(m + h, n);
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(m, n); ++i) {
    if (d(i) == 0.0) continue;
    const double weight = std::sqrt(herald_norm * d(i) / tk_f.diagonal(i));
    a.row(i) = weight * tk_f.v.col(i).transpose();
  }
  for (Eigen::Index t = 0; t < h; ++t) {
    a.row(m + t) = rows[static_cast<std::size_t>(t)].row.transpose();
  }

  // The extension E has A / sigma in its corner; input photons enter along
  // the rows of U, so the diagonal-state interferometer is E^T. The payload
  // is then rotated from D to S_out = conj(V) D V^dagger.
  const linalg::UnitaryExtension ext = linalg::unitary_extension(a);
  const Eigen::Index total = ext.u.rows();
  ComplexMatrix rotate = ComplexMatrix::Identity(total, total);
  rotate.topLeftCorner(m, m) = tk_out.v.adjoint();
  const ComplexMatrix u = ext.u.transpose() * rotate;

  const verify::ExtractionReport report =
      verify::extract_heralded(u, n, pattern, m, &s_out.matrix());
  const double fid = report.fidelity_vs_target.value_or(0.0);
  if (!(fid > kFidelityFloor)) {
    throw Error(ErrorCode::VerificationFailure,
                "heralded extraction fidelity " + std::to_string(fid));
  }
  const double alpha = 1.0 / ext.sigma1;
  const double predicted = std::pow(alpha, 2 * n) * d.squaredNorm();
  if (std::abs(report.probability - predicted) > 1e-8 * std::max(predicted, 1e-300) + 1e-14) {
    throw Error(ErrorCode::VerificationFailure,
                "oracle success probability disagrees with alpha^(2n) Tr(D^2)");
  }

  SynthesisResult result{
      .kind = SynthesisKind::Herald,
      .unitary = Interferometer(u),
      .relevant_modes = static_cast<int>(m),
      .aux_modes = static_cast<int>(total - m - h),
      .scale_alpha = alpha,
      .herald = pattern,
      .success_probability = report.probability,
  };
  return Construction{std::move(result), std::move(a), std::move(d), pattern, used_default};
}

SynthesisResult synthesize(const TwoPhotonState& s_out, int photons, const Options& options) {
  return construct(s_out, photons, options).result;
}

double identity_residual(const Construction& construction, int photons) {
  const ComplexMatrix& a = construction.rows;
  const Eigen::Index m = construction.result.relevant_modes;
  std::vector<HeraldRow> rows;
  for (int t = 0; t < construction.pattern.modes(); ++t) {
    rows.push_back(HeraldRow{a.row(m + t).transpose(),
                             construction.pattern.signal[static_cast<std::size_t>(t)]});
  }
  const double herald_norm =
      std::sqrt(2.0 * static_cast<double>(construction.pattern.factorial_product()));
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      const Complex per = fock::permanent(
          stack_rows(a.row(i).transpose(), a.row(j).transpose(), rows, photons));
      const double expected = i == j ? herald_norm * construction.target_diagonal(i) : 0.0;
      worst = std::max(worst, std::abs(per - expected));
    }
  }
  return worst;
}

}  // namespace photonsynth::herald
