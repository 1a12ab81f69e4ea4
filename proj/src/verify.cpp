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

#include "photonsynth/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace photonsynth {

int HeraldPattern::photons() const noexcept {
  int total = 0;
  for (int s : signal) total += s;
  return total;
}

std::uint64_t HeraldPattern::factorial_product() const {
  std::uint64_t out = 1;
  for (int s : signal) out *= fock::factorial(s);
  return out;
}

void HeraldPattern::validate(int total_photons) const {
  for (int s : signal) {
    if (s <= 0) throw Error(ErrorCode::SignalMismatch, "herald signal entries must be positive");
  }
  if (photons() != total_photons - 2) {
    throw Error(ErrorCode::SignalMismatch,
                "herald signal carries " + std::to_string(photons()) + " photons, expected " +
                    std::to_string(total_photons - 2));
  }
}

std::string_view to_string(SynthesisKind kind) noexcept {
  switch (kind) {
    case SynthesisKind::PostSelect: return "postselect";
    case SynthesisKind::Herald: return "herald";
    case SynthesisKind::Cnz: return "cnz";
  }
  return "unknown";
}

SynthesisKind synthesis_kind_from_string(std::string_view name) {
  if (name == "postselect") return SynthesisKind::PostSelect;
  if (name == "herald") return SynthesisKind::Herald;
  if (name == "cnz") return SynthesisKind::Cnz;
  throw Error(ErrorCode::ParseError, "unknown synthesis kind '" + std::string(name) + "'");
}

namespace verify {

double fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "fidelity of differently shaped matrices");
  }
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  // cauchy-schwarz bounds this by one up to rounding
  return std::min(1.0, std::abs(a.cwiseProduct(b.conjugate()).sum()) / (na * nb));
}

PhaseComparison states_equal_up_to_phase(const ComplexMatrix& s1, const ComplexMatrix& s2,
                                         double tol) {
  if (s1.rows() != s2.rows() || s1.cols() != s2.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compare differently shaped states");
  }
  PhaseComparison out;
  const Complex overlap = s1.cwiseProduct(s2.conjugate()).sum();
  if (std::abs(overlap) > 0.0) {
    out.phase = overlap / std::abs(overlap);
  } else {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    s2.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(s2(r, c)) > 0.0 && std::abs(s1(r, c)) > 0.0) {
      const Complex ratio = s1(r, c) / s2(r, c);
      out.phase = ratio / std::abs(ratio);
    }
  }
  out.distance = (s1 - out.phase * s2).norm();
  out.equal = out.distance < tol;
  return out;
}

namespace {

ComplexMatrix padded_input(const TwoPhotonState& s_in, Eigen::Index modes) {
  if (s_in.modes() > modes) {
    throw Error(ErrorCode::DimensionMismatch, "input state has more modes than the interferometer");
  }
  return linalg::zero_pad(s_in.matrix(), modes, modes);
}

void check_postselect_dims(const ComplexMatrix& u, Eigen::Index d1, Eigen::Index d2) {
  if (u.rows() != u.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "interferometer must be square");
  }
  if (d1 < 1 || d2 < 1 || u.rows() < d1 + d2) {
    throw Error(ErrorCode::DimensionMismatch, "interferometer has fewer than d1 + d2 modes");
  }
}

FockState pair_state(Eigen::Index modes, Eigen::Index i, Eigen::Index j) {
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  occ[static_cast<std::size_t>(i)] += 1;
  occ[static_cast<std::size_t>(j)] += 1;
  return FockState(std::move(occ));
}

void attach_target(ExtractionReport& report, const ComplexMatrix* target) {
  if (target == nullptr) return;
  if (target->rows() != report.extracted.rows() || target->cols() != report.extracted.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "target shape differs from the extracted state");
  }
  report.fidelity_vs_target = fidelity(*target, report.extracted);
  const double nt = target->norm();
  const ComplexMatrix unit_target = nt > 0.0 ? ComplexMatrix(*target / nt) : *target;
  report.global_phase = states_equal_up_to_phase(unit_target, report.extracted, 1.0).phase;
}

}  // namespace

ComplexMatrix postselected_block(const ComplexMatrix& u, const TwoPhotonState& s_in,
                                 Eigen::Index d1, Eigen::Index d2) {
  check_postselect_dims(u, d1, d2);
  const ComplexMatrix evolved = fock::evolve_two_photon(u, padded_input(s_in, u.rows()));
  return qudit_block(evolved, d1, d2);
}

ComplexMatrix postselected_block_by_permanents(const ComplexMatrix& u,
                                               const TwoPhotonState& s_in, Eigen::Index d1,
                                               Eigen::Index d2) {
  check_postselect_dims(u, d1, d2);
  const Eigen::Index modes = u.rows();
  const ComplexMatrix s = padded_input(s_in, modes);

  // Fock components of the input: a^dagger_a a^dagger_b |vac> carries
  // S_ab + S_ba for a < b, and (a^dagger_a)^2 |vac> = sqrt(2) |2_a>.
  struct Component {
    FockState state;
    Complex coefficient;
  };
  std::vector<Component> inputs;
  for (Eigen::Index a = 0; a < modes; ++a) {
    for (Eigen::Index b = a; b < modes; ++b) {
      const Complex c = a == b ? std::numbers::sqrt2 * s(a, a) : s(a, b) + s(b, a);
      if (c != Complex{}) inputs.push_back({pair_state(modes, a, b), c});
    }
  }

  ComplexMatrix block = ComplexMatrix::Zero(d1, d2);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d2; ++j) {
      const FockState out = pair_state(modes, i, d1 + j);
      Complex acc{};
      for (const auto& in : inputs) acc += in.coefficient * fock::amplitude(u, out, in.state);
      block(i, j) = acc;
    }
  }
  return block;
}

ExtractionReport extract_postselected(const ComplexMatrix& u, const TwoPhotonState& s_in,
                                      Eigen::Index d1, Eigen::Index d2,
                                      const ComplexMatrix* target) {
  const ComplexMatrix block = postselected_block(u, s_in, d1, d2);
  ExtractionReport report;
  report.probability = std::min(1.0, block.squaredNorm());
  const double norm = block.norm();
  report.extracted = norm > 0.0 ? ComplexMatrix(block / norm) : block;
  attach_target(report, target);
  return report;
}

double success_probability_postselect(const ComplexMatrix& u, const TwoPhotonState& s_in,
                                      Eigen::Index d1, Eigen::Index d2) {
  return std::min(1.0, postselected_block(u, s_in, d1, d2).squaredNorm());
}

ComplexMatrix heralded_state(const ComplexMatrix& u, int photons, const HeraldPattern& pattern,
                             Eigen::Index payload_modes) {
  if (u.rows() != u.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "interferometer must be square");
  }
  if (photons < 2) {
    throw Error(ErrorCode::InvalidArgument, "heralded preparation needs at least two photons");
  }
  pattern.validate(photons);
  const Eigen::Index modes = u.rows();
  const Eigen::Index h = pattern.modes();
  if (payload_modes < 1 || payload_modes + h > modes || photons > modes) {
    throw Error(ErrorCode::DimensionMismatch,
                "interferometer is too small for the payload, herald and input modes");
  }

  std::vector<int> in_occ(static_cast<std::size_t>(modes), 0);
  for (int k = 0; k < photons; ++k) in_occ[static_cast<std::size_t>(k)] = 1;
  const FockState input(std::move(in_occ));

  std::vector<int> base(static_cast<std::size_t>(modes), 0);
  for (Eigen::Index t = 0; t < h; ++t) {
    base[static_cast<std::size_t>(payload_modes + t)] = pattern.signal[static_cast<std::size_t>(t)];
  }

  ComplexMatrix s = ComplexMatrix::Zero(payload_modes, payload_modes);
  for (Eigen::Index i = 0; i < payload_modes; ++i) {
    for (Eigen::Index j = i; j < payload_modes; ++j) {
      std::vector<int> occ = base;
      occ[static_cast<std::size_t>(i)] += 1;
      occ[static_cast<std::size_t>(j)] += 1;
      const Complex amp = fock::amplitude(u, FockState(std::move(occ)), input);
      if (i == j) {
        s(i, i) = amp / std::numbers::sqrt2;
      } else {
        s(i, j) = amp / 2.0;
        s(j, i) = amp / 2.0;
      }
    }
  }
  return s;
}

ExtractionReport extract_heralded(const ComplexMatrix& u, int photons,
                                  const HeraldPattern& pattern, Eigen::Index payload_modes,
                                  const ComplexMatrix* target) {
  const ComplexMatrix raw = heralded_state(u, photons, pattern, payload_modes);
  ExtractionReport report;
  const double p = state_norm_squared(raw);
  report.probability = std::min(1.0, p);
  report.extracted = p > 0.0 ? ComplexMatrix(raw / std::sqrt(p)) : raw;
  attach_target(report, target);
  return report;
}

}  // namespace verify
}  // namespace photonsynth
