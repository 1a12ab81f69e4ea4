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

#include "photonsynth/fock.hpp"

#include "photonsynth/error.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace photonsynth {

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
  for (int n : occupations_) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative photon count");
  }
}

int FockState::photons() const noexcept {
  return std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

std::uint64_t FockState::factorial_product() const {
  std::uint64_t out = 1;
  for (int n : occupations_) out *= fock::factorial(n);
  return out;
}

Interferometer::Interferometer(ComplexMatrix u, double tol) : u_(std::move(u)) {
  linalg::require_finite(u_, "interferometer");
  if (u_.rows() != u_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "interferometer matrix must be square");
  }
  const double err = linalg::unitarity_error(u_);
  if (!(err < tol)) {
    throw Error(ErrorCode::NotUnitary,
                "interferometer is not unitary (|U^dagger U - I| = " + std::to_string(err) + ")");
  }
}

namespace fock {

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxPhotons) {
    throw Error(ErrorCode::TooLarge, "factorial argument out of range: " + std::to_string(n));
  }
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

Complex permanent(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "permanent requires a square matrix");
  }
  const int n = static_cast<int>(m.rows());
  if (n > kMaxPhotons) {
    throw Error(ErrorCode::TooLarge, "permanent of a " + std::to_string(n) + "x" +
                                         std::to_string(n) + " matrix exceeds the size limit");
  }
  if (n == 0) return {1.0, 0.0};

  // per(M) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} M_ij, with S
  // enumerated in Gray-code order so each step flips one column.
  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{});
  Complex total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    gray ^= std::uint64_t{1} << j;
    const double sign_flip = (gray >> j) & 1U ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += sign_flip * m(i, j);
    Complex prod = row_sums[0];
    for (int i = 1; i < n; ++i) prod *= row_sums[static_cast<std::size_t>(i)];
    total += (std::popcount(gray) % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

ComplexMatrix repeated_submatrix(const ComplexMatrix& u, const FockState& out,
                                 const FockState& in) {
  if (static_cast<Eigen::Index>(in.modes()) != u.rows() ||
      static_cast<Eigen::Index>(out.modes()) != u.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Fock state length does not match the mode count");
  }
  const int n = in.photons();
  if (n != out.photons()) {
    throw Error(ErrorCode::PhotonNumberMismatch,
                "input has " + std::to_string(n) + " photons, output has " +
                    std::to_string(out.photons()));
  }
  if (n > kMaxPhotons) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " photons exceed the limit");
  }
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  rows.reserve(static_cast<std::size_t>(n));
  cols.reserve(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < in.modes(); ++j) {
    for (int r = 0; r < in[j]; ++r) rows.push_back(static_cast<Eigen::Index>(j));
  }
  for (std::size_t i = 0; i < out.modes(); ++i) {
    for (int r = 0; r < out[i]; ++r) cols.push_back(static_cast<Eigen::Index>(i));
  }
  ComplexMatrix sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      sub(r, c) = u(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
    }
  }
  return sub;
}

Complex amplitude(const ComplexMatrix& u, const FockState& out, const FockState& in) {
  const ComplexMatrix sub = repeated_submatrix(u, out, in);
  const double norm = std::sqrt(static_cast<double>(out.factorial_product())) *
                      std::sqrt(static_cast<double>(in.factorial_product()));
  return permanent(sub) / norm;
}

Complex amplitude(const Interferometer& u, const FockState& out, const FockState& in) {
  return amplitude(u.matrix(), out, in);
}

ComplexMatrix evolve_two_photon(const ComplexMatrix& u, const ComplexMatrix& s) {
  if (s.rows() != s.cols() || u.rows() != s.rows() || u.cols() != s.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "state and interferometer dimensions differ");
  }
  const ComplexMatrix out = u.transpose() * s * u;
  return (out + out.transpose()) / 2.0;
}

ComplexMatrix evolve_two_photon(const Interferometer& u, const ComplexMatrix& s) {
  return evolve_two_photon(u.matrix(), s);
}

namespace {
void fill_basis(int mode, int remaining, std::vector<int>& current, std::vector<FockState>& out) {
  const int modes = static_cast<int>(current.size());
  if (mode == modes - 1) {
    current[static_cast<std::size_t>(mode)] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current[static_cast<std::size_t>(mode)] = k;
    fill_basis(mode + 1, remaining - k, current, out);
  }
}
}  // namespace

std::vector<FockState> basis(int modes, int photons) {
  if (modes <= 0 || photons < 0) {
    throw Error(ErrorCode::InvalidArgument, "basis needs modes > 0 and photons >= 0");
  }
  std::vector<FockState> out;
  std::vector<int> current(static_cast<std::size_t>(modes), 0);
  fill_basis(0, photons, current, out);
  return out;
}

}  // namespace fock
}  // namespace photonsynth
