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

#include "photonsynth/acceptance.hpp"

#include "photonsynth/error.hpp"
#include "photonsynth/fock.hpp"
#include "photonsynth/gates.hpp"
#include "photonsynth/herald.hpp"
#include "photonsynth/linalg.hpp"
#include "photonsynth/postselect.hpp"
#include "photonsynth/random.hpp"
#include "photonsynth/two_photon.hpp"
#include "photonsynth/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

namespace photonsynth::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFidelityFloor = 1.0 - 1e-9;

/// Sum over all n! permutations; independent of the Ryser path.
Complex naive_permanent(const ComplexMatrix& m) {
  const auto n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= m(i, perm[static_cast<std::size_t>(i)]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

CriterionResult timed(int id, std::string name, double limit,
                      const std::function<bool(std::ostringstream&)>& body) {
  CriterionResult result;
  result.id = id;
  result.name = std::move(name);
  result.time_limit = limit;
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "unexpected exception: " << e.what();
    ok = false;
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds >= limit) {
    detail << "; runtime " << result.seconds << " s exceeds " << limit << " s";
    ok = false;
  }
  result.passed = ok;
  result.detail = detail.str();
  return result;
}

struct HeraldCase {
  TwoPhotonState target;
  int rank;
  bool diagonal;
};

std::vector<HeraldCase> herald_cases(std::uint64_t seed) {
  random::Rng rng(seed);
  std::vector<HeraldCase> cases;
  for (int rank = 2; rank <= 4; ++rank) {
    for (int trial = 0; trial < 12; ++trial) {
      const int modes = random::uniform_int(rank, 6, rng);
      const bool diagonal = trial % 2 == 0;
      TwoPhotonState s = diagonal ? random::diagonal_state_of_rank(modes, rank, rng)
                                  : random::state_of_rank(modes, rank, rng);
      cases.push_back({std::move(s), rank, diagonal});
    }
  }
  const ComplexMatrix bell = ComplexMatrix::Identity(2, 2) / std::numbers::sqrt2;
  cases.push_back({from_qudit_target(QuditTarget(bell)), 4, false});
  return cases;
}

}  // namespace

CriterionResult cz_recovery(const Config&) {
  return timed(1, "CZ recovery (n = 2, phi = pi)", 1.0, [](std::ostringstream& out) {
    const gates::CnzConstruction gate = gates::build_cnz(2, kPi);
    const double p = gate.result.success_probability;
    const bool p_ok = std::abs(p - 1.0 / 9.0) <= 1e-9;
    const bool verified = gates::verify_cnz(gate.result, 2, kPi, 1e-9);
    out << "p_s = " << p << " (|p_s - 1/9| = " << std::abs(p - 1.0 / 9.0)
        << "), verify_cnz = " << (verified ? "true" : "false");
    return p_ok && verified;
  });
}

CriterionResult multi_controlled_phase(const Config&) {
  return timed(2, "C^2Z and C^3Z over phi in {pi/4, pi/2, pi}", 10.0, [](std::ostringstream& out) {
    bool ok = true;
    double worst_formula = 0.0;
    double worst_root = 0.0;
    int checked = 0;
    for (int n : {3, 4}) {
      for (double phi : {kPi / 4.0, kPi / 2.0, kPi}) {
        const gates::CnzConstruction gate = gates::build_cnz(n, phi);
        const double p = gate.result.success_probability;
        if (!gates::verify_cnz(gate.result, n, phi, 1e-9)) {
          ok = false;
          out << "verify_cnz failed for n=" << n << " phi=" << phi << "; ";
        }
        worst_formula =
            std::max(worst_formula, std::abs(p - gates::cnz_success_probability(n, phi)));
        for (int j = 0; j < n; ++j) {
          const Complex root = gate.spec.alpha * std::polar(1.0, 2.0 * kPi * j / n);
          const double p_root = gates::build_cnz(n, phi, root).result.success_probability;
          worst_root = std::max(worst_root, std::abs(p_root - p));
        }
        ++checked;
      }
    }
    ok = ok && worst_formula <= 1e-10 && worst_root <= 1e-12;
    out << checked << " gates; max |p_s - closed form| = " << worst_formula
        << ", max root-choice spread = " << worst_root;
    return ok;
  });
}

CriterionResult postselect_iff(const Config& config) {
  return timed(3, "post-selection iff rank(C) <= rank(S_in), 200 pairs", 60.0,
               [&](std::ostringstream& out) {
    random::Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    int successes = 0;
    int infeasible = 0;
    int wrong = 0;
    double worst_fid = 1.0;
    for (int trial = 0; trial < 200; ++trial) {
      const int r = random::uniform_int(1, 4, rng);
      const int modes = random::uniform_int(std::max(r, 2), 6, rng);
      const int d1 = random::uniform_int(1, 4, rng);
      const int d2 = random::uniform_int(1, 4, rng);
      const int k = random::uniform_int(1, std::min(d1, d2), rng);
      const TwoPhotonState s_in = random::state_of_rank(modes, r, rng);
      const QuditTarget target = random::qudit_target(d1, d2, k, rng);
      const bool expect = k <= r;
      try {
        const SynthesisResult res = postselect::synthesize(s_in, target);
        const verify::ExtractionReport report = verify::extract_postselected(
            res.unitary.matrix(), s_in, d1, d2, &target.matrix());
        const double fid = report.fidelity_vs_target.value_or(0.0);
        worst_fid = std::min(worst_fid, fid);
        if (!expect || !(fid > kFidelityFloor) || !(res.success_probability > 0.0)) ++wrong;
        ++successes;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InfeasibleRank || expect) ++wrong;
        ++infeasible;
      }
    }
    out << successes << " synthesized, " << infeasible << " infeasible, " << wrong
        << " disagreements; min fidelity = " << worst_fid;
    return wrong == 0 && successes > 0 && infeasible > 0;
  });
}

CriterionResult herald_iff(const Config& config) {
  return timed(4, "heralding iff n >= rank(S_out), incl. Bell pair", 60.0,
               [&](std::ostringstream& out) {
    int wrong = 0;
    int bell_ok = 0;
    double worst_fid = 1.0;
    const auto cases = herald_cases(config.seed);
    for (const auto& c : cases) {
      try {
        const SynthesisResult res = herald::synthesize(c.target, c.rank);
        const verify::ExtractionReport report = verify::extract_heralded(
            res.unitary.matrix(), c.rank, *res.herald, c.target.modes(), &c.target.matrix());
        const double fid = report.fidelity_vs_target.value_or(0.0);
        worst_fid = std::min(worst_fid, fid);
        if (!(fid > kFidelityFloor) || !(res.success_probability > 0.0)) ++wrong;
        if (c.rank == 4 && c.target.modes() == 4 && res.herald->signal == std::vector<int>{2} &&
            fid > kFidelityFloor) {
          ++bell_ok;
        }
      } catch (const Error& e) {
        out << "n = rank failed: " << e.what() << "; ";
        ++wrong;
      }
      try {
        herald::synthesize(c.target, c.rank - 1);
        ++wrong;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InfeasibleRank) ++wrong;
      }
    }
    out << cases.size() << " targets, " << wrong << " failures, min fidelity = " << worst_fid
        << ", Bell pair with signal (2): " << (bell_ok > 0 ? "ok" : "missing");
    return wrong == 0 && bell_ok > 0;
  });
}

CriterionResult herald_identity(const Config& config) {
  return timed(5, "Per(l_i, l_j, l_s) = sqrt(2 s!) D_ii delta_ij", 60.0,
               [&](std::ostringstream& out) {
    double worst = 0.0;
    const auto cases = herald_cases(config.seed);
    for (const auto& c : cases) {
      for (int n = c.rank; n <= c.rank + 1; ++n) {
        const herald::Construction built = herald::construct(c.target, n);
        worst = std::max(worst, herald::identity_residual(built, n));
      }
    }
    out << 2 * cases.size() << " constructions, max residual = " << worst;
    return worst <= 1e-9;
  });
}

CriterionResult linear_algebra(const Config& config) {
  return timed(6, "Takagi (500) and unitary extension (200)", 60.0,
               [&](std::ostringstream& out) {
    random::Rng rng(config.seed + 6);
    double worst_rec = 0.0;
    double worst_unit = 0.0;
    double min_d = 0.0;
    double worst_sv = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const int m = random::uniform_int(1, 8, rng);
      ComplexMatrix s;
      if (trial % 5 == 4) {
        s = random::state_of_rank(m, random::uniform_int(1, m, rng), rng).matrix();
      } else {
        s = random::symmetric(m, rng);
      }
      const linalg::TakagiFactorization t = linalg::takagi(s);
      worst_rec = std::max(worst_rec, (t.v.transpose() * s * t.v - t.d()).norm());
      worst_unit = std::max(worst_unit, linalg::unitarity_error(t.v));
      min_d = std::min(min_d, t.diagonal.minCoeff());
      worst_sv = std::max(worst_sv, (t.diagonal - linalg::singular_values(s)).cwiseAbs().maxCoeff());
    }
    double worst_ext_unit = 0.0;
    double worst_block = 0.0;
    bool sizes_ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      const int m1 = random::uniform_int(1, 6, rng);
      const int m2 = random::uniform_int(1, 6, rng);
      const ComplexMatrix a = random::complex_gaussian(m1, m2, rng);
      const linalg::UnitaryExtension ext = linalg::unitary_extension(a);
      worst_ext_unit = std::max(worst_ext_unit, linalg::unitarity_error(ext.u));
      worst_block =
          std::max(worst_block, (ext.u.topLeftCorner(m1, m2) - a / ext.sigma1).norm());
      sizes_ok = sizes_ok && ext.u.rows() <= m1 + m2;
    }
    out << "takagi: max |V^T S V - D| = " << worst_rec << ", max |V^dagger V - I| = "
        << worst_unit << ", min D = " << min_d << ", max |D - sigma| = " << worst_sv
        << "; extension: max unitarity = " << worst_ext_unit << ", max block = " << worst_block;
    return worst_rec < 1e-9 && worst_unit < 1e-10 && min_d >= -1e-12 && worst_sv < 1e-9 &&
           worst_ext_unit < 1e-10 && worst_block < 1e-10 && sizes_ok;
  });
}

CriterionResult fock_oracle(const Config& config) {
  return timed(7, "Fock oracle: Ryser vs naive, HOM, probability sums", 60.0,
               [&](std::ostringstream& out) {
    random::Rng rng(config.seed + 7);
    double worst_rel = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + trial % 6;
      const ComplexMatrix m = random::complex_gaussian(n, n, rng);
      const Complex fast = fock::permanent(m);
      const Complex slow = naive_permanent(m);
      worst_rel = std::max(worst_rel, std::abs(fast - slow) / std::abs(slow));
    }

    ComplexMatrix bs(2, 2);
    bs << 1.0, 1.0, 1.0, -1.0;
    bs /= std::numbers::sqrt2;
    const double hom = std::abs(fock::amplitude(bs, FockState{1, 1}, FockState{1, 1}));

    double worst_sum = 0.0;
    for (int m = 2; m <= 4; ++m) {
      const ComplexMatrix u = random::unitary(m, rng);
      for (int n = 1; n <= 3; ++n) {
        const auto basis = fock::basis(m, n);
        for (const auto& in : basis) {
          double total = 0.0;
          for (const auto& o : basis) total += std::norm(fock::amplitude(u, o, in));
          worst_sum = std::max(worst_sum, std::abs(total - 1.0));
        }
      }
    }
    out << "max relative permanent error = " << worst_rel << ", HOM |amp| = " << hom
        << ", max |sum p - 1| = " << worst_sum;
    return worst_rel < 1e-9 && hom <= 1e-12 && worst_sum <= 1e-9;
  });
}

CriterionResult invariance(const Config& config) {
  return timed(8, "rank and norm invariant under 100 unitaries per state", 60.0,
               [&](std::ostringstream& out) {
    random::Rng rng(config.seed + 8);
    int rank_changes = 0;
    double worst_norm = 0.0;
    int states = 0;
    for (int m = 2; m <= 6; ++m) {
      for (int r = 1; r <= m; r += 2) {
        const TwoPhotonState s = random::state_of_rank(m, r, rng);
        const int rank = state_rank(s);
        for (int k = 0; k < 100; ++k) {
          const Interferometer u(random::unitary(m, rng));
          const ComplexMatrix evolved = fock::evolve_two_photon(u, s.matrix());
          if (linalg::numerical_rank(evolved) != rank) ++rank_changes;
          worst_norm = std::max(worst_norm, std::abs(state_norm_squared(evolved) - 1.0));
        }
        ++states;
      }
    }
    out << states << " states, " << rank_changes << " rank changes, max |2Tr(S^dagger S) - 1| = "
        << worst_norm;
    return rank_changes == 0 && worst_norm < 1e-10;
  });
}

std::vector<CriterionResult> run_all(const Config& config) {
  return {cz_recovery(config),    multi_controlled_phase(config), postselect_iff(config),
          herald_iff(config),     herald_identity(config),        linear_algebra(config),
          fock_oracle(config),    invariance(config)};
}

std::string format_line(const CriterionResult& result) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", result.seconds, result.time_limit);
  std::ostringstream line;
  line << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] " << result.name << " ("
       << timing << ") " << result.detail;
  return line.str();
}

}  // namespace photonsynth::acceptance
