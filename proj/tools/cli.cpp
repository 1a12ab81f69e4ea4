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

#include "cli.hpp"

#include "photonsynth/acceptance.hpp"
#include "photonsynth/documents.hpp"
#include "photonsynth/error.hpp"
#include "photonsynth/gates.hpp"
#include "photonsynth/herald.hpp"
#include "photonsynth/postselect.hpp"
#include "photonsynth/two_photon.hpp"
#include "photonsynth/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

namespace photonsynth::cli {

namespace {

struct Options {
  std::string input;
  std::string target;
  std::string state;
  std::string output;
  int photons = 0;
  int n = 2;
  double phi = 0.0;
  double tol = 1e-9;
  bool tol_given = false;
  std::uint64_t seed = acceptance::Config{}.seed;
};

void emit(const io::Json& j, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + opt.output + "'");
  file << j.dump(2) << '\n';
}

io::MatrixDocument load_matrix(const std::string& path) {
  return io::parse_matrix(io::read_json_file(path));
}

/// A matrix document read as a two-photon state: "encoding": "qudit" marks a
/// d1 x d2 qudit matrix C, anything else is taken as S. Both are normalized.
TwoPhotonState load_state(const std::string& path) {
  const io::MatrixDocument doc = load_matrix(path);
  if (doc.encoding && *doc.encoding == "qudit") {
    const double norm = doc.matrix.norm();
    if (norm == 0.0) throw Error(ErrorCode::ZeroState, "qudit matrix in '" + path + "' is zero");
    return from_qudit_target(QuditTarget(doc.matrix / norm));
  }
  return normalize(doc.matrix);
}

QuditTarget load_qudit(const std::string& path) {
  const io::MatrixDocument doc = load_matrix(path);
  const double norm = doc.matrix.norm();
  if (norm == 0.0) throw Error(ErrorCode::ZeroState, "qudit matrix in '" + path + "' is zero");
  return QuditTarget(doc.matrix / norm);
}

int cmd_rank(const Options& opt, std::ostream& out) {
  const TwoPhotonState s = load_state(opt.state);
  emit(io::Json(state_rank(s, opt.tol_given ? opt.tol : tolerance::kRank)), opt, out);
  return kSuccess;
}

int cmd_takagi(const Options& opt, std::ostream& out) {
  const io::MatrixDocument doc = load_matrix(opt.input);
  const linalg::TakagiFactorization t = linalg::takagi(doc.matrix);
  io::Json j;
  j["v"] = io::to_json(t.v);
  j["d"] = std::vector<double>(t.diagonal.begin(), t.diagonal.end());
  j["reconstruction_error"] = (t.v.transpose() * doc.matrix * t.v - t.d()).norm();
  emit(j, opt, out);
  return kSuccess;
}

int cmd_synth_postselect(const Options& opt, std::ostream& out) {
  const TwoPhotonState s_in = load_state(opt.input);
  const QuditTarget target = load_qudit(opt.target);
  const SynthesisResult res = postselect::synthesize(s_in, target);
  io::SynthesisDocument doc = io::make_document(res, target.matrix());
  doc.input_state = s_in.matrix();
  emit(io::to_json(doc), opt, out);
  return kSuccess;
}

int cmd_synth_herald(const Options& opt, std::ostream& out) {
  const TwoPhotonState s_out = load_state(opt.target);
  const SynthesisResult res = herald::synthesize(s_out, opt.photons);
  io::SynthesisDocument doc = io::make_document(res, s_out.matrix());
  doc.photons = opt.photons;
  emit(io::to_json(doc), opt, out);
  return kSuccess;
}

int cmd_gate_cnz(const Options& opt, std::ostream& out) {
  const gates::CnzConstruction gate = gates::build_cnz(opt.n, opt.phi);
  io::SynthesisDocument doc = io::make_document(gate.result, gates::cyclic_block(opt.n, gate.spec.alpha));
  doc.alpha = gate.spec.alpha;
  doc.n = opt.n;
  doc.phi = opt.phi;
  io::Json j = io::to_json(doc);
  j["sigma_max"] = gate.spec.sigma_max;
  emit(j, opt, out);
  return kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const io::SynthesisDocument doc = io::parse_synthesis(io::read_json_file(opt.input));
  bool verified = false;
  double probability = 0.0;
  std::optional<double> fid;
  switch (doc.kind) {
    case SynthesisKind::PostSelect: {
      const TwoPhotonState s_in = normalize(*doc.input_state);
      const auto report = verify::extract_postselected(doc.unitary, s_in, doc.target.rows(),
                                                       doc.target.cols(), &doc.target);
      probability = report.probability;
      fid = report.fidelity_vs_target;
      verified = *fid > 1.0 - opt.tol;
      break;
    }
    case SynthesisKind::Herald: {
      const auto report = verify::extract_heralded(doc.unitary, *doc.photons, *doc.herald,
                                                   doc.target.rows(), &doc.target);
      probability = report.probability;
      fid = report.fidelity_vs_target;
      verified = *fid > 1.0 - opt.tol;
      break;
    }
    case SynthesisKind::Cnz: {
      const int modes = static_cast<int>(doc.unitary.rows());
      const FockState zero = gates::logical_state(*doc.n, 0, modes);
      probability = std::norm(fock::amplitude(doc.unitary, zero, zero));
      verified = gates::verify_cnz(doc.unitary, *doc.n, *doc.phi, probability, opt.tol);
      break;
    }
  }
  verified = verified && std::abs(probability - doc.success_probability) <= 1e-9;
  io::Json j;
  j["kind"] = std::string(to_string(doc.kind));
  j["verified"] = verified;
  j["success_probability"] = probability;
  if (fid) j["fidelity"] = *fid;
  emit(j, opt, out);
  return verified ? kSuccess : kVerificationFailure;
}

int cmd_selftest(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto results = acceptance::run_all(acceptance::Config{opt.seed});
  io::Json summary = io::Json::array();
  bool all = true;
  for (const auto& r : results) {
    err << acceptance::format_line(r) << '\n';
    summary.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    all = all && r.passed;
  }
  emit(io::Json{{"seed", opt.seed}, {"passed", all}, {"criteria", summary}}, opt, out);
  return all ? kSuccess : kVerificationFailure;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InfeasibleRank:
    case ErrorCode::SupportMismatch:
      return kInfeasible;
    case ErrorCode::VerificationFailure:
    case ErrorCode::ConvergenceFailure:
      return kVerificationFailure;
    default:
      return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-photon linear-optical state synthesis and verification", "photonsynth"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "Write JSON here instead of stdout");
    sub->add_option("--tol", opt.tol, "Verification tolerance")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { opt.tol_given = true; });
    sub->add_option("--seed", opt.seed, "Seed for randomized suites");
  };

  auto* rank = app.add_subcommand("rank", "Rank of a two-photon state");
  rank->add_option("--state", opt.state, "State matrix document")->required();
  add_common(rank);

  auto* takagi = app.add_subcommand("takagi", "Takagi factorization D = V^T S V");
  takagi->add_option("--input", opt.input, "Complex symmetric matrix document")->required();
  add_common(takagi);

  auto* ps = app.add_subcommand("synth-postselect", "Post-selected two-qudit preparation");
  ps->add_option("--input", opt.input, "Input two-photon state S_in")->required();
  ps->add_option("--target", opt.target, "Target qudit matrix C")->required();
  add_common(ps);

  auto* hs = app.add_subcommand("synth-herald", "Heralded preparation from single photons");
  hs->add_option("--target", opt.target, "Target two-photon state S_out")->required();
  hs->add_option("--photons", opt.photons, "Number of single photons")->required();
  add_common(hs);

  auto* gate = app.add_subcommand("gate-cnz", "Post-selected C^{n-1}Z(phi) gate");
  gate->add_option("--n", opt.n, "Number of qubits")->required();
  gate->add_option("--phi", opt.phi, "Phase in radians")->required();
  add_common(gate);

  auto* ver = app.add_subcommand("verify", "Re-verify a synthesis document");
  ver->add_option("--input", opt.input, "Synthesis document")->required();
  add_common(ver);

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  add_common(self);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (rank->parsed()) return cmd_rank(opt, out);
    if (takagi->parsed()) return cmd_takagi(opt, out);
    if (ps->parsed()) return cmd_synth_postselect(opt, out);
    if (hs->parsed()) return cmd_synth_herald(opt, out);
    if (gate->parsed()) return cmd_gate_cnz(opt, out);
    if (ver->parsed()) return cmd_verify(opt, out);
    if (self->parsed()) return cmd_selftest(opt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace photonsynth::cli
