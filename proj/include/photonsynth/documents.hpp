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

#pragma once

#include "photonsynth/synthesis.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace photonsynth::io {

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order, with
/// optional "label", "tolerance" and "encoding" ("state" or "qudit").
struct MatrixDocument {
  ComplexMatrix matrix;
  std::optional<std::string> label;
  std::optional<double> tolerance;
  std::optional<std::string> encoding;
};

Json to_json(const ComplexMatrix& m);
Json to_json(const MatrixDocument& doc);

/// Throws ParseError naming the offending field, prefixed by `path`.
MatrixDocument parse_matrix(const Json& j, const std::string& path = "");

struct SynthesisDocument {
  SynthesisKind kind = SynthesisKind::PostSelect;
  ComplexMatrix unitary;
  int relevant_modes = 0;
  int aux_modes = 0;
  std::optional<HeraldPattern> herald;
  Complex alpha{};
  double success_probability = 0.0;
  ComplexMatrix target;
  /// postselect: the input two-photon state.
  std::optional<ComplexMatrix> input_state;
  /// herald: number of single photons injected into modes 0..n-1.
  std::optional<int> photons;
  /// cnz: qubit count and phase.
  std::optional<int> n;
  std::optional<double> phi;
};

Json to_json(const SynthesisDocument& doc);

/// Parses and checks kind-specific fields and unitarity of "unitary".
SynthesisDocument parse_synthesis(const Json& j, double unitary_tol = tolerance::kUnitarity);

SynthesisDocument make_document(const SynthesisResult& result, const ComplexMatrix& target);

Json read_json_file(const std::string& path);

}  // namespace photonsynth::io
