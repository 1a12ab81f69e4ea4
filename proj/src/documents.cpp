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

#include "photonsynth/documents.hpp"

#include "photonsynth/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace photonsynth::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const Json& require(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(join(path, key), "missing");
  return *it;
}

long long require_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<long long>();
}

double require_number(const Json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "not finite");
  return v;
}

Complex parse_complex(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected a [re, im] pair");
  return {require_number(j[0], field + "[0]"), require_number(j[1], field + "[1]")};
}

Json complex_json(Complex z) {
  return Json::array({z.real(), z.imag()});
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(complex_json(m(i, j)));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json to_json(const MatrixDocument& doc) {
  Json j = to_json(doc.matrix);
  if (doc.label) j["label"] = *doc.label;
  if (doc.tolerance) j["tolerance"] = *doc.tolerance;
  if (doc.encoding) j["encoding"] = *doc.encoding;
  return j;
}

MatrixDocument parse_matrix(const Json& j, const std::string& path) {
  const long long rows = require_int(require(j, path, "rows"), join(path, "rows"));
  const long long cols = require_int(require(j, path, "cols"), join(path, "cols"));
  if (rows <= 0) fail(join(path, "rows"), "must be positive");
  if (cols <= 0) fail(join(path, "cols"), "must be positive");
  const Json& data = require(j, path, "data");
  const std::string data_path = join(path, "data");
  if (!data.is_array()) fail(data_path, "expected an array");
  if (static_cast<long long>(data.size()) != rows * cols) {
    fail(data_path, "has " + std::to_string(data.size()) + " entries, expected rows*cols = " +
                        std::to_string(rows * cols));
  }
  MatrixDocument doc;
  doc.matrix.resize(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) {
    doc.matrix(k / cols, k % cols) =
        parse_complex(data[static_cast<std::size_t>(k)], data_path + "[" + std::to_string(k) + "]");
  }
  if (const auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) fail(join(path, "label"), "expected a string");
    doc.label = it->get<std::string>();
  }
  if (const auto it = j.find("tolerance"); it != j.end()) {
    doc.tolerance = require_number(*it, join(path, "tolerance"));
  }
  if (const auto it = j.find("encoding"); it != j.end()) {
    if (!it->is_string() || (*it != "state" && *it != "qudit")) {
      fail(join(path, "encoding"), "expected \"state\" or \"qudit\"");
    }
    doc.encoding = it->get<std::string>();
  }
  return doc;
}

Json to_json(const SynthesisDocument& doc) {
  Json j;
  j["kind"] = std::string(to_string(doc.kind));
  j["unitary"] = to_json(doc.unitary);
  j["relevant_modes"] = doc.relevant_modes;
  j["aux_modes"] = doc.aux_modes;
  if (doc.herald) {
    j["herald"] = Json{{"modes", doc.herald->modes()}, {"signal", doc.herald->signal}};
  } else {
    j["herald"] = nullptr;
  }
  j["alpha"] = complex_json(doc.alpha);
  j["success_probability"] = doc.success_probability;
  j["target"] = to_json(doc.target);
  if (doc.input_state) j["input_state"] = to_json(*doc.input_state);
  if (doc.photons) j["photons"] = *doc.photons;
  if (doc.n) j["n"] = *doc.n;
  if (doc.phi) j["phi"] = *doc.phi;
  return j;
}

SynthesisDocument parse_synthesis(const Json& j, double unitary_tol) {
  SynthesisDocument doc;
  const Json& kind = require(j, "", "kind");
  if (!kind.is_string()) fail("kind", "expected a string");
  try {
    doc.kind = synthesis_kind_from_string(kind.get<std::string>());
  } catch (const Error&) {
    fail("kind", "expected one of postselect, herald, cnz");
  }

  doc.unitary = parse_matrix(require(j, "", "unitary"), "unitary").matrix;
  if (doc.unitary.rows() != doc.unitary.cols()) fail("unitary", "must be square");
  const double err = linalg::unitarity_error(doc.unitary);
  if (!(err < unitary_tol)) {
    fail("unitary", "not unitary (|U^dagger U - I| = " + std::to_string(err) + ")");
  }
  doc.relevant_modes =
      static_cast<int>(require_int(require(j, "", "relevant_modes"), "relevant_modes"));
  doc.aux_modes = static_cast<int>(require_int(require(j, "", "aux_modes"), "aux_modes"));
  doc.alpha = parse_complex(require(j, "", "alpha"), "alpha");
  doc.success_probability =
      require_number(require(j, "", "success_probability"), "success_probability");
  doc.target = parse_matrix(require(j, "", "target"), "target").matrix;

  if (const auto it = j.find("herald"); it != j.end() && !it->is_null()) {
    const long long modes = require_int(require(*it, "herald", "modes"), "herald.modes");
    const Json& signal = require(*it, "herald", "signal");
    if (!signal.is_array()) fail("herald.signal", "expected an array");
    HeraldPattern pattern;
    for (std::size_t k = 0; k < signal.size(); ++k) {
      const long long s = require_int(signal[k], "herald.signal[" + std::to_string(k) + "]");
      if (s <= 0) fail("herald.signal[" + std::to_string(k) + "]", "must be positive");
      pattern.signal.push_back(static_cast<int>(s));
    }
    if (modes != pattern.modes()) fail("herald.modes", "does not match the signal length");
    doc.herald = std::move(pattern);
  }

  switch (doc.kind) {
    case SynthesisKind::PostSelect:
      doc.input_state = parse_matrix(require(j, "", "input_state"), "input_state").matrix;
      break;
    case SynthesisKind::Herald: {
      doc.photons = static_cast<int>(require_int(require(j, "", "photons"), "photons"));
      if (!doc.herald) fail("herald", "required for kind herald");
      break;
    }
    case SynthesisKind::Cnz:
      doc.n = static_cast<int>(require_int(require(j, "", "n"), "n"));
      doc.phi = require_number(require(j, "", "phi"), "phi");
      break;
  }
  return doc;
}

SynthesisDocument make_document(const SynthesisResult& result, const ComplexMatrix& target) {
  SynthesisDocument doc;
  doc.kind = result.kind;
  doc.unitary = result.unitary.matrix();
  doc.relevant_modes = result.relevant_modes;
  doc.aux_modes = result.aux_modes;
  doc.herald = result.herald;
  doc.alpha = Complex(result.scale_alpha, 0.0);
  doc.success_probability = result.success_probability;
  doc.target = target;
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace photonsynth::io
