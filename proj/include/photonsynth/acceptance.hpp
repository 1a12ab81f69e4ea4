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

#include <cstdint>
#include <string>
#include <vector>

namespace photonsynth::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

struct Config {
  std::uint64_t seed = 20241019;
};

CriterionResult cz_recovery(const Config& config);
CriterionResult multi_controlled_phase(const Config& config);
CriterionResult postselect_iff(const Config& config);
CriterionResult herald_iff(const Config& config);
CriterionResult herald_identity(const Config& config);
CriterionResult linear_algebra(const Config& config);
CriterionResult fock_oracle(const Config& config);
CriterionResult invariance(const Config& config);

std::vector<CriterionResult> run_all(const Config& config);

/// One "PASS|FAIL [id] name (seconds) detail" line per criterion.
std::string format_line(const CriterionResult& result);

}  // namespace photonsynth::acceptance
