// Copyright 2026 The crystal-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CRYSTAL_FORGE_ACCEPTANCE_HPP_
#define CRYSTAL_FORGE_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "crystal_forge/crystal.hpp"

namespace crystal_forge {

struct SuiteOptions {
  std::uint64_t seed = 20261016;
  // Every tensor product the suite forms goes through this, so a fixture
  // can substitute a broken rule and watch the axiom criterion fail.
  TensorProduct tensor_product = tensor;
  // Largest Weyl dimension visited by the crystal sweep.
  std::uint64_t sweep_max_dimension = 5000;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

SuiteReport run_acceptance_suite(const SuiteOptions& options = {});

// "PASS  5  crystal/tensor axioms  (12.345 s)  detail", one line each.
std::string format_report(const SuiteReport& report);
// {"schema": ..., "passed": bool, "criteria": [{number, name, passed,
//  seconds, detail}]}
std::string report_json(const SuiteReport& report);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_ACCEPTANCE_HPP_
