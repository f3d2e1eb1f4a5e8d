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

// The acceptance harness must notice a broken tensor rule.

#include <vector>

#include "crystal_forge/acceptance.hpp"
#include "crystal_forge/crystal.hpp"
#include "gtest/gtest.h"

namespace crystal_forge {
namespace {

// tensor() with the e-condition flipped from φ(a) ≥ ε(b) to φ(a) > ε(b), so
// that e and f no longer agree on the tie φ(a) = ε(b).
CrystalGraph flipped_tensor(const CrystalGraph& left,
                            const CrystalGraph& right) {
  const int rank = left.rank();
  const int nb = right.size();
  const std::size_t cells =
      static_cast<std::size_t>(left.size()) * nb * rank;
  std::vector<int> weights(cells);
  std::vector<int> f_map(cells, kAbsent);
  std::vector<int> e_map(cells, kAbsent);
  std::size_t cell = 0;
  for (int a = 0; a < left.size(); ++a) {
    for (int b = 0; b < nb; ++b) {
      for (int i = 0; i < rank; ++i, ++cell) {
        weights[cell] = left.weight_span(a)[i] + right.weight_span(b)[i];
        const int phi_a = left.phi(a, i);
        const int eps_b = right.epsilon(b, i);
        if (phi_a > eps_b) {
          const int ea = left.e(a, i);
          if (ea != kAbsent) e_map[cell] = ea * nb + b;
        } else {
          const int eb = right.e(b, i);
          if (eb != kAbsent) e_map[cell] = a * nb + eb;
        }
        if (phi_a > eps_b) {
          const int fa = left.f(a, i);
          if (fa != kAbsent) f_map[cell] = fa * nb + b;
        } else {
          const int fb = right.f(b, i);
          if (fb != kAbsent) f_map[cell] = a * nb + fb;
        }
      }
    }
  }
  return CrystalGraph::from_maps(left.diagram(), std::move(weights),
                                 std::move(f_map), std::move(e_map));
}

const CriterionResult& criterion(const SuiteReport& report, int number) {
  for (const CriterionResult& r : report.results) {
    if (r.number == number) return r;
  }
  throw std::out_of_range("no criterion " + std::to_string(number));
}

TEST(AcceptanceFixtureTest, FlippedRuleFailsTensorAxioms) {
  SuiteOptions options;
  options.tensor_product = flipped_tensor;
  options.sweep_max_dimension = 30;
  const SuiteReport report = run_acceptance_suite(options);
  ASSERT_EQ(report.results.size(), 10u);
  const CriterionResult& c5 = criterion(report, 5);
  EXPECT_EQ(c5.name, "crystal/tensor axioms");
  EXPECT_FALSE(c5.passed);
  EXPECT_NE(c5.detail.find("inverse-maps"), std::string::npos) << c5.detail;
  EXPECT_FALSE(report.all_passed());
  for (const CriterionResult& r : report.results) EXPECT_GE(r.seconds, 0.0);
}

TEST(AcceptanceFixtureTest, CorrectRulePassesAtSmallScale) {
  SuiteOptions options;
  options.sweep_max_dimension = 30;
  const SuiteReport report = run_acceptance_suite(options);
  for (const CriterionResult& r : report.results) {
    EXPECT_TRUE(r.passed) << r.number << " " << r.name << ": " << r.detail;
  }
  EXPECT_NE(format_report(report).find("PASS   5  crystal/tensor axioms"),
            std::string::npos);
}

}  // namespace
}  // namespace crystal_forge
