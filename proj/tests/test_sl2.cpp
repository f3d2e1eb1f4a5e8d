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

#include <algorithm>
#include <vector>

#include "crystal_forge/decompose.hpp"
#include "crystal_forge/errors.hpp"
#include "crystal_forge/ls_path.hpp"
#include "crystal_forge/sl2.hpp"
#include "gtest/gtest.h"

namespace crystal_forge {
namespace {

TEST(Sl2CrystalTest, Examples) {
  const CrystalGraph c31 = sl2_crystal(3, 1);
  ASSERT_EQ(c31.size(), 2);
  EXPECT_EQ(c31.weight(0), (Weight{1}));
  EXPECT_EQ(c31.weight(1), (Weight{-1}));
  EXPECT_EQ(c31.epsilon(0, 0), 0);
  EXPECT_EQ(c31.phi(0, 0), 1);
  EXPECT_EQ(c31.epsilon(1, 0), 1);
  EXPECT_EQ(c31.phi(1, 0), 0);
  EXPECT_EQ(character(sl2_crystal(2, 0)),
            (std::vector<Weight>{{-2}, {0}, {2}}));
  EXPECT_EQ(sl2_crystal(1, 1).size(), 0);
  EXPECT_EQ(c31.labels().front(), "M(3,1,1)");
}

TEST(Sl2CrystalTest, StringLengthsMatchLabels) {
  for (int d = 0; d <= 8; ++d) {
    for (int v0 = 0; 2 * v0 <= d; ++v0) {
      const CrystalGraph c = sl2_crystal(d, v0);
      EXPECT_TRUE(verify_axioms(c).empty());
      for (int k = 0; k < c.size(); ++k) {
        const int v = v0 + k;
        EXPECT_EQ(c.epsilon(k, 0), v - v0);
        EXPECT_EQ(c.phi(k, 0), d - v - v0);
        EXPECT_TRUE((Sl2Component{d, v0, v}.nonempty()));
      }
      EXPECT_FALSE((Sl2Component{d, v0, v0 - 1}.nonempty()));
      EXPECT_FALSE((Sl2Component{d, v0, d - v0 + 1}.nonempty()));
    }
  }
}

TEST(Sl2Tau2Test, Examples) {
  EXPECT_EQ(sl2_tau2(2, 0, 1, 2, 0, 0), (Sl2Tau2{0, 1}));
  EXPECT_EQ(sl2_tau2(2, 0, 1, 2, 0, 1), (Sl2Tau2{1, 2}));
  EXPECT_EQ(sl2_tau2(2, 0, 2, 2, 0, 0), (Sl2Tau2{0, 2}));
  EXPECT_THROW(sl2_tau2(2, 1, 0, 2, 0, 0), DomainError);
  EXPECT_THROW(sl2_tau2(2, 0, 0, 2, 0, 3), DomainError);
}

TEST(Sl2MultRangeTest, Examples) {
  EXPECT_EQ(sl2_mult_range(2, 0, 2, 0), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(sl2_mult_range(1, 0, 1, 0), (std::vector<int>{0, 1}));
  EXPECT_EQ(sl2_mult_range(2, 1, 2, 1), (std::vector<int>{2}));
  EXPECT_THROW(sl2_mult_range(1, 1, 2, 0), DomainError);
  EXPECT_THROW(sl2_mult_range(2, -1, 2, 0), DomainError);
}

TEST(Sl2SNonemptyTest, Examples) {
  EXPECT_TRUE(sl2_S_nonempty(2, 0, 2, 0, 1));
  EXPECT_FALSE(sl2_S_nonempty(2, 0, 2, 0, 3));
  for (int d1 = 0; d1 <= 6; ++d1) {
    for (int v1 = 0; 2 * v1 <= d1; ++v1) {
      for (int d2 = 0; d2 <= 6; ++d2) {
        for (int v2 = 0; 2 * v2 <= d2; ++v2) {
          EXPECT_TRUE(sl2_S_nonempty(d1, v1, d2, v2, v1 + v2));
          const auto range = sl2_mult_range(d1, v1, d2, v2);
          for (int v = -1; v <= d1 + d2 + 1; ++v) {
            const bool in_range =
                std::find(range.begin(), range.end(), v) != range.end();
            EXPECT_EQ(sl2_S_nonempty(d1, v1, d2, v2, v), in_range);
          }
        }
      }
    }
  }
}

TEST(Sl2Property, ClebschGordanOracle) {
  // B(m) ⊗ B(n) = B(m+n) ⊕ B(m+n−2) ⊕ … ⊕ B(|m−n|).
  for (int d1 = 0; d1 <= 8; ++d1) {
    for (int v1 = 0; 2 * v1 <= d1; ++v1) {
      for (int d2 = 0; d2 <= 8; ++d2) {
        for (int v2 = 0; 2 * v2 <= d2; ++v2) {
          const int m = d1 - 2 * v1;
          const int n = d2 - 2 * v2;
          std::vector<int> expected;
          for (int top = m + n; top >= std::abs(m - n); top -= 2) {
            expected.push_back(top);
          }
          std::vector<int> from_range;
          for (int v0 : sl2_mult_range(d1, v1, d2, v2)) {
            from_range.push_back(d1 + d2 - 2 * v0);
          }
          EXPECT_EQ(from_range, expected);
        }
      }
    }
  }
}

TEST(Sl2Property, Tau2MatchesTensorRule) {
  for (int d1 = 0; d1 <= 6; ++d1) {
    for (int v1 = 0; 2 * v1 <= d1; ++v1) {
      for (int d2 = 0; d2 <= 6; ++d2) {
        for (int v2 = 0; 2 * v2 <= d2; ++v2) {
          const CrystalGraph c1 = sl2_crystal(d1, v1);
          const CrystalGraph c2 = sl2_crystal(d2, v2);
          const CrystalGraph t = tensor(c1, c2);
          const Decomposition dec = decompose(t);
          for (int a = 0; a < c1.size(); ++a) {
            for (int b = 0; b < c2.size(); ++b) {
              const int cell = a * c2.size() + b;
              const Sl2Tau2 tau = sl2_tau2(d1, v1, v1 + a, d2, v2, v2 + b);
              const int d = d1 + d2;
              EXPECT_EQ(dec.instances[dec.assignment[cell]].highest,
                        (Weight{d - 2 * tau.v0}));
              EXPECT_EQ(t.weight(cell), (Weight{d - 2 * tau.u}));
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace crystal_forge
