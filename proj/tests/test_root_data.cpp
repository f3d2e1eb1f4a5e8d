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

#include <random>
#include <set>

#include "crystal_forge/errors.hpp"
#include "crystal_forge/root_data.hpp"
#include "gtest/gtest.h"
#include "oracles/oracles.hpp"

namespace crystal_forge {
namespace {

Weight random_weight(std::mt19937_64& rng, int rank, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[i] = dist(rng);
  return w;
}

const char* const kDiagrams[] = {"A1", "A2", "A3", "A5", "D4",
                                 "D5", "E6", "E7", "E8"};

TEST(DynkinTest, A1) {
  const DynkinData a1 = dynkin(Family::kA, 1);
  EXPECT_EQ(a1.cartan(), (IntMatrix{{2}}));
  EXPECT_EQ(a1.x_matrix(), (IntMatrix{{0}}));
  EXPECT_TRUE(a1.arrows().empty());
}

TEST(DynkinTest, A2) {
  const DynkinData a2 = dynkin(Family::kA, 2);
  EXPECT_EQ(a2.cartan(), (IntMatrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(a2.x_matrix(), (IntMatrix{{0, 1}, {1, 0}}));
}

TEST(DynkinTest, D4WrittenOut) {
  const DynkinData d4 = dynkin(Family::kD, 4);
  const IntMatrix expected = {
      {2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  EXPECT_EQ(d4.cartan(), expected);
  std::vector<int> row_sums;
  for (const auto& row : d4.cartan()) {
    int s = 0;
    for (int x : row) s += x;
    row_sums.push_back(s);
  }
  EXPECT_EQ(row_sums, (std::vector<int>{1, -1, 1, 1}));
  EXPECT_EQ(d4.degree(1), 3);
  EXPECT_EQ(d4.arrows().size(), 6u);
}

TEST(DynkinTest, E6Attachment) {
  const DynkinData e6 = DynkinData::parse("E6");
  EXPECT_TRUE(e6.adjacent(0, 2));
  EXPECT_TRUE(e6.adjacent(2, 3));
  EXPECT_TRUE(e6.adjacent(1, 3));
  EXPECT_TRUE(e6.adjacent(3, 4));
  EXPECT_TRUE(e6.adjacent(4, 5));
  EXPECT_EQ(e6.degree(3), 3);
  EXPECT_EQ(e6.edges().size(), 5u);
}

TEST(DynkinTest, RootCounts) {
  // |Φ⁺| for A_n, D_n, E_n.
  EXPECT_EQ(DynkinData::parse("A4").positive_roots().size(), 10u);
  EXPECT_EQ(DynkinData::parse("D4").positive_roots().size(), 12u);
  EXPECT_EQ(DynkinData::parse("D5").positive_roots().size(), 20u);
  EXPECT_EQ(DynkinData::parse("E6").positive_roots().size(), 36u);
  EXPECT_EQ(DynkinData::parse("E7").positive_roots().size(), 63u);
  EXPECT_EQ(DynkinData::parse("E8").positive_roots().size(), 120u);
}

TEST(DynkinTest, InvalidCombinations) {
  EXPECT_THROW(dynkin(Family::kA, 0), DomainError);
  EXPECT_THROW(dynkin(Family::kD, 3), DomainError);
  EXPECT_THROW(dynkin(Family::kE, 5), DomainError);
  EXPECT_THROW(DynkinData::parse("B2"), DomainError);
  EXPECT_THROW(DynkinData::parse("A"), DomainError);
  EXPECT_THROW(DynkinData::parse(""), DomainError);
}

TEST(PairingTest, Examples) {
  EXPECT_EQ(pairing(Weight{1, 0}, Weight{0, 1}), 0);
  EXPECT_EQ(pairing(Weight{1, 1}, Weight{1, 1}), 2);
  const DynkinData a2 = DynkinData::parse("A2");
  EXPECT_EQ(a2.apply_x(Weight{1, 1}), (Weight{1, 1}));
  EXPECT_EQ(pairing(a2.apply_x(Weight{1, 1}), Weight{1, 1}), 2);
  EXPECT_THROW(pairing(Weight{1}, Weight{1, 0}), DomainError);
}

TEST(WeylTest, Examples) {
  EXPECT_EQ(DynkinData::parse("A1").simple_root(0), (Weight{2}));
  const DynkinData a2 = DynkinData::parse("A2");
  EXPECT_EQ(a2.weyl_reflect(0, Weight{1, 0}), (Weight{-1, 1}));
  EXPECT_TRUE(is_dominant(Weight{0, 3}));
  EXPECT_FALSE(is_dominant(Weight{-1, 3}));
}

TEST(WeightTest, ParseAndPrint) {
  EXPECT_EQ(parse_weight("1,-2,0"), (Weight{1, -2, 0}));
  EXPECT_EQ(parse_weight("+3"), (Weight{3}));
  EXPECT_TRUE(parse_weight("").size() == 0);
  EXPECT_EQ((Weight{1, -2, 0}).to_string(), "(1,-2,0)");
  EXPECT_EQ((Weight{1, -2, 0}).to_csv(), "1,-2,0");
  EXPECT_THROW(parse_weight("1,,2"), DomainError);
  EXPECT_THROW(parse_weight("1,x"), DomainError);
  EXPECT_THROW(parse_weight(" 3"), DomainError);
}

TEST(RootDataProperty, XSymmetric) {
  std::mt19937_64 rng(11);
  for (const char* name : kDiagrams) {
    const DynkinData dd = DynkinData::parse(name);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight v = random_weight(rng, dd.rank(), -5, 5);
      const Weight u = random_weight(rng, dd.rank(), -5, 5);
      EXPECT_EQ(pairing(dd.apply_x(v), u), pairing(v, dd.apply_x(u))) << name;
      EXPECT_EQ(pairing(v, u), pairing(u, v));
    }
  }
}

TEST(RootDataProperty, ReflectionInvolution) {
  std::mt19937_64 rng(12);
  for (const char* name : kDiagrams) {
    const DynkinData dd = DynkinData::parse(name);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight lambda = random_weight(rng, dd.rank(), -6, 6);
      for (int i = 0; i < dd.rank(); ++i) {
        const Weight s = dd.weyl_reflect(i, lambda);
        EXPECT_EQ(dd.weyl_reflect(i, s), lambda);
        EXPECT_EQ(s[i], -lambda[i]);
      }
    }
  }
}

TEST(RootDataProperty, ReflectionPreservesForm) {
  // ⟨A s_i λ', s_i μ'⟩ = ⟨A λ', μ'⟩ in root coordinates, where s_i acts on
  // root coordinates as λ' ↦ λ' − (Aλ')_i e_i.
  std::mt19937_64 rng(13);
  for (const char* name : kDiagrams) {
    const DynkinData dd = DynkinData::parse(name);
    const auto reflect_root = [&](int i, Weight x) {
      x[i] -= dd.apply_cartan(x)[i];
      return x;
    };
    for (int trial = 0; trial < 30; ++trial) {
      const Weight l = random_weight(rng, dd.rank(), -4, 4);
      const Weight m = random_weight(rng, dd.rank(), -4, 4);
      for (int i = 0; i < dd.rank(); ++i) {
        const Weight sl = reflect_root(i, l);
        const Weight sm = reflect_root(i, m);
        EXPECT_EQ(pairing(dd.apply_cartan(sl), sm),
                  pairing(dd.apply_cartan(l), m));
        // Compatibility with the fundamental-weight action.
        EXPECT_EQ(dd.apply_cartan(sl),
                  dd.weyl_reflect(i, dd.apply_cartan(l)));
      }
    }
  }
}

TEST(RootDataProperty, ArrowInvolution) {
  for (const char* name : kDiagrams) {
    const DynkinData dd = DynkinData::parse(name);
    const auto& arrows = dd.arrows();
    EXPECT_EQ(arrows.size(), 2 * dd.edges().size());
    for (std::size_t h = 0; h < arrows.size(); ++h) {
      const Arrow& a = arrows[h];
      ASSERT_NE(static_cast<std::size_t>(a.reverse), h);
      const Arrow& r = arrows[a.reverse];
      EXPECT_EQ(static_cast<std::size_t>(r.reverse), h);
      EXPECT_EQ(r.out, a.in);
      EXPECT_EQ(r.in, a.out);
      EXPECT_EQ(a.sign + r.sign, 0);
      EXPECT_EQ(a.sign, a.out < a.in ? 1 : -1);
    }
    // X_ij counts arrows i → j.
    for (int i = 0; i < dd.rank(); ++i) {
      for (int j = 0; j < dd.rank(); ++j) {
        int count = 0;
        for (const Arrow& a : arrows) count += (a.out == i && a.in == j);
        EXPECT_EQ(dd.x_matrix()[i][j], count);
      }
    }
  }
}

TEST(RootDataProperty, SolveCartanRoundTrip) {
  std::mt19937_64 rng(14);
  for (const char* name : kDiagrams) {
    const DynkinData dd = DynkinData::parse(name);
    for (int trial = 0; trial < 30; ++trial) {
      const Weight v = random_weight(rng, dd.rank(), -5, 5);
      const auto back = dd.solve_cartan(dd.apply_cartan(v));
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, v);
    }
  }
  // (1,0) is not in the A2 root lattice.
  EXPECT_FALSE(DynkinData::parse("A2").solve_cartan(Weight{1, 0}).has_value());
}

TEST(RootDataProperty, WeylDimensionMatchesFreudenthal) {
  std::mt19937_64 rng(15);
  for (const char* name : {"A1", "A2", "A3", "D4"}) {
    const DynkinData dd = DynkinData::parse(name);
    for (int trial = 0; trial < 8; ++trial) {
      const Weight lambda = random_weight(rng, dd.rank(), 0, 2);
      int total = 0;
      for (const auto& [w, m] : oracle::freudenthal_character(dd, lambda)) {
        total += m;
      }
      EXPECT_EQ(dd.weyl_dimension(lambda), static_cast<std::uint64_t>(total))
          << name << " " << lambda.to_string();
    }
  }
  EXPECT_EQ(DynkinData::parse("E8").weyl_dimension(
                Weight{0, 0, 0, 0, 0, 0, 0, 1}),
            248u);
}

TEST(RootDataTest, InducedKeepsOrder) {
  const DynkinData d4 = DynkinData::parse("D4");
  const std::vector<int> nodes = {0, 2, 3};
  const DynkinData sub = d4.induced(nodes);
  EXPECT_EQ(sub.rank(), 3);
  EXPECT_TRUE(sub.edges().empty());
  const std::vector<int> chain = {0, 1, 2};
  EXPECT_EQ(d4.induced(chain).cartan(), DynkinData::parse("A3").cartan());
  const std::vector<int> bad = {2, 1};
  EXPECT_THROW(d4.induced(bad), DomainError);
}

}  // namespace
}  // namespace crystal_forge
