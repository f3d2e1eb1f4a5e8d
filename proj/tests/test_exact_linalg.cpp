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

#include "crystal_forge/errors.hpp"
#include "crystal_forge/exact_linalg.hpp"
#include "gtest/gtest.h"

namespace crystal_forge {
namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int rank) {
  // Product through Q^rank, so the rank is at most `rank`.
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix a(rows, rank), b(rank, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < rank; ++c) a(r, c) = entry(rng);
  }
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < cols; ++c) b(r, c) = entry(rng);
  }
  return a * b;
}

TEST(MatrixTest, RankAndRref) {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(m.rank(), 2);
  std::vector<int> pivots;
  const Matrix r = rref(m, &pivots);
  EXPECT_EQ(pivots, (std::vector<int>{0, 1}));
  EXPECT_EQ(r, Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  EXPECT_EQ(Matrix::identity(4).rank(), 4);
  EXPECT_EQ(Matrix(3, 2).rank(), 0);
}

TEST(MatrixTest, ExactThirds) {
  const Matrix m = Matrix::from_rows({{3, 1}, {1, 3}});
  const Matrix r = rref(m);
  EXPECT_EQ(r, Matrix::identity(2));
  const Matrix scaled = BigRational(1, 3) * m;
  EXPECT_EQ(scaled(0, 1), BigRational(1, 3));
  EXPECT_EQ((scaled * Matrix::identity(2)), scaled);
}

TEST(MatrixTest, ShapeMismatchThrows) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), DomainError);
  EXPECT_THROW(Matrix(2, 3) + Matrix(3, 2), DomainError);
}

TEST(LinalgProperty, NullspaceRankNullity) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = std::uniform_int_distribution<int>(1, 5)(rng);
    const int cols = std::uniform_int_distribution<int>(1, 5)(rng);
    const int k = std::uniform_int_distribution<int>(0, 4)(rng);
    const Matrix m = random_matrix(rng, rows, cols, k);
    const Matrix n = nullspace(m);
    EXPECT_EQ(n.rows(), cols);
    EXPECT_EQ(m.rank() + n.cols(), cols);
    EXPECT_TRUE((m * n).is_zero());
    EXPECT_EQ(n.rank(), n.cols());
    EXPECT_EQ(m.transpose().rank(), m.rank());
  }
}

TEST(LinalgProperty, SubspaceLattice) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const Subspace a = Subspace::column_span(random_matrix(
        rng, n, 3, std::uniform_int_distribution<int>(0, 3)(rng)));
    const Subspace b = Subspace::column_span(random_matrix(
        rng, n, 3, std::uniform_int_distribution<int>(0, 3)(rng)));
    const Subspace s = sum(a, b);
    const Subspace i = intersection(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_EQ(annihilator(a).dim(), n - a.dim());
    EXPECT_EQ(annihilator(annihilator(a)), a);
    // Canonical form: spanning the same space twice gives equal objects.
    EXPECT_EQ(Subspace::column_span(a.basis_columns()), a);
    EXPECT_EQ(sum(a, a), a);
    EXPECT_EQ(intersection(a, Subspace::full(n)), a);
    EXPECT_EQ(sum(a, Subspace::zero(n)), a);
  }
}

TEST(LinalgProperty, ImageAndPreimage) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const Matrix f = random_matrix(rng, m, n,
                                   std::uniform_int_distribution<int>(0, 4)(rng));
    const Subspace a = Subspace::column_span(random_matrix(rng, n, 2, 2));
    const Subspace w = Subspace::column_span(random_matrix(rng, m, 2, 2));
    EXPECT_TRUE(preimage(f, image(f, a)).contains(a));
    EXPECT_TRUE(w.contains(image(f, preimage(f, w))));
    EXPECT_EQ(kernel(f), preimage(f, Subspace::zero(m)));
    EXPECT_EQ(kernel(f).dim(), n - f.rank());
    EXPECT_EQ(image(f, Subspace::full(n)).dim(), f.rank());
    const Matrix k = kernel(f).basis_columns();
    for (int c = 0; c < k.cols(); ++c) {
      EXPECT_TRUE(kernel(f).contains_vector(k.column(c)));
    }
  }
}

TEST(SubspaceTest, ContainsVector) {
  const Subspace line = Subspace::column_span(Matrix::from_rows({{1}, {2}}));
  EXPECT_TRUE(line.contains_vector({BigRational(1, 2), BigRational(1)}));
  EXPECT_FALSE(line.contains_vector({BigRational(1), BigRational(1)}));
  EXPECT_EQ(line.dim(), 1);
  EXPECT_EQ(line.ambient(), 2);
}

}  // namespace
}  // namespace crystal_forge
