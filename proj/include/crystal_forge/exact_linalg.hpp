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

#ifndef CRYSTAL_FORGE_EXACT_LINALG_HPP_
#define CRYSTAL_FORGE_EXACT_LINALG_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crystal_forge {

using BigRational = boost::multiprecision::cpp_rational;

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  // Row lists; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<BigRational>>& rows,
                          int cols = 0);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigRational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  BigRational& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  Matrix transpose() const;
  std::vector<BigRational> column(int c) const;
  int rank() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const BigRational& s, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  // "[[1,0],[1/2,3]]"
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigRational> data_;
};

// Reduced row echelon form; pivot column of each nonzero row in `pivots`.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);

// Basis of {x : m x = 0} as the columns of a cols × k matrix.
Matrix nullspace(const Matrix& m);

// A subspace of Q^n, stored as the reduced row echelon form of a basis
// (one basis vector per row). The form is canonical, so equal subspaces
// have equal representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  // Column span of an ambient × k matrix.
  static Subspace column_span(const Matrix& columns);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  // dim() × ambient(); rows form the canonical basis.
  const Matrix& basis() const { return basis_; }
  // ambient() × dim()
  Matrix basis_columns() const { return basis_.transpose(); }

  bool contains(const Subspace& other) const;
  bool contains_vector(const std::vector<BigRational>& x) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
// a ⊆ Q^n, m: Q^n → Q^k.
Subspace image(const Matrix& m, const Subspace& a);
// {x ∈ Q^n : m x ∈ w} for m: Q^n → Q^k and w ⊆ Q^k.
Subspace preimage(const Matrix& m, const Subspace& w);
Subspace kernel(const Matrix& m);
// {x : ⟨x, y⟩ = 0 for all y ∈ a}
Subspace annihilator(const Subspace& a);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_EXACT_LINALG_HPP_
