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

#include "crystal_forge/exact_linalg.hpp"

#include <utility>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, BigRational(0));
}

Matrix Matrix::from_rows(const std::vector<std::vector<BigRational>>& rows,
                         int cols) {
  if (!rows.empty()) cols = static_cast<int>(rows.front().size());
  Matrix out(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < out.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw DomainError("ragged matrix: row " + std::to_string(r) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(cols));
    }
    for (int c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

Matrix Matrix::identity(int n) {
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

std::vector<BigRational> Matrix::column(int c) const {
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

int Matrix::rank() const {
  std::vector<int> pivots;
  rref(*this, &pivots);
  return static_cast<int>(pivots.size());
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DomainError("matrix product shape mismatch: " +
                      std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                      " times " + std::to_string(b.rows_) + "x" +
                      std::to_string(b.cols_));
  }
  Matrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const BigRational& x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DomainError("matrix sum shape mismatch");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return a + BigRational(-1) * b;
}

Matrix operator*(const BigRational& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    out += r ? ",[" : "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).str();
    }
    out += ']';
  }
  return out + "]";
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(row, k));
    }
    const BigRational inv = 1 / m(row, c);
    for (int k = c; k < m.cols(); ++k) m(row, k) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const BigRational factor = m(r, c);
      for (int k = c; k < m.cols(); ++k) m(r, k) -= factor * m(row, k);
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return m;
}

Matrix nullspace(const Matrix& m) {
  std::vector<int> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int c : pivots) is_pivot[c] = 1;
  const int free = m.cols() - static_cast<int>(pivots.size());
  Matrix out(m.cols(), free);
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out(c, k) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      out(pivots[p], k) = -r(static_cast<int>(p), c);
    }
    ++k;
  }
  return out;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  return column_span(Matrix::identity(ambient));
}

Subspace Subspace::column_span(const Matrix& columns) {
  std::vector<int> pivots;
  Matrix r = rref(columns.transpose(), &pivots);
  Subspace s;
  s.ambient_ = columns.rows();
  s.basis_ = Matrix(static_cast<int>(pivots.size()), columns.rows());
  for (int i = 0; i < s.basis_.rows(); ++i) {
    for (int c = 0; c < s.ambient_; ++c) s.basis_(i, c) = r(i, c);
  }
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw DomainError("subspaces of different ambient dimension");
  }
  return sum(*this, other).dim() == dim();
}

bool Subspace::contains_vector(const std::vector<BigRational>& x) const {
  if (static_cast<int>(x.size()) != ambient_) {
    throw DomainError("vector length does not match the ambient space");
  }
  Matrix col(ambient_, 1);
  for (int i = 0; i < ambient_; ++i) col(i, 0) = x[i];
  return contains(column_span(col));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw DomainError("subspaces of different ambient dimension");
  }
  Matrix cols(a.ambient(), a.dim() + b.dim());
  for (int k = 0; k < a.dim(); ++k) {
    for (int i = 0; i < a.ambient(); ++i) cols(i, k) = a.basis()(k, i);
  }
  for (int k = 0; k < b.dim(); ++k) {
    for (int i = 0; i < a.ambient(); ++i) {
      cols(i, a.dim() + k) = b.basis()(k, i);
    }
  }
  return Subspace::column_span(cols);
}

Subspace annihilator(const Subspace& a) {
  return Subspace::column_span(nullspace(a.basis()));
}

Subspace kernel(const Matrix& m) {
  return Subspace::column_span(nullspace(m));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw DomainError("subspaces of different ambient dimension");
  }
  // a ∩ b = a ∩ ker(N) with the rows of N spanning the annihilator of b.
  const Matrix n = annihilator(b).basis();
  const Matrix cols = a.basis_columns();
  return image(cols, kernel(n * cols));
}

Subspace image(const Matrix& m, const Subspace& a) {
  if (m.cols() != a.ambient()) {
    throw DomainError("image: map source has dimension " +
                      std::to_string(m.cols()) + ", subspace lives in " +
                      std::to_string(a.ambient()));
  }
  return Subspace::column_span(m * a.basis_columns());
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient()) {
    throw DomainError("preimage: map target has dimension " +
                      std::to_string(m.rows()) + ", subspace lives in " +
                      std::to_string(w.ambient()));
  }
  return kernel(annihilator(w).basis() * m);
}

}  // namespace crystal_forge
