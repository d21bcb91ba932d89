// Copyright 2026 The house-edge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "house_edge/matrix.hpp"

#include <utility>

#include "house_edge/error.hpp"

namespace house_edge {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::kInvalidParameters, "ragged matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::kInvalidParameters, "shape mismatch");
  RationalMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::kInvalidParameters, "shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::kInvalidParameters, "shape mismatch");
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::kInvalidParameters, "determinant of non-square matrix");
  RationalMatrix a = *this;
  Rational det(1);
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

Rational RationalMatrix::determinant_cofactor() const {
  if (rows_ != cols_) throw Error(ErrorCode::kInvalidParameters, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Rational(1);
  if (n == 1) return data_[0];
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t mj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, mj++) = (*this)(i, j);
      }
    }
    const Rational term = (*this)(0, c) * minor.determinant_cofactor();
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw Error(ErrorCode::kInvalidParameters, "shape mismatch");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  std::vector<Rational> x = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(x[pivot], x[col]);
    }
    const Rational inv = a(col, col).reciprocal();
    for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
    x[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      x[r] -= f * x[col];
    }
  }
  return x;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::kInvalidParameters, "inverse of non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n);
    e[c] = Rational(1);
    auto col = solve(e);
    if (!col) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) out(r, c) = (*col)[r];
  }
  return out;
}

}  // namespace house_edge
