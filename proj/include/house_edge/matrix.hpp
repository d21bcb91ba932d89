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

#ifndef HOUSE_EDGE_MATRIX_HPP_
#define HOUSE_EDGE_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "house_edge/rational.hpp"

namespace house_edge {

// Dense row-major matrix of exact rationals. Sized for the small systems in
// this library (3x3 coherence, absorbing chains of a few dozen states).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  RationalMatrix operator-(const RationalMatrix& o) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  // Determinant by fraction-exact Gaussian elimination.
  Rational determinant() const;
  // Determinant by cofactor expansion along the first row (small n only).
  Rational determinant_cofactor() const;
  // Solution of this * x = b, or nullopt when singular.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
  std::optional<RationalMatrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace house_edge

#endif  // HOUSE_EDGE_MATRIX_HPP_
