// Copyright 2026 The formula-flow Authors
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

#ifndef FF_LINALG_HPP_
#define FF_LINALG_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ff/extended.hpp"

namespace ff {

// Row-major dense matrix, just enough for the small exact solves the
// electrical code needs. Float-heavy work goes through Eigen instead.
template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

namespace detail {

inline double magnitude(double x) { return std::fabs(x); }
inline Rational magnitude(const Rational& x) { return abs(x); }

inline bool negligible(double x, double scale) { return std::fabs(x) <= 1e-14 * scale; }
inline bool negligible(const Rational& x, const Rational&) { return x == 0; }

}  // namespace detail

// Solves A x = b by Gaussian elimination with partial pivoting. Returns
// nullopt when A is singular (exactly for Rational, numerically for double).
template <typename Scalar>
std::optional<std::vector<Scalar>> solve_linear(DenseMatrix<Scalar> a, std::vector<Scalar> b) {
  const std::size_t n = a.rows();
  Scalar scale(0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Scalar m = detail::magnitude(a(r, c));
      if (scale < m) scale = m;
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    Scalar best = detail::magnitude(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      Scalar m = detail::magnitude(a(r, col));
      if (best < m) {
        best = m;
        pivot = r;
      }
    }
    if (detail::negligible(best, scale)) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Scalar factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  std::vector<Scalar> x(n, Scalar(0));
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace ff

#endif  // FF_LINALG_HPP_
