#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wknots/laurent.hpp"
#include "wknots/rational.hpp"
#include "wknots/series.hpp"

namespace wk {

/// Dense row-major matrix over an arbitrary commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(std::size_t r, std::size_t c) {
    check(r, c);
    return data_[r * cols_ + c];
  }
  const T& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return data_[r * cols_ + c];
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using SeriesMatrix = Matrix<TruncSeries>;
using LaurentMatrix = Matrix<LaurentPoly>;

// Division-free determinant (Berkowitz). Works over any commutative ring, so the
// same routine serves truncated series, where pivots need not be units.
template <class T>
T berkowitz_determinant(const Matrix<T>& a, const T& zero, const T& one) {
  if (!a.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;

  // chars[k] holds coefficients of det(t I - A_r), highest power first.
  std::vector<T> chars{one, zero - a.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Column Q = (1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S), length r + 2.
    std::vector<T> q(r + 2, zero);
    q[0] = one;
    q[1] = zero - a.at(r, r);
    std::vector<T> v(r, zero);  // M^j S, starting with S
    for (std::size_t i = 0; i < r; ++i) v[i] = a.at(i, r);
    for (std::size_t j = 0; j < r; ++j) {
      T rs = zero;
      for (std::size_t i = 0; i < r; ++i) rs += a.at(r, i) * v[i];
      q[j + 2] = zero - rs;
      if (j + 1 < r) {
        std::vector<T> next(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t k = 0; k < r; ++k) next[i] += a.at(i, k) * v[k];
        v = std::move(next);
      }
    }
    // New characteristic vector = Toeplitz(q) * chars.
    std::vector<T> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t k = 0; k <= i && k < chars.size(); ++k) next[i] += q[i - k] * chars[k];
    chars = std::move(next);
  }
  T det = chars[n];
  if (n % 2 == 1) det = zero - det;
  return det;
}

/// Exact determinant of a series-valued square matrix; entries must share `cap`.
TruncSeries det_series(const SeriesMatrix& m, int cap);
/// Exact determinant over Z[X, X^-1].
LaurentPoly det_laurent(const LaurentMatrix& m);
Rational det_rational(const RatMatrix& m);

}  // namespace wk
