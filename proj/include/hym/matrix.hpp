#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "hym/error.hpp"
#include "hym/field.hpp"

namespace hym {

/// Dense row-major matrix over a field. Used for slices, matrix expressions and
/// compounds; indices are 0-based at this level.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      fail(Errc::LengthMismatch, "matrix data length does not match rows*cols");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(Errc::LengthMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_idx,
                   std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j)
        s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& a) {
    for (T& x : data_) x *= a;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& a, Matrix m) { return m *= a; }
  friend Matrix operator-(Matrix m) {
    for (T& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      fail(Errc::DimensionMismatch, "matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (FieldTraits<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  /// Exact equality for rationals, scaled tolerance for floats.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           entries_equal<T>(a.data_, b.data_);
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(Errc::ShapeMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <class T>
double pivot_threshold(const Matrix<T>& a) {
  return FieldTraits<double>::pivot_tol * max_abs<T>(a.data());
}

// Row index in [from, rows) to pivot on in column c: first nonzero entry for
// exact fields, largest magnitude for floats.
template <class T>
std::size_t pick_pivot(const Matrix<T>& a, std::size_t from, std::size_t c) {
  if constexpr (is_exact_v<T>) {
    for (std::size_t i = from; i < a.rows(); ++i)
      if (!FieldTraits<T>::is_zero(a(i, c))) return i;
    return from;
  } else {
    std::size_t p = from;
    for (std::size_t i = from + 1; i < a.rows(); ++i)
      if (std::abs(a(i, c)) > std::abs(a(p, c))) p = i;
    return p;
  }
}

}  // namespace detail

/// Determinant. Rationals use Bareiss fraction-free elimination; floats use
/// partial-pivot LU.
template <class T>
T det(Matrix<T> a) {
  if (!a.is_square()) fail(Errc::NotSquare, "det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  bool negate = false;
  if constexpr (is_exact_v<T>) {
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (FieldTraits<T>::is_zero(a(k, k))) {
        std::size_t p = k + 1;
        while (p < n && FieldTraits<T>::is_zero(a(p, k))) ++p;
        if (p == n) return T(0);
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          T v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          v /= prev;
          a(i, j) = std::move(v);
        }
      }
      prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    return negate ? T(-d) : d;
  } else {
    T d(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
      if (a(p, k) == T(0)) return T(0);
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        negate = !negate;
      }
      d *= a(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const T f = a(i, k) / a(k, k);
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
    }
    return negate ? -d : d;
  }
}

/// Rank by row reduction. Float pivots below the scaled tolerance count as zero.
template <class T>
std::size_t rank(Matrix<T> a) {
  const double tol = is_exact_v<T> ? 0.0 : detail::pivot_threshold(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    const std::size_t p = detail::pick_pivot(a, r, c);
    if constexpr (is_exact_v<T>) {
      if (FieldTraits<T>::is_zero(a(p, c))) continue;
    } else {
      if (std::abs(a(p, c)) <= tol) continue;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const T f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// True when the square matrix is invertible (exactly, or for floats when no
/// pivot falls below the scaled tolerance).
template <class T>
bool is_invertible(const Matrix<T>& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "is_invertible: matrix is not square");
  return rank(a) == a.rows();
}

/// Gauss-Jordan inverse; throws Singular.
template <class T>
Matrix<T> inverse(Matrix<T> a) {
  if (!a.is_square()) fail(Errc::NotSquare, "inverse: matrix is not square");
  const std::size_t n = a.rows();
  const double tol = is_exact_v<T> ? 0.0 : detail::pivot_threshold(a);
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = detail::pick_pivot(a, k, k);
    bool singular;
    if constexpr (is_exact_v<T>) {
      singular = FieldTraits<T>::is_zero(a(p, k));
    } else {
      singular = std::abs(a(p, k)) <= tol;
    }
    if (singular) fail(Errc::Singular, "inverse: matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const T piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || FieldTraits<T>::is_zero(a(i, k))) continue;
      const T f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace hym
