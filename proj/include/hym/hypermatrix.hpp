#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hym/error.hpp"
#include "hym/field.hpp"
#include "hym/matrix.hpp"
#include "hym/shape.hpp"

namespace hym {

/// Order-d array of field elements with an explicit shape. Element
/// a_{i_1,...,i_d} lives at flat offset sum_k (i_k - 1) * prod_{j>k} n_j.
/// Values are immutable once built except through explicit mutable access.
template <class T>
class Hypermatrix {
 public:
  using value_type = T;

  Hypermatrix() = default;
  explicit Hypermatrix(Shape shape)
      : shape_(std::move(shape)), data_(shape_.volume(), T(0)) {}
  Hypermatrix(Shape shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_.volume())
      fail(Errc::LengthMismatch, "entry count " + std::to_string(data_.size()) +
                                     " does not match shape volume " +
                                     std::to_string(shape_.volume()));
  }

  static Hypermatrix from_matrix(const Matrix<T>& m) {
    return Hypermatrix(Shape{m.rows(), m.cols()},
                       std::vector<T>(m.data().begin(), m.data().end()));
  }
  static Hypermatrix scalar(const T& a) { return Hypermatrix(Shape{1, 1, 1}, {a}); }

  const Shape& shape() const noexcept { return shape_; }
  const Dims& dims() const noexcept { return shape_.dims(); }
  std::size_t order() const noexcept { return shape_.order(); }
  std::size_t volume() const noexcept { return shape_.volume(); }
  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  /// 1-based element access.
  const T& at(std::span<const std::size_t> index) const { return data_[shape_.offset(index)]; }
  const T& at(std::initializer_list<std::size_t> index) const {
    return at(std::span(index.begin(), index.size()));
  }
  T& at(std::span<const std::size_t> index) { return data_[shape_.offset(index)]; }
  T& at(std::initializer_list<std::size_t> index) {
    return at(std::span(index.begin(), index.size()));
  }

  /// The order-2 view; requires order 2.
  Matrix<T> as_matrix() const {
    if (order() != 2) fail(Errc::ShapeMismatch, "as_matrix needs an order-2 hypermatrix");
    return Matrix<T>(shape_[0], shape_[1], data_);
  }

  /// Number of slices n_2 * ... * n_{d-1} (1 for order 2).
  std::size_t slice_count() const noexcept { return shape_.mid_volume(); }

  /// 0-based slice j: the n_1 x n_d matrix A[:, m_j, :] for the j-th
  /// lexicographic middle multi-index.
  Matrix<T> slice(std::size_t j) const {
    require_sliceable();
    const std::size_t rows = shape_.front(), cols = shape_.back();
    const std::size_t s = slice_count();
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t l = 0; l < cols; ++l) m(i, l) = data_[(i * s + j) * cols + l];
    return m;
  }

  Hypermatrix reshaped(Shape shape) const& { return Hypermatrix(std::move(shape), data_); }
  Hypermatrix reshaped(Shape shape) && {
    return Hypermatrix(std::move(shape), std::move(data_));
  }

  Hypermatrix& operator+=(const Hypermatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Hypermatrix& operator-=(const Hypermatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Hypermatrix& operator*=(const T& a) {
    for (T& x : data_) x *= a;
    return *this;
  }
  friend Hypermatrix operator+(Hypermatrix a, const Hypermatrix& b) { return a += b; }
  friend Hypermatrix operator-(Hypermatrix a, const Hypermatrix& b) { return a -= b; }
  friend Hypermatrix operator*(const T& a, Hypermatrix m) { return m *= a; }
  friend Hypermatrix operator-(Hypermatrix m) {
    for (T& x : m.data_) x = -x;
    return m;
  }

  /// Same shape and equal entries (exact, or scaled tolerance for floats).
  friend bool operator==(const Hypermatrix& a, const Hypermatrix& b) {
    return a.shape_ == b.shape_ && entries_equal<T>(a.data_, b.data_);
  }

 private:
  void require_sliceable() const {
    if (order() < 2 && volume() != 1)
      fail(Errc::OrderTooLow, "slices need an order >= 2 hypermatrix");
  }
  void require_same_shape(const Hypermatrix& o) const {
    if (!(shape_ == o.shape_))
      fail(Errc::ShapeMismatch,
           "shapes differ: " + shape_.to_string() + " vs " + o.shape_.to_string());
  }

  Shape shape_;
  std::vector<T> data_;
};

/// Decomposition M_A = [A_1, ..., A_s] into n_1 x n_d slices ordered by the
/// lexicographic middle multi-index.
template <class T>
struct SliceList {
  std::size_t front = 0;
  std::size_t back = 0;
  Dims mids;
  std::vector<Matrix<T>> slices;
};

template <class T>
Hypermatrix<T> make(Shape shape, std::vector<T> entries) {
  return Hypermatrix<T>(std::move(shape), std::move(entries));
}

template <class T>
SliceList<T> slices(const Hypermatrix<T>& a) {
  if (a.order() < 2 && a.volume() != 1)
    fail(Errc::OrderTooLow, "slices need an order >= 2 hypermatrix");
  SliceList<T> out;
  if (a.order() < 2) {
    out.front = out.back = 1;
    out.slices.push_back(Matrix<T>(1, 1, {a.data()[0]}));
    return out;
  }
  out.front = a.shape().front();
  out.back = a.shape().back();
  out.mids = a.shape().mids();
  const std::size_t s = a.slice_count();
  out.slices.reserve(s);
  for (std::size_t j = 0; j < s; ++j) out.slices.push_back(a.slice(j));
  return out;
}

/// Inverse of slices(): rebuilds the hypermatrix of shape (front, mids, back).
template <class T>
Hypermatrix<T> unslice(const SliceList<T>& list) {
  const Shape shape = make_shape(list.front, list.mids, list.back);
  const std::size_t s = shape.mid_volume();
  if (list.slices.size() != s)
    fail(Errc::LengthMismatch, "slice count does not match middle volume");
  Hypermatrix<T> out(shape);
  auto data = out.data();
  for (std::size_t j = 0; j < s; ++j) {
    const Matrix<T>& m = list.slices[j];
    if (m.rows() != list.front || m.cols() != list.back)
      fail(Errc::ShapeMismatch, "slice has the wrong dimensions");
    for (std::size_t i = 0; i < list.front; ++i)
      for (std::size_t l = 0; l < list.back; ++l)
        data[(i * s + j) * list.back + l] = m(i, l);
  }
  return out;
}

/// Builds (front, mids..., back) from a slice vector.
template <class T>
Hypermatrix<T> from_slices(std::size_t front, Dims mids, std::size_t back,
                           std::vector<Matrix<T>> slices) {
  return unslice(SliceList<T>{front, back, std::move(mids), std::move(slices)});
}

/// M_A^alpha: rows follow the lexicographic alpha multi-index, columns the
/// lexicographic beta multi-index.
template <class T>
Matrix<T> matrix_expression(const Hypermatrix<T>& a, const IndexPartition& p) {
  if (p.order() != a.order())
    fail(Errc::BadPartition, "partition order differs from hypermatrix order");
  const Dims& dims = a.dims();
  std::vector<std::size_t> row_stride(a.order(), 0), col_stride(a.order(), 0);
  std::size_t rows = 1, cols = 1;
  for (std::size_t k = p.alpha().size(); k-- > 0;) {
    const std::size_t axis = p.alpha()[k] - 1;
    row_stride[axis] = rows;
    rows *= dims[axis];
  }
  for (std::size_t k = p.beta().size(); k-- > 0;) {
    const std::size_t axis = p.beta()[k] - 1;
    col_stride[axis] = cols;
    cols *= dims[axis];
  }
  Matrix<T> m(rows, cols);
  std::vector<std::size_t> idx(a.order(), 0);
  std::size_t off = 0;
  do {
    std::size_t r = 0, c = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      r += idx[k] * row_stride[k];
      c += idx[k] * col_stride[k];
    }
    m(r, c) = a.data()[off++];
  } while (next_index(idx, dims));
  return m;
}

/// pi_A^alpha(x) = M_A^alpha x.
template <class T>
std::vector<T> apply_multilinear(const Hypermatrix<T>& a, const IndexPartition& p,
                                 std::span<const T> x) {
  const Matrix<T> m = matrix_expression(a, p);
  if (x.size() != m.cols())
    fail(Errc::DimensionMismatch, "vector length differs from n_beta");
  std::vector<T> y(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

/// A^sigma: axis k of the result is axis sigma(k) of A, so the result has
/// shape (n_{sigma(1)}, ..., n_{sigma(d)}).
template <class T>
Hypermatrix<T> sigma_transpose(const Hypermatrix<T>& a, const Permutation& sigma) {
  if (sigma.degree() != a.order())
    fail(Errc::ArityMismatch, "permutation degree differs from hypermatrix order");
  const std::size_t d = a.order();
  Dims out_dims(d);
  std::vector<std::size_t> src_stride(d);
  for (std::size_t k = 0; k < d; ++k) {
    out_dims[k] = a.dims()[sigma(k + 1) - 1];
    src_stride[k] = a.shape().strides()[sigma(k + 1) - 1];
  }
  Hypermatrix<T> out{Shape(out_dims)};
  auto data = out.data();
  std::vector<std::size_t> idx(d, 0);
  std::size_t off = 0;
  do {
    std::size_t src = 0;
    for (std::size_t k = 0; k < d; ++k) src += idx[k] * src_stride[k];
    data[off++] = a.data()[src];
  } while (next_index(idx, out_dims));
  return out;
}

namespace detail {

inline void require_hypercubic(const Shape& s) {
  if (!s.is_hypercubic()) fail(Errc::NotHypercubic, "expected a hypercubic hypermatrix");
}

}  // namespace detail

/// A^sigma == A for every sigma in S_d; checked on the adjacent transpositions
/// that generate S_d.
template <class T>
bool is_symmetric(const Hypermatrix<T>& a) {
  detail::require_hypercubic(a.shape());
  for (std::size_t i = 1; i < a.order(); ++i)
    if (!(sigma_transpose(a, Permutation::transposition(a.order(), i, i + 1)) == a))
      return false;
  return true;
}

/// A^sigma == sgn(sigma) A for every sigma; generators all have sign -1.
template <class T>
bool is_skew_symmetric(const Hypermatrix<T>& a) {
  detail::require_hypercubic(a.shape());
  const Hypermatrix<T> neg = -a;
  for (std::size_t i = 1; i < a.order(); ++i)
    if (!(sigma_transpose(a, Permutation::transposition(a.order(), i, i + 1)) == neg))
      return false;
  return true;
}

/// pi: F^{n_1 x ... x n_d} -> F^{n_1 x s x n_d}. Lexicographic storage makes
/// this a pure reshape.
template <class T>
Hypermatrix<T> flatten_pi(Hypermatrix<T> a) {
  if (a.order() < 3) fail(Errc::OrderTooLow, "flatten_pi needs order >= 3");
  Shape s{a.shape().front(), a.slice_count(), a.shape().back()};
  return std::move(a).reshaped(std::move(s));
}

template <class T>
Hypermatrix<T> unflatten_pi(Hypermatrix<T> a, const Dims& mids) {
  if (a.order() != 3) fail(Errc::OrderTooLow, "unflatten_pi needs an order-3 hypermatrix");
  if (product(mids) != a.dims()[1])
    fail(Errc::MidsVectorMismatch, "mids volume differs from the middle dimension");
  Shape s = make_shape(a.shape().front(), mids, a.shape().back());
  return std::move(a).reshaped(std::move(s));
}

/// J_n^s: every slice is I_n. Empty mids gives the plain identity matrix.
template <class T>
Hypermatrix<T> identity_hypersquare(std::size_t n, const Dims& mids) {
  const std::size_t s = product(mids);
  return from_slices<T>(n, mids, n, std::vector<Matrix<T>>(s, Matrix<T>::identity(n)));
}

/// Converts every entry to another field (exact when going to rationals).
template <class U, class T>
Hypermatrix<U> convert(const Hypermatrix<T>& a) {
  std::vector<U> out;
  out.reserve(a.volume());
  for (const T& x : a.data()) {
    if constexpr (std::is_same_v<U, T>) {
      out.push_back(x);
    } else {
      out.push_back(FieldTraits<U>::from_double(FieldTraits<T>::to_double(x)));
    }
  }
  return Hypermatrix<U>(a.shape(), std::move(out));
}

}  // namespace hym
