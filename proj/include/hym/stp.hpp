#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "hym/det.hpp"
#include "hym/error.hpp"
#include "hym/hypermatrix.hpp"
#include "hym/matrix.hpp"

namespace hym {

/// Left semi-tensor product A ⋉ B = (A ⊗ I_{t/n})(B ⊗ I_{t/p}), t = lcm(n, p),
/// evaluated by gathering the nonzero blocks instead of forming the Kronecker
/// factors. Reduces to the ordinary product when n == p.
template <class T>
Matrix<T> stp_matrix(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t m = a.rows(), n = a.cols(), p = b.rows(), q = b.cols();
  const std::size_t t = std::lcm(n, p);
  const std::size_t ka = t / n, kb = t / p;
  Matrix<T> c(m * ka, q * kb);
  // Row (i, u) of A ⊗ I_ka touches inner index j*ka + u; column (l, x) of
  // B ⊗ I_kb touches inner index k*kb + x. They meet when the inner indices agree.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t u = 0; u < ka; ++u)
      for (std::size_t j = 0; j < n; ++j) {
        const T& aij = a(i, j);
        if (FieldTraits<T>::is_zero(aij)) continue;
        const std::size_t inner = j * ka + u;
        const std::size_t k = inner / kb, x = inner % kb;
        for (std::size_t l = 0; l < q; ++l) c(i * ka + u, l * kb + x) += aij * b(k, l);
      }
  return c;
}

/// Middle dimension vector of a product. Volume-one vectors act as identities
/// (all-ones of the greater length when both are trivial), equal vectors are
/// kept, anything else is flattened to (lcm(s1, s2)). This operation is
/// associative and commutative.
Dims combine_mids(const Dims& left, const Dims& right);

namespace detail {

// (front, mids, back) view of an operand: order 1 (n) reads as the column n x 1,
// order 2 as a matrix with no middle indices.
template <class T>
struct StpView {
  std::size_t front;
  Dims mids;
  std::size_t back;
  const Hypermatrix<T>* src;

  std::size_t slice_count() const { return product(mids); }
  Matrix<T> slice(std::size_t j) const {
    if (src->order() == 1) return Matrix<T>(front, 1, {src->data().begin(), src->data().end()});
    return src->slice(j);
  }
};

template <class T>
StpView<T> stp_view(const Hypermatrix<T>& a) {
  if (a.order() == 1) return {a.dims()[0], {}, 1, &a};
  return {a.shape().front(), a.order() >= 3 ? a.shape().mids() : Dims{}, a.shape().back(), &a};
}

// Slice j of the result is A_{j mod s1} ⋉ B_{j mod s2} over s = lcm(s1, s2)
// slices, laid out with the given middle vector (volume s).
template <class T>
Hypermatrix<T> paired_slices(const StpView<T>& a, const StpView<T>& b, Dims out_mids) {
  const std::size_t s1 = a.slice_count(), s2 = b.slice_count();
  const std::size_t s = std::lcm(s1, s2);
  std::vector<Matrix<T>> as, bs;
  as.reserve(s1);
  bs.reserve(s2);
  for (std::size_t j = 0; j < s1; ++j) as.push_back(a.slice(j));
  for (std::size_t j = 0; j < s2; ++j) bs.push_back(b.slice(j));
  std::vector<Matrix<T>> out;
  out.reserve(s);
  for (std::size_t j = 0; j < s; ++j) out.push_back(stp_matrix(as[j % s1], bs[j % s2]));
  const std::size_t t = std::lcm(a.back, b.front);
  return from_slices<T>(a.front * t / a.back, std::move(out_mids), b.back * t / b.front,
                        std::move(out));
}

}  // namespace detail

/// A ⊛ B for order-3 operands with the same middle dimension: slice i is
/// A_i ⋉ B_i.
template <class T>
Hypermatrix<T> stph_equal_mids(const Hypermatrix<T>& a, const Hypermatrix<T>& b) {
  if (a.order() != 3 || b.order() != 3)
    fail(Errc::OrderTooLow, "stph_equal_mids needs order-3 operands");
  if (a.dims()[1] != b.dims()[1])
    fail(Errc::MidMismatch, "middle dimensions differ; use stph_broadcast");
  return detail::paired_slices(detail::stp_view(a), detail::stp_view(b), {a.dims()[1]});
}

/// A ⊛ B = pi^{-1}(pi(A) ⊛ pi(B)) for operands of order >= 3 sharing the whole
/// middle dimension vector.
template <class T>
Hypermatrix<T> stph_general(const Hypermatrix<T>& a, const Hypermatrix<T>& b) {
  if (a.order() < 3 || b.order() < 3)
    fail(Errc::OrderTooLow, "stph_general needs operands of order >= 3");
  const Dims mids = a.shape().mids();
  if (mids != b.shape().mids())
    fail(Errc::MidsVectorMismatch, "middle dimension vectors differ");
  return unflatten_pi(stph_equal_mids(flatten_pi(a), flatten_pi(b)), mids);
}

/// Order-3 operands with s1 and s2 slices: both slice lists are repeated
/// cyclically to s = lcm(s1, s2) slices and paired.
template <class T>
Hypermatrix<T> stph_broadcast(const Hypermatrix<T>& a, const Hypermatrix<T>& b) {
  if (a.order() != 3 || b.order() != 3)
    fail(Errc::OrderTooLow, "stph_broadcast needs order-3 operands");
  const std::size_t s = std::lcm(a.dims()[1], b.dims()[1]);
  return detail::paired_slices(detail::stp_view(a), detail::stp_view(b), {s});
}

/// Semi-tensor product of two arbitrary hypermatrices. Matrices contribute no
/// middle indices and scalars (all dimensions 1) scale the other operand; the
/// result's middle vector follows combine_mids. Equal middle vectors reduce to
/// stph_general, different ones to stph_broadcast on the flattened operands.
template <class T>
Hypermatrix<T> stph(const Hypermatrix<T>& a, const Hypermatrix<T>& b) {
  const auto va = detail::stp_view(a);
  const auto vb = detail::stp_view(b);
  return detail::paired_slices(va, vb, combine_mids(va.mids, vb.mids));
}

/// Checks (A ⊛ B)^{-1} == B^{-1} ⊛ A^{-1}; throws Singular when either operand
/// is singular.
template <class T>
bool stph_inverse_law_check(const Hypermatrix<T>& a, const Hypermatrix<T>& b) {
  if (!is_nonsingular(a) || !is_nonsingular(b))
    fail(Errc::Singular, "inverse law needs nonsingular hypersquares");
  return inverse(stph(a, b)) == stph(inverse(b), inverse(a));
}

}  // namespace hym
