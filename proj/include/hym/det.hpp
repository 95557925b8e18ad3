#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hym/combinatorics.hpp"
#include "hym/compound.hpp"
#include "hym/error.hpp"
#include "hym/hypermatrix.hpp"
#include "hym/matrix.hpp"

namespace hym {

enum class DetKind { Combinatorial, Modified, SliceBased };

DetKind parse_det_kind(std::string_view name);  // "cdet" | "ddet" | "sdet"
std::string_view det_kind_name(DetKind kind) noexcept;

/// Size guard for the permutation-sum determinants. Both n and d must be
/// within bounds or TooLarge is raised.
struct EnumerationBudget {
  std::size_t max_n = 5;
  std::size_t max_d = 4;

  static EnumerationBudget unlimited() { return {static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)}; }
};

namespace detail {

inline void check_budget(const Shape& s, const EnumerationBudget& budget) {
  if (s.front() > budget.max_n || s.order() > budget.max_d)
    fail(Errc::TooLarge, "permutation enumeration over " + s.to_string() +
                             " exceeds the budget (n <= " + std::to_string(budget.max_n) +
                             ", d <= " + std::to_string(budget.max_d) + ")");
}

// Sums sign * prod_i a_{idx(i)} over (S_n)^walkers, where the multi-index for
// row i has `fixed_first` (axis 0 = i) or all axes driven by walkers.
template <class T>
T permutation_sum(const Hypermatrix<T>& a, std::size_t walkers, bool fixed_first) {
  const std::size_t n = a.shape().front();
  const auto& strides = a.shape().strides();
  const std::size_t first_axis = fixed_first ? 1 : 0;
  std::vector<PermutationWalker> w(walkers, PermutationWalker(n));
  T total(0);
  while (true) {
    int sign = 1;
    for (const auto& p : w) sign *= p.sign();
    T term(1);
    for (std::size_t i = 0; i < n && !FieldTraits<T>::is_zero(term); ++i) {
      std::size_t off = fixed_first ? i * strides[0] : 0;
      for (std::size_t j = 0; j < walkers; ++j) off += w[j].current()[i] * strides[first_axis + j];
      term *= a.data()[off];
    }
    if (sign > 0) {
      total += term;
    } else {
      total -= term;
    }
    // Odometer over the walkers, last one fastest.
    std::size_t j = walkers;
    while (j > 0) {
      if (w[j - 1].next()) break;
      w[j - 1] = PermutationWalker(n);
      --j;
    }
    if (j == 0) break;
  }
  return total;
}

}  // namespace detail

/// Combinatorial hyperdeterminant:
///   (1/n!) sum_{sigma_1..sigma_d in S_n} prod_j sgn(sigma_j) prod_i a_{sigma_1(i),...,sigma_d(i)}.
template <class T>
T cdet(const Hypermatrix<T>& a, const EnumerationBudget& budget = {}) {
  detail::require_hypercubic(a.shape());
  detail::check_budget(a.shape(), budget);
  T sum = detail::permutation_sum(a, a.order(), false);
  sum /= T(static_cast<long>(factorial(a.shape().front())));
  return sum;
}

/// Modified combinatorial hyperdeterminant: the first index runs in order and
/// only d-1 permutations are summed.
template <class T>
T ddet(const Hypermatrix<T>& a, const EnumerationBudget& budget = {}) {
  detail::require_hypercubic(a.shape());
  detail::check_budget(a.shape(), budget);
  return detail::permutation_sum(a, a.order() - 1, true);
}

/// Det of one m x n slice: det for square, product of all m-minors when
/// m < n, TallSlice when m > n.
template <class T>
T slice_det(const Matrix<T>& m) {
  if (m.rows() == m.cols()) return det(m);
  if (m.rows() > m.cols())
    fail(Errc::TallSlice, "slice-based determinant is undefined for tall slices (m > n)");
  const Matrix<T> minors = mult_compound_matrix(m, m.rows());
  T p(1);
  for (const T& x : minors.data()) p *= x;
  return p;
}

/// Slice-based hyperdeterminant: product of slice determinants. Matrices
/// (order 2) are a single slice.
template <class T>
T sdet(const Hypermatrix<T>& a) {
  if (a.order() < 2) fail(Errc::OrderTooLow, "slice-based determinant needs order >= 2");
  T p(1);
  for (std::size_t j = 0; j < a.slice_count(); ++j) p *= slice_det(a.slice(j));
  return p;
}

template <class T>
T hyperdet(const Hypermatrix<T>& a, DetKind kind, const EnumerationBudget& budget = {}) {
  switch (kind) {
    case DetKind::Combinatorial: return cdet(a, budget);
    case DetKind::Modified: return ddet(a, budget);
    case DetKind::SliceBased: return sdet(a);
  }
  return sdet(a);
}

/// Nonsingular iff every slice is invertible (equivalently Det != 0).
template <class T>
bool is_nonsingular(const Hypermatrix<T>& a) {
  detail::require_hypersquare(a.shape());
  for (std::size_t j = 0; j < a.slice_count(); ++j)
    if (!is_invertible(a.slice(j))) return false;
  return true;
}

/// Slicewise inverse [A_1^{-1}, ..., A_s^{-1}]; throws Singular.
template <class T>
Hypermatrix<T> inverse(const Hypermatrix<T>& a) {
  detail::require_hypersquare(a.shape());
  const std::size_t n = a.shape().front();
  return detail::map_slices(a, n, n, [](const Matrix<T>& s) { return inverse(s); });
}

}  // namespace hym
