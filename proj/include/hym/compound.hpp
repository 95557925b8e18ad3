#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hym/combinatorics.hpp"
#include "hym/error.hpp"
#include "hym/hypermatrix.hpp"
#include "hym/matrix.hpp"

namespace hym {

/// A^(k): all k-minors of the n x m matrix A, rows and columns in
/// lexicographic order of Q(n, k) and Q(m, k).
template <class T>
Matrix<T> mult_compound_matrix(const Matrix<T>& a, std::size_t k) {
  if (k < 1 || k > std::min(a.rows(), a.cols()))
    fail(Errc::BadK, "compound order k must satisfy 1 <= k <= min(n, m)");
  const auto rows = combinations(a.rows(), k);
  const auto cols = combinations(a.cols(), k);
  Matrix<T> out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      out(r, c) = det(a.submatrix(rows[r], cols[c]));
  return out;
}

/// A^[k], the derivative of (I + eps A)^(k) at eps = 0, in closed form:
///   diagonal (alpha, alpha): sum of a_ii over i in alpha;
///   alpha, beta differing in one member: (-1)^(l+m) a_{alpha_l beta_m}, where
///   alpha_l is the member missing from beta and beta_m the one missing from alpha;
///   zero otherwise.
template <class T>
Matrix<T> add_compound_matrix(const Matrix<T>& a, std::size_t k) {
  if (!a.is_square()) fail(Errc::NotSquare, "additive compound needs a square matrix");
  const std::size_t n = a.rows();
  if (k < 1 || k > n) fail(Errc::BadK, "compound order k must satisfy 1 <= k <= n");
  const auto subsets = combinations(n, k);
  const std::size_t r = subsets.size();
  Matrix<T> out(r, r);
  std::vector<bool> in_alpha(n), in_beta(n);
  for (std::size_t p = 0; p < r; ++p) {
    const auto& alpha = subsets[p];
    std::fill(in_alpha.begin(), in_alpha.end(), false);
    for (std::size_t i : alpha) in_alpha[i] = true;
    for (std::size_t q = 0; q < r; ++q) {
      const auto& beta = subsets[q];
      if (p == q) {
        T sum(0);
        for (std::size_t i : alpha) sum += a(i, i);
        out(p, q) = sum;
        continue;
      }
      std::fill(in_beta.begin(), in_beta.end(), false);
      for (std::size_t i : beta) in_beta[i] = true;
      std::size_t misses = 0, l = 0, m = 0;
      for (std::size_t pos = 0; pos < k; ++pos) {
        if (!in_beta[alpha[pos]]) {
          ++misses;
          l = pos;
        }
        if (!in_alpha[beta[pos]]) m = pos;
      }
      if (misses != 1) continue;
      const T& v = a(alpha[l], beta[m]);
      out(p, q) = (l + m) % 2 == 0 ? v : T(-v);
    }
  }
  return out;
}

namespace detail {

template <class T, class F>
Hypermatrix<T> map_slices(const Hypermatrix<T>& a, std::size_t rows, std::size_t cols, F&& f) {
  SliceList<T> in = slices(a);
  std::vector<Matrix<T>> out;
  out.reserve(in.slices.size());
  for (const Matrix<T>& s : in.slices) out.push_back(f(s));
  Dims mids = a.order() >= 3 ? a.shape().mids() : Dims{};
  return from_slices<T>(rows, std::move(mids), cols, std::move(out));
}

inline void require_hypersquare(const Shape& s) {
  if (s.order() < 2 || !s.is_hypersquare())
    fail(Errc::NotHypersquare, "expected a hypersquare (n_1 == n_d, order >= 2)");
}

}  // namespace detail

/// Slicewise multiplicative compound; shape C(n_1,k) x mids x C(n_d,k).
template <class T>
Hypermatrix<T> mult_compound_hyper(const Hypermatrix<T>& a, std::size_t k) {
  if (a.order() < 2) fail(Errc::OrderTooLow, "compound needs order >= 2");
  const std::size_t n1 = a.shape().front(), nd = a.shape().back();
  if (k < 1 || k > std::min(n1, nd))
    fail(Errc::BadK, "compound order k must satisfy 1 <= k <= min(n_1, n_d)");
  return detail::map_slices(a, binomial(n1, k), binomial(nd, k),
                            [k](const Matrix<T>& s) { return mult_compound_matrix(s, k); });
}

/// Slicewise additive compound of a hypersquare.
template <class T>
Hypermatrix<T> add_compound_hyper(const Hypermatrix<T>& a, std::size_t k) {
  detail::require_hypersquare(a.shape());
  const std::size_t n = a.shape().front();
  if (k < 1 || k > n) fail(Errc::BadK, "compound order k must satisfy 1 <= k <= n");
  const std::size_t r = binomial(n, k);
  return detail::map_slices(a, r, r,
                            [k](const Matrix<T>& s) { return add_compound_matrix(s, k); });
}

enum class CompoundMode { Multiplicative, Additive };

/// Eigenvalues of A^(k) (products) or A^[k] (sums) over every alpha in Q(n, k),
/// in lexicographic order.
template <class T>
std::vector<T> predict_compound_eigs(std::span<const T> eigs, std::size_t k, CompoundMode mode) {
  if (k < 1 || k > eigs.size()) fail(Errc::BadK, "compound order k must satisfy 1 <= k <= n");
  std::vector<T> out;
  for (const auto& alpha : combinations(eigs.size(), k)) {
    T acc = mode == CompoundMode::Multiplicative ? T(1) : T(0);
    for (std::size_t i : alpha) {
      if (mode == CompoundMode::Multiplicative) {
        acc *= eigs[i];
      } else {
        acc += eigs[i];
      }
    }
    out.push_back(acc);
  }
  return out;
}

/// W = [v_1, ..., v_k]^(k) for an n x k matrix of eigenvector columns, returned
/// as a C(n, k)-vector. The caller decides whether W vanishes.
template <class T>
std::vector<T> compound_eigvec(const Matrix<T>& vectors, std::size_t k) {
  if (k < 1 || vectors.cols() != k || k > vectors.rows())
    fail(Errc::BadK, "compound eigenvector needs an n x k matrix with 1 <= k <= n");
  const Matrix<T> w = mult_compound_matrix(vectors, k);
  return std::vector<T>(w.data().begin(), w.data().end());
}

}  // namespace hym
