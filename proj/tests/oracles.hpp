#pragma once

// Independent reference implementations used only by tests. Nothing here
// shares code paths with the library algorithms they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hym/hypermatrix.hpp"
#include "hym/matrix.hpp"

namespace hym::oracle {

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return k;
}

/// Literal (A ⊗ I_{t/n})(B ⊗ I_{t/p}).
template <class T>
Matrix<T> stp_literal(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t t = std::lcm(a.cols(), b.rows());
  return kron(a, Matrix<T>::identity(t / a.cols())) * kron(b, Matrix<T>::identity(t / b.rows()));
}

inline int inversion_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Leibniz determinant over any commutative ring (no division).
template <class R>
R leibniz_det(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  R total(0);
  for (const auto& p : all_permutations(n)) {
    R term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][p[i]];
    total = inversion_sign(p) > 0 ? R(total + term) : R(total - term);
  }
  return total;
}

template <class T>
T leibniz_det(const Matrix<T>& a) {
  std::vector<std::vector<T>> m(a.rows(), std::vector<T>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return leibniz_det(m);
}

/// First-order jet a + b·eps with eps^2 = 0.
template <class T>
struct Jet {
  T re{0};
  T eps{0};
  Jet() = default;
  Jet(int v) : re(v), eps(0) {}
  Jet(T r, T e) : re(std::move(r)), eps(std::move(e)) {}
  friend Jet operator+(const Jet& a, const Jet& b) { return {a.re + b.re, a.eps + b.eps}; }
  friend Jet operator-(const Jet& a, const Jet& b) { return {a.re - b.re, a.eps - b.eps}; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return {a.re * b.re, a.re * b.eps + a.eps * b.re};
  }
};

/// A^[k] as the eps-coefficient of (I + eps A)^(k), minors by Leibniz over jets.
template <class T>
Matrix<T> additive_compound_by_jets(const Matrix<T>& a, std::size_t k) {
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    subsets.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(subsets.begin(), subsets.end());
  Matrix<T> out(subsets.size(), subsets.size());
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      std::vector<std::vector<Jet<T>>> m(k, std::vector<Jet<T>>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const std::size_t ri = subsets[r][i], cj = subsets[c][j];
          m[i][j] = Jet<T>(T(ri == cj ? 1 : 0), a(ri, cj));
        }
      out(r, c) = leibniz_det(m).eps;
    }
  return out;
}

/// All k-minors by Leibniz, lexicographic order (independent of the
/// elimination-based compound).
template <class T>
Matrix<T> compound_by_leibniz(const Matrix<T>& a, std::size_t k) {
  auto subsets = [k](std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) s.push_back(i);
      out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto rs = subsets(a.rows()), cs = subsets(a.cols());
  Matrix<T> out(rs.size(), cs.size());
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (std::size_t c = 0; c < cs.size(); ++c) out(r, c) = leibniz_det(a.submatrix(rs[r], cs[c]));
  return out;
}

/// Combinatorial hyperdeterminant straight from the definition, permutations
/// from std::next_permutation and signs by inversion counting.
template <class T>
T cdet_bruteforce(const Hypermatrix<T>& a) {
  const std::size_t n = a.dims()[0], d = a.order();
  const auto perms = all_permutations(n);
  std::vector<std::size_t> choice(d, 0);
  T total(0);
  while (true) {
    T term(1);
    int sign = 1;
    for (std::size_t j = 0; j < d; ++j) sign *= inversion_sign(perms[choice[j]]);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> idx(d);
      for (std::size_t j = 0; j < d; ++j) idx[j] = perms[choice[j]][i] + 1;
      term *= a.at(idx);
    }
    total += sign > 0 ? term : T(-term);
    std::size_t j = d;
    while (j > 0 && ++choice[j - 1] == perms.size()) choice[--j] = 0;
    if (j == 0) break;
  }
  T nfact(1);
  for (std::size_t i = 2; i <= n; ++i) nfact *= T(static_cast<long>(i));
  return total / nfact;
}

template <class T>
T ddet_bruteforce(const Hypermatrix<T>& a) {
  const std::size_t n = a.dims()[0], d = a.order();
  const auto perms = all_permutations(n);
  std::vector<std::size_t> choice(d - 1, 0);
  T total(0);
  while (true) {
    T term(1);
    int sign = 1;
    for (std::size_t j = 0; j + 1 < d; ++j) sign *= inversion_sign(perms[choice[j]]);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> idx{i + 1};
      for (std::size_t j = 0; j + 1 < d; ++j) idx.push_back(perms[choice[j]][i] + 1);
      term *= a.at(idx);
    }
    total += sign > 0 ? term : T(-term);
    std::size_t j = d - 1;
    while (j > 0 && ++choice[j - 1] == perms.size()) choice[--j] = 0;
    if (j == 0) break;
  }
  return total;
}

}  // namespace hym::oracle
