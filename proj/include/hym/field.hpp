#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>
#include <string>

namespace hym {

/// Exact arbitrary-precision rationals. Always kept canonical (reduced, positive
/// denominator) by GMP.
using Rational = mpq_class;

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_double(double x) { return Rational(x); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "f64";

  // Entrywise equality tolerance after scaling to unit max-norm.
  static constexpr double equal_tol = 1e-9;
  // Pivot tolerance (relative to the matrix max-norm) below which a matrix is
  // declared singular.
  static constexpr double pivot_tol = 1e-12;

  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
  static std::string to_string(double x) { return std::to_string(x); }
};

template <class T>
concept Field = requires { FieldTraits<T>::exact; };

template <Field T>
inline constexpr bool is_exact_v = FieldTraits<T>::exact;

template <Field T>
double max_abs(std::span<const T> xs) {
  double m = 0.0;
  for (const T& x : xs) m = std::max(m, std::abs(FieldTraits<T>::to_double(x)));
  return m;
}

/// Entrywise equality of two equally long sequences: exact for rationals, and
/// for floats within `equal_tol` after scaling both sides by their joint
/// max-norm.
template <Field T>
bool entries_equal(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) return false;
  if constexpr (is_exact_v<T>) {
    return std::equal(a.begin(), a.end(), b.begin());
  } else {
    const double scale = std::max(max_abs(a), max_abs(b));
    if (scale == 0.0) return true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) / scale > FieldTraits<T>::equal_tol) return false;
    }
    return true;
  }
}

/// True when every entry is zero (exactly, or within the scaled float tolerance
/// relative to `reference_scale`).
template <Field T>
bool all_zero(std::span<const T> xs, double reference_scale = 1.0) {
  if constexpr (is_exact_v<T>) {
    return std::all_of(xs.begin(), xs.end(),
                       [](const T& x) { return FieldTraits<T>::is_zero(x); });
  } else {
    const double tol = FieldTraits<T>::equal_tol * std::max(reference_scale, 1e-300);
    return std::all_of(xs.begin(), xs.end(),
                       [tol](double x) { return std::abs(x) <= tol; });
  }
}

}  // namespace hym
