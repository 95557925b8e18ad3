#include "hym/algebra.hpp"

#include <array>
#include <cmath>

namespace hym {

namespace {

using cd = std::complex<double>;

// Monic characteristic polynomial coefficients, highest degree first after
// the implicit leading 1.
std::vector<double> char_poly(const Matrix<double>& a) {
  const std::size_t n = a.rows();
  if (n == 1) return {-a(0, 0)};
  const double tr = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a(i, i);
    return s;
  }();
  if (n == 2) return {-tr, det(a)};
  double minors = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) minors += a(i, i) * a(j, j) - a(i, j) * a(j, i);
  return {-tr, minors, -det(a)};
}

cd eval(const std::vector<double>& c, cd x) {
  cd v = 1.0;
  for (double coef : c) v = v * x + coef;
  return v;
}

cd eval_derivative(const std::vector<double>& c, cd x) {
  const std::size_t deg = c.size();
  cd v = static_cast<double>(deg);
  for (std::size_t i = 0; i + 1 < deg; ++i) v = v * x + static_cast<double>(deg - 1 - i) * c[i];
  return v;
}

std::vector<cd> cubic_roots(double c2, double c1, double c0) {
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double shift = -c2 / 3.0;
  if (p == 0.0 && q == 0.0) return {shift, shift, shift};
  const cd disc = std::sqrt(cd(q * q / 4.0 + p * p * p / 27.0));
  cd u = std::pow(-q / 2.0 + disc, 1.0 / 3.0);
  if (std::abs(u) < 1e-300) u = std::pow(-q / 2.0 - disc, 1.0 / 3.0);
  const cd omega(-0.5, std::sqrt(3.0) / 2.0);
  std::vector<cd> roots;
  cd w = 1.0;
  for (int k = 0; k < 3; ++k) {
    const cd uk = u * w;
    roots.push_back(uk - p / (3.0 * uk) + shift);
    w *= omega;
  }
  return roots;
}

}  // namespace

std::vector<std::complex<double>> eig_small(const Matrix<double>& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "eig_small needs a square matrix");
  if (a.rows() > 3) fail(Errc::TooLarge, "eig_small supports n <= 3 only");
  if (a.rows() == 0) return {};
  const auto c = char_poly(a);
  std::vector<cd> roots;
  if (c.size() == 1) {
    roots = {-c[0]};
  } else if (c.size() == 2) {
    const cd disc = std::sqrt(cd(c[0] * c[0] - 4.0 * c[1]));
    roots = {(-c[0] + disc) / 2.0, (-c[0] - disc) / 2.0};
  } else {
    roots = cubic_roots(c[0], c[1], c[2]);
  }
  for (cd& r : roots) {
    for (int it = 0; it < 4; ++it) {
      const cd d = eval_derivative(c, r);
      if (std::abs(d) < 1e-14) break;
      const cd step = eval(c, r) / d;
      const cd next = r - step;
      if (!(std::abs(eval(c, next)) < std::abs(eval(c, r)))) break;
      r = next;
    }
    if (std::abs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r.real()))) r.imag(0.0);
  }
  return roots;
}

}  // namespace hym
