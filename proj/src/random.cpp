#include "hym/random.hpp"

#include "hym/det.hpp"

namespace hym::random {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational rational(Rng& rng, EntryRange range) {
  std::uniform_int_distribution<int> num(-range.max_abs_numerator, range.max_abs_numerator);
  std::uniform_int_distribution<int> den(1, range.max_denominator);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational nonzero_rational(Rng& rng, EntryRange range) {
  while (true) {
    Rational r = rational(rng, range);
    if (sgn(r) != 0) return r;
  }
}

Matrix<Rational> matrix(Rng& rng, std::size_t rows, std::size_t cols, EntryRange range) {
  Matrix<Rational> m(rows, cols);
  for (Rational& x : m.data()) x = rational(rng, range);
  return m;
}

Matrix<Rational> invertible_matrix(Rng& rng, std::size_t n, EntryRange range) {
  while (true) {
    Matrix<Rational> m = matrix(rng, n, n, range);
    if (is_invertible(m)) return m;
  }
}

Hypermatrix<Rational> hypermatrix(Rng& rng, const Shape& shape, EntryRange range) {
  std::vector<Rational> xs(shape.volume());
  for (Rational& x : xs) x = rational(rng, range);
  return Hypermatrix<Rational>(shape, std::move(xs));
}

Hypermatrix<Rational> nonsingular(Rng& rng, std::size_t n, const Dims& mids, EntryRange range) {
  std::vector<Matrix<Rational>> ss;
  for (std::size_t j = 0; j < product(mids); ++j) ss.push_back(invertible_matrix(rng, n, range));
  return from_slices<Rational>(n, mids, n, std::move(ss));
}

Dims mids(Rng& rng, std::size_t max_volume, std::size_t max_len) {
  const std::size_t len = uniform(rng, 0, max_len);
  Dims out;
  std::size_t vol = 1;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, max_volume / vol));
    out.push_back(n);
    vol *= n;
  }
  return out;
}

Shape mixed_shape(Rng& rng, std::size_t max_dim, std::size_t max_mid_volume) {
  if (uniform(rng, 0, 9) == 0) return Shape{1, 1, 1};
  const std::size_t front = uniform(rng, 1, max_dim);
  const std::size_t back = uniform(rng, 1, max_dim);
  return make_shape(front, mids(rng, max_mid_volume), back);
}

}  // namespace hym::random
