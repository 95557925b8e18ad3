#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hym/hypermatrix.hpp"
#include "hym/matrix.hpp"

namespace hym::random {

using Rng = std::mt19937_64;

/// Independent stream for one trial, so trial results do not depend on the
/// order in which trials run.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct EntryRange {
  int max_abs_numerator = 3;
  int max_denominator = 2;
};

Rational rational(Rng& rng, EntryRange range = {});
/// Nonzero rational in the same range.
Rational nonzero_rational(Rng& rng, EntryRange range = {});
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

Matrix<Rational> matrix(Rng& rng, std::size_t rows, std::size_t cols, EntryRange range = {});
Matrix<Rational> invertible_matrix(Rng& rng, std::size_t n, EntryRange range = {});
Hypermatrix<Rational> hypermatrix(Rng& rng, const Shape& shape, EntryRange range = {});
/// Hypersquare n x mids x n with every slice invertible.
Hypermatrix<Rational> nonsingular(Rng& rng, std::size_t n, const Dims& mids,
                                  EntryRange range = {});

/// Middle dimension vector of length 0..max_len with product <= max_volume.
Dims mids(Rng& rng, std::size_t max_volume, std::size_t max_len = 2);

/// Shape of order 2..4 (occasionally the scalar 1x1x1) with front/back dims in
/// [1, max_dim] and middle volume <= max_mid_volume.
Shape mixed_shape(Rng& rng, std::size_t max_dim, std::size_t max_mid_volume);

}  // namespace hym::random
