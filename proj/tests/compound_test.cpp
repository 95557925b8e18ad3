#include <gtest/gtest.h>

#include <cmath>

#include "hym/compound.hpp"
#include "hym/det.hpp"
#include "hym/random.hpp"
#include "hym/stp.hpp"
#include "oracles.hpp"

namespace hym {
namespace {

using Q = Rational;
using M = Matrix<Q>;

const M kWide{{1, 2, -1, 4}, {-2, 0, 1, -3}, {3, 1, -2, 5}};
const M kSquare{{1, 2, -1}, {-2, 0, 1}, {3, 1, -2}};

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::BadShape;
}

TEST(MultCompound, WideExample) {
  EXPECT_EQ(mult_compound_matrix(kWide, 1), kWide);
  EXPECT_EQ(mult_compound_matrix(kWide, 2),
            (M{{4, -1, 5, 2, -6, -1}, {-5, 1, -7, -3, 6, 3}, {-2, 1, -1, -1, 3, -1}}));
  EXPECT_EQ(mult_compound_matrix(kWide, 3), (M{{-1, -3, 2, -3}}));
}

TEST(MultCompound, FullOrderIsDeterminant) {
  auto rng = random::trial_rng(1, 0);
  for (int t = 0; t < 20; ++t) {
    const auto a = random::matrix(rng, 4, 4);
    ASSERT_EQ(mult_compound_matrix(a, 4), (M{{det(a)}}));
  }
}

TEST(MultCompound, IdentityMapsToIdentity) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      ASSERT_EQ(mult_compound_matrix(M::identity(n), k), M::identity(binomial(n, k)));
}

TEST(MultCompound, AgreesWithLeibnizMinors) {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = random::trial_rng(2, t);
    const auto a = random::matrix(rng, random::uniform(rng, 1, 4), random::uniform(rng, 1, 4));
    const std::size_t k = random::uniform(rng, 1, std::min(a.rows(), a.cols()));
    ASSERT_EQ(mult_compound_matrix(a, k), oracle::compound_by_leibniz(a, k));
  }
}

TEST(MultCompound, FloatAgreesWithExact) {
  auto rng = random::trial_rng(3, 0);
  const auto a = random::matrix(rng, 4, 4);
  const auto af = convert<double>(Hypermatrix<Q>::from_matrix(a)).as_matrix();
  for (std::size_t k = 1; k <= 4; ++k)
    EXPECT_EQ(mult_compound_matrix(af, k),
              convert<double>(Hypermatrix<Q>::from_matrix(mult_compound_matrix(a, k))).as_matrix());
}

TEST(MultCompound, BadK) {
  EXPECT_EQ(code_of([] { mult_compound_matrix(kWide, 0); }), Errc::BadK);
  EXPECT_EQ(code_of([] { mult_compound_matrix(kWide, 4); }), Errc::BadK);
}

TEST(MultCompound, CauchyBinet) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = random::trial_rng(4, t);
    const std::size_t n = random::uniform(rng, 1, 4), m = random::uniform(rng, 1, 4),
                      p = random::uniform(rng, 1, 4);
    const auto a = random::matrix(rng, n, m);
    const auto b = random::matrix(rng, m, p);
    for (std::size_t k = 1; k <= std::min({n, m, p}); ++k)
      ASSERT_EQ(mult_compound_matrix(a * b, k), mult_compound_matrix(a, k) * mult_compound_matrix(b, k));
  }
}

TEST(MultCompound, CommutesWithInverseAndTranspose) {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = random::trial_rng(5, t);
    const std::size_t n = random::uniform(rng, 1, 4);
    const auto a = random::invertible_matrix(rng, n);
    for (std::size_t k = 1; k <= n; ++k) {
      ASSERT_EQ(inverse(mult_compound_matrix(a, k)), mult_compound_matrix(inverse(a), k));
      ASSERT_EQ(mult_compound_matrix(a, k).transposed(), mult_compound_matrix(a.transposed(), k));
    }
    const auto s = a + a.transposed();
    for (std::size_t k = 1; k <= n; ++k) {
      const auto c = mult_compound_matrix(s, k);
      ASSERT_EQ(c, c.transposed());
    }
  }
}

TEST(AddCompound, SquareExample) {
  EXPECT_EQ(add_compound_matrix(kSquare, 1), kSquare);
  EXPECT_EQ(add_compound_matrix(kSquare, 2), (M{{1, 1, 1}, {1, -1, 2}, {-3, -2, -2}}));
  EXPECT_EQ(add_compound_matrix(kSquare, 3), (M{{-1}}));
}

TEST(AddCompound, JetOracleOnExample) {
  for (std::size_t k = 1; k <= 3; ++k)
    EXPECT_EQ(oracle::additive_compound_by_jets(kSquare, k), add_compound_matrix(kSquare, k));
}

TEST(AddCompound, ClosedFormMatchesJetDerivative) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    auto rng = random::trial_rng(6, t);
    const std::size_t n = random::uniform(rng, 1, 4);
    const auto a = random::matrix(rng, n, n);
    for (std::size_t k = 1; k <= n; ++k)
      ASSERT_EQ(add_compound_matrix(a, k), oracle::additive_compound_by_jets(a, k));
  }
}

TEST(AddCompound, TopOrderIsTrace) {
  auto rng = random::trial_rng(7, 0);
  const auto a = random::matrix(rng, 4, 4);
  Q trace = 0;
  for (std::size_t i = 0; i < 4; ++i) trace += a(i, i);
  EXPECT_EQ(add_compound_matrix(a, 4), (M{{trace}}));
}

TEST(AddCompound, Errors) {
  EXPECT_EQ(code_of([] { add_compound_matrix(kWide, 2); }), Errc::NotSquare);
  EXPECT_EQ(code_of([] { add_compound_matrix(kSquare, 4); }), Errc::BadK);
}

TEST(AddCompound, Additive) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = random::trial_rng(8, t);
    const std::size_t n = random::uniform(rng, 1, 4);
    const auto a = random::matrix(rng, n, n);
    const auto b = random::matrix(rng, n, n);
    for (std::size_t k = 1; k <= n; ++k)
      ASSERT_EQ(add_compound_matrix(a + b, k), add_compound_matrix(a, k) + add_compound_matrix(b, k));
  }
}

TEST(AddCompound, SimilarityTransport) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = random::trial_rng(9, t);
    const std::size_t n = random::uniform(rng, 1, 3);
    const auto a = random::matrix(rng, n, n);
    const auto tm = random::invertible_matrix(rng, n);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto tk = mult_compound_matrix(tm, k);
      ASSERT_EQ(add_compound_matrix(tm * a * inverse(tm), k), tk * add_compound_matrix(a, k) * inverse(tk));
    }
  }
}

// Truncated Taylor series; entries are small so 40 terms are far past double precision.
Matrix<double> expm(const Matrix<double>& a) {
  Matrix<double> sum = Matrix<double>::identity(a.rows());
  Matrix<double> term = sum;
  for (int i = 1; i < 40; ++i) {
    term = (1.0 / i) * (term * a);
    sum = sum + term;
  }
  return sum;
}

TEST(AddCompound, ExponentialDerivativeFloat) {
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    auto rng = random::trial_rng(10, trial);
    const std::size_t n = random::uniform(rng, 2, 3);
    Matrix<double> a(n, n);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& x : a.data()) x = u(rng);
    const double t0 = 0.1, h = 1e-4;
    for (std::size_t k = 1; k <= n; ++k) {
      auto ek = [&](double t) { return mult_compound_matrix(expm(t * a), k); };
      // Fourth-order central difference.
      const auto d = (1.0 / (12 * h)) * (ek(t0 - 2 * h) - ek(t0 + 2 * h) + 8.0 * (ek(t0 + h) - ek(t0 - h)));
      const auto r = d - add_compound_matrix(a, k) * ek(t0);
      double worst = 0;
      for (double x : r.data()) worst = std::max(worst, std::abs(x));
      ASSERT_LE(worst, 1e-6) << "n=" << n << " k=" << k;
    }
  }
}

TEST(CompoundHyper, KOneAndKEqualN) {
  auto rng = random::trial_rng(11, 0);
  const auto a = random::hypermatrix(rng, Shape{3, 2, 2, 3});
  EXPECT_EQ(mult_compound_hyper(a, 1), a);
  EXPECT_EQ(add_compound_hyper(a, 1), a);
  const auto top = mult_compound_hyper(a, 3);
  ASSERT_EQ(top.shape(), (Shape{1, 2, 2, 1}));
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(top.data()[j], det(a.slice(j)));
}

TEST(CompoundHyper, ShapeForRectangularSlices) {
  auto rng = random::trial_rng(12, 0);
  const auto a = random::hypermatrix(rng, Shape{3, 2, 4});
  const auto c = mult_compound_hyper(a, 2);
  EXPECT_EQ(c.shape(), (Shape{3, 2, 6}));
  for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(c.slice(j), mult_compound_matrix(a.slice(j), 2));
  EXPECT_EQ(code_of([&] { mult_compound_hyper(a, 4); }), Errc::BadK);
  EXPECT_EQ(code_of([&] { add_compound_hyper(a, 2); }), Errc::NotHypersquare);
}

TEST(CompoundHyper, IdentityMapsToIdentity) {
  EXPECT_EQ(mult_compound_hyper(identity_hypersquare<Q>(4, {3}), 2), identity_hypersquare<Q>(6, {3}));
}

TEST(CompoundHyper, AdditiveSlicewiseExample) {
  Hypermatrix<Q> a = from_slices<Q>(3, {2}, 3, {kSquare, kSquare});
  const auto c = add_compound_hyper(a, 2);
  const M expect{{1, 1, 1}, {1, -1, 2}, {-3, -2, -2}};
  EXPECT_EQ(c.slice(0), expect);
  EXPECT_EQ(c.slice(1), expect);
}

TEST(CompoundHyper, CauchyBinet) {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = random::trial_rng(13, t);
    const std::size_t n = random::uniform(rng, 1, 4), m = random::uniform(rng, 1, 4),
                      p = random::uniform(rng, 1, 4);
    const Dims mids = random::mids(rng, 4, 2);
    const auto a = random::hypermatrix(rng, make_shape(n, mids, m));
    const auto b = random::hypermatrix(rng, make_shape(m, mids, p));
    for (std::size_t k = 1; k <= std::min({n, m, p}); ++k)
      ASSERT_EQ(mult_compound_hyper(stph(a, b), k), stph(mult_compound_hyper(a, k), mult_compound_hyper(b, k)));
  }
}

TEST(CompoundHyper, CommutesWithInverse) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = random::trial_rng(14, t);
    const std::size_t n = random::uniform(rng, 1, 3);
    const auto a = random::nonsingular(rng, n, {3});
    for (std::size_t k = 1; k <= n; ++k)
      ASSERT_EQ(inverse(mult_compound_hyper(a, k)), mult_compound_hyper(inverse(a), k));
  }
}

TEST(CompoundHyper, AdditiveIsAdditive) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = random::trial_rng(15, t);
    const auto a = random::hypermatrix(rng, Shape{3, 2, 3});
    const auto b = random::hypermatrix(rng, Shape{3, 2, 3});
    ASSERT_EQ(add_compound_hyper(a + b, 2), add_compound_hyper(a, 2) + add_compound_hyper(b, 2));
  }
}

TEST(PredictEigs, Examples) {
  const std::vector<Q> two{2, 3}, three{1, 2, 3};
  EXPECT_EQ(predict_compound_eigs<Q>(two, 2, CompoundMode::Multiplicative), (std::vector<Q>{6}));
  EXPECT_EQ(predict_compound_eigs<Q>(three, 2, CompoundMode::Additive), (std::vector<Q>{3, 4, 5}));
  EXPECT_EQ(predict_compound_eigs<Q>(three, 2, CompoundMode::Multiplicative), (std::vector<Q>{2, 3, 6}));
  EXPECT_EQ(code_of([&] { predict_compound_eigs<Q>(three, 4, CompoundMode::Additive); }), Errc::BadK);
}

TEST(PredictEigs, TopAdditiveIsTrace) {
  // Trace of kSquare is -1; summing all eigenvalues must give the 3-additive compound.
  Q trace = 0;
  for (std::size_t i = 0; i < 3; ++i) trace += kSquare(i, i);
  EXPECT_EQ(trace, -1);
  EXPECT_EQ(add_compound_matrix(kSquare, 3)(0, 0), trace);
}

TEST(CompoundEigvec, BasisAndDuplicates) {
  const M e12{{1, 0}, {0, 1}, {0, 0}};
  EXPECT_EQ(compound_eigvec(e12, 2), (std::vector<Q>{1, 0, 0}));
  const M dup{{1, 1}, {2, 2}, {3, 3}};
  EXPECT_EQ(compound_eigvec(dup, 2), (std::vector<Q>{0, 0, 0}));
  EXPECT_EQ(code_of([&] { compound_eigvec(e12, 3); }), Errc::BadK);
}

TEST(CompoundEigvec, EigenTransportPlanted) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = random::trial_rng(16, t);
    const std::size_t n = random::uniform(rng, 2, 4);
    const auto v = random::invertible_matrix(rng, n);
    std::vector<Q> lambda(n);
    for (auto& l : lambda) l = random::rational(rng);
    M d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = lambda[i];
    const auto a = v * d * inverse(v);
    for (std::size_t k = 1; k <= n; ++k) {
      const auto mult = predict_compound_eigs<Q>(lambda, k, CompoundMode::Multiplicative);
      const auto add = predict_compound_eigs<Q>(lambda, k, CompoundMode::Additive);
      const auto ak = mult_compound_matrix(a, k);
      const auto sk = add_compound_matrix(a, k);
      const auto subsets = combinations(n, k);
      for (std::size_t r = 0; r < subsets.size(); ++r) {
        std::vector<std::size_t> all_rows(n);
        std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
        const auto w = compound_eigvec(v.submatrix(all_rows, subsets[r]), k);
        if (std::all_of(w.begin(), w.end(), [](const Q& x) { return x == 0; })) continue;
        M col(w.size(), 1, w);
        ASSERT_EQ(ak * col, mult[r] * col);
        ASSERT_EQ(sk * col, add[r] * col);
      }
    }
  }
}

TEST(CompoundEigvec, DiagonalMatrixEigenvectors) {
  const M a{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  const auto a2 = mult_compound_matrix(a, 2);
  const auto preds = predict_compound_eigs<Q>(std::vector<Q>{1, 2, 3}, 2, CompoundMode::Multiplicative);
  const auto subsets = combinations(3, 2);
  for (std::size_t r = 0; r < 3; ++r) {
    const auto w = compound_eigvec(M::identity(3).submatrix(std::vector<std::size_t>{0, 1, 2}, subsets[r]), 2);
    const M col(3, 1, w);
    EXPECT_EQ(a2 * col, preds[r] * col);
  }
}

}  // namespace
}  // namespace hym
