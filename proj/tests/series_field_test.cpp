#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tropos/errors.hpp"
#include "tropos/sampling.hpp"
#include "tropos/series_field.hpp"

namespace tropos {
namespace {

using oracle::kBot;

SeriesMatrix random_series_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2), kind(0, 4);
  SeriesMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SeriesRat x = SeriesRat::monomial(Rational(coeff(rng)), Rational(expo(rng))) +
                    SeriesRat::monomial(Rational(coeff(rng)), Rational(expo(rng), 2));
      if (kind(rng) == 0) x = x / (SeriesRat::t_pow(Rational(1)) + SeriesRat(1 + kind(rng)));
      out(i, j) = x;
    }
  return out;
}

TEST(Lifts, CanonicalLiftSendsBottomToZero) {
  const SeriesMatrix l = canonical_lift(TropMatrix{{2, kBot}, {Rational(1, 2), 0}});
  EXPECT_EQ(l(0, 0), parse_series("t^2"));
  EXPECT_TRUE(l(0, 1).is_zero());
  EXPECT_EQ(l(1, 0), parse_series("t^(1/2)"));
  EXPECT_EQ(valuation(l), (TropMatrix{{2, kBot}, {Rational(1, 2), 0}}));
}

TEST(Lifts, HadamardLiftPreservesValuation) {
  Sampler s(2);
  for (int trial = 0; trial < 50; ++trial) {
    const TropMatrix a = s.matrix(3, 4, 0.3);
    EXPECT_EQ(valuation(hadamard_lift(a, vandermonde_tp2c(3, 4, 4))), a);
    EXPECT_EQ(valuation(s.random_lift(a)), a);
  }
  EXPECT_THROW(hadamard_lift(TropMatrix(2, 2), SeriesMatrix(2, 3)), DimensionError);
}

TEST(Vandermonde, LiesInTp2c) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (long c : {1L, 4L, 16L}) {
      const SeriesMatrix v = vandermonde_tp2c(n, n + 1, c);
      EXPECT_TRUE(is_tn2c(v, c, true));
      EXPECT_TRUE(is_tn_series(v, true));
    }
  EXPECT_FALSE(is_tn2c(vandermonde_tp2c(3, 3, 4), 100, false));
  EXPECT_THROW(vandermonde_tp2c(2, 2, 0), DimensionError);
  EXPECT_THROW(vandermonde_tp2c(2, 2, 3, Rational(3)), DimensionError);
}

TEST(Determinant, WorkedValues) {
  EXPECT_EQ(det_series(canonical_lift(TropMatrix{{2, 1}, {1, 2}})), parse_series("t^4 - t^2"));
  const SeriesMatrix m{{SeriesRat(1), SeriesRat(1)}, {parse_series("1 - t^-1"), parse_series("1 + t^-1")}};
  EXPECT_EQ(det_series(m), parse_series("2*t^-1"));
  EXPECT_EQ(det_series(SeriesMatrix(0, 0)), SeriesRat(1));
  EXPECT_THROW(det_series(SeriesMatrix(2, 3)), DimensionError);
}

TEST(Determinant, AgreesWithLaplaceExpansion) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const SeriesMatrix m = random_series_matrix(rng, n, n);
    EXPECT_EQ(det_series(m), oracle::laplace_det(m)) << "trial " << trial;
  }
}

TEST(Determinant, IsMultiplicative) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const SeriesMatrix a = random_series_matrix(rng, 3, 3), b = random_series_matrix(rng, 3, 3);
    EXPECT_EQ(det_series(series_product(a, b)), det_series(a) * det_series(b));
    EXPECT_EQ(series_product(a, b), oracle::matmul(a, b));
  }
}

TEST(Minors, EveryMinorMatchesLaplace) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const SeriesMatrix m = random_series_matrix(rng, 3, 4);
    std::size_t visited = 0;
    for_each_minor(m, 9, [&](const MinorKey& key, const SeriesRat& det) {
      const IndexSet rows = mask_to_indices(key.rows), cols = mask_to_indices(key.cols);
      EXPECT_EQ(rows.size(), cols.size());
      EXPECT_EQ(det, oracle::laplace_det(m.submatrix(rows, cols)));
      EXPECT_EQ(indices_to_mask(rows), key.rows);
      ++visited;
      return true;
    });
    EXPECT_EQ(visited, 3u * 4 + 3 * 6 + 1 * 4);
  }
}

TEST(Minors, VisitorCanStopAndCapIsEnforced) {
  std::size_t calls = 0;
  for_each_minor(series_identity(3), 9, [&](const MinorKey&, const SeriesRat&) { return ++calls < 2; });
  EXPECT_EQ(calls, 2u);
  EXPECT_THROW(for_each_minor(series_identity(4), 3, [](const MinorKey&, const SeriesRat&) { return true; }),
               CapExceeded);
}

TEST(TotalPositivity, SmallExamples) {
  const SeriesMatrix tp{{parse_series("2*t"), parse_series("t")}, {SeriesRat(1), SeriesRat(1)}};
  EXPECT_TRUE(is_tn_series(tp, true));
  EXPECT_FALSE(is_tn_series(canonical_lift(TropMatrix{{1, 1}, {0, 0}}), true));
  EXPECT_TRUE(is_tn_series(canonical_lift(TropMatrix{{1, 1}, {0, 0}}), false));
  const SeriesMatrix ones = hadamard_lift(TropMatrix{{0, 0, kBot}, {0, 0, 0}, {kBot, 0, 0}}, SeriesMatrix(3, 3, 1));
  EXPECT_EQ(det_series(ones), SeriesRat(-1));
  EXPECT_FALSE(is_tn_series(ones, false));
  EXPECT_TRUE(is_tn2c(ones, 1, false));
}

}  // namespace
}  // namespace tropos
