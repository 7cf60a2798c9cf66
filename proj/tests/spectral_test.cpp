#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropos/errors.hpp"
#include "tropos/positivity.hpp"
#include "tropos/sampling.hpp"
#include "tropos/spectral.hpp"

namespace tropos {
namespace {

using oracle::kBot;

EigenSpectrum spectrum_of(std::vector<std::pair<TropScalar, std::size_t>> v) { return EigenSpectrum{std::move(v)}; }

TEST(CharPoly, SymmetricTwoByTwo) {
  const TropCharPoly p = char_poly_trop(TropMatrix{{2, 1}, {1, 2}});
  EXPECT_EQ(p.coeffs, (std::vector<TropScalar>{0, 2, 4}));
  EXPECT_EQ(tropical_eigenvalues(p), spectrum_of({{2, 2}}));
  EXPECT_EQ(p.evaluate(TropScalar(0)), TropScalar(4));
  EXPECT_EQ(p.evaluate(TropScalar(5)), TropScalar(10));
}

TEST(CharPoly, AgreesWithPrincipalMinorEnumeration) {
  Sampler s(97);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const TropMatrix a = trial % 2 ? s.tn_masked(n, n, 0.2) : s.matrix(n, n, 0.2);
    const TropCharPoly p = char_poly_trop(a);
    EXPECT_EQ(p, char_poly_trop_bruteforce(a));
    ASSERT_EQ(p.coeffs.size(), n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      TropScalar best = kBot;
      for (const auto& sub : oracle::subsets(n, k)) best = trop_add(best, oracle::permanent(a.submatrix(sub, sub)));
      EXPECT_EQ(p.coeffs[k], best);
    }
  }
}

TEST(CharPoly, TotallyNonnegativeSpectrumIsSortedDiagonal) {
  Sampler s(101);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const TropMatrix a = s.tn_masked(n, n, 0.2);
    if (!is_tn_trop(a).tn_trop) continue;
    const TropCharPoly p = char_poly_trop(a);
    EXPECT_EQ(p, char_poly_trop_sorted_diagonal(a));
    std::vector<TropScalar> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(a(i, i));
    std::sort(diag.rbegin(), diag.rend());
    EXPECT_EQ(tropical_eigenvalues(p).flattened(), diag);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_TRUE(is_active(p, k)) << "trial " << trial << " k " << k;
  }
}

TEST(Hull, SlopesAndMultiplicities) {
  EXPECT_EQ(concave_hull_slopes({0, 1, 1}), spectrum_of({{1, 1}, {0, 1}}));
  EXPECT_EQ(concave_hull_slopes({0, 2, 4}), spectrum_of({{2, 2}}));
  EXPECT_EQ(concave_hull_slopes({0, 3, kBot, kBot}), spectrum_of({{3, 1}, {kBot, 2}}));
  EXPECT_EQ(concave_hull_slopes({0, 0, 3}), spectrum_of({{Rational(3, 2), 2}}));
  const TropCharPoly p{{0, 0, 3}};
  EXPECT_TRUE(is_active(p, 0));
  EXPECT_FALSE(is_active(p, 1));
  EXPECT_TRUE(is_active(p, 2));
}

// f_A(x) = max_k (a_k + (n-k)x) is non-differentiable exactly at the
// eigenvalues, with slope jumps equal to their multiplicities.
TEST(Hull, EigenvaluesAreBreakpointsOfTheCharacteristicFunction) {
  Sampler s(103);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const TropCharPoly p = char_poly_trop(s.matrix(n, n, 0.0));
    const EigenSpectrum e = tropical_eigenvalues(p);
    EXPECT_EQ(e.total_multiplicity(), n);
    const Rational h(1, 1000);
    for (const auto& [lambda, mult] : e.eigenvalues) {
      const Rational x = lambda.value();
      const Rational left = (p.evaluate(TropScalar(x)).value() - p.evaluate(TropScalar(x - h)).value()) / h;
      const Rational right = (p.evaluate(TropScalar(x + h)).value() - p.evaluate(TropScalar(x)).value()) / h;
      EXPECT_EQ(right - left, Rational(static_cast<long>(mult))) << "trial " << trial;
    }
  }
}

TEST(SeriesCharPoly, TwoByTwoLifts) {
  const auto alphas = char_poly_series(canonical_lift(TropMatrix{{2, 1}, {1, 2}}));
  ASSERT_EQ(alphas.size(), 3u);
  EXPECT_EQ(alphas[1], parse_series("2*t^2"));
  EXPECT_EQ(alphas[2], parse_series("t^4 - t^2"));
  EXPECT_EQ(eigen_valuations_via_newton(alphas), spectrum_of({{2, 2}}));
  const SeriesMatrix m{{parse_series("t + 1"), parse_series("t")}, {SeriesRat(1), SeriesRat(1)}};
  EXPECT_EQ(eigen_valuations_via_newton(char_poly_series(m)), spectrum_of({{1, 1}, {-1, 1}}));
  EXPECT_THROW(eigen_valuations_via_newton({SeriesRat(2), SeriesRat(1)}), InconsistentData);
}

TEST(SeriesCharPoly, CoefficientsAreSumsOfPrincipalMinors) {
  Sampler s(107);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const SeriesMatrix m = s.random_lift(s.matrix(n, n, 0.2));
    const auto alphas = char_poly_series(m);
    for (std::size_t k = 0; k <= n; ++k) {
      SeriesRat sum;
      for (const auto& sub : oracle::subsets(n, k)) sum += oracle::laplace_det(m.submatrix(sub, sub));
      EXPECT_EQ(alphas[k], sum);
    }
  }
}

TEST(CcEe, RandomTpMatricesPassForEveryLift) {
  Sampler s(109);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const TropMatrix a = s.monge(n, n, true);
    for (LiftKind kind : {LiftKind::Canonical, LiftKind::Hadamard, LiftKind::Random}) {
      const CcEeReport r = verify_cc_ee(a, kind, trial);
      EXPECT_TRUE(r.all_pass()) << "trial " << trial << " lift " << to_string(kind);
      EXPECT_EQ(valuation(r.lift), a);
    }
  }
  EXPECT_THROW(verify_cc_ee(TropMatrix{{1, 1}, {0, 0}}), NotTP);
}

}  // namespace
}  // namespace tropos
