#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropos/errors.hpp"
#include "tropos/grassmannian.hpp"
#include "tropos/positivity.hpp"
#include "tropos/sampling.hpp"

namespace tropos {
namespace {

using oracle::kBot;

const TropMatrix kStaircase3x2{{0, -2}, {0, -1}, {0, 0}};
const TropMatrix kGap2x4{{0, -1, -2, -3}, {0, 0, 0, 0}};

TEST(Subsets, RankIsLexicographicPosition) {
  const auto all = oracle::subsets(5, 3);
  for (std::size_t r = 0; r < all.size(); ++r) EXPECT_EQ(subset_rank(all[r], 5), r);
}

TEST(Subsets, CorrespondenceForSingleEntries) {
  // 0-based with k = 3: entry (i, j) ↦ ([3] ∖ {2−i}) ∪ {3+j}.
  EXPECT_EQ(corres_subset({0}, {0}, 3), (IndexSet{0, 1, 3}));
  EXPECT_EQ(corres_subset({2}, {1}, 3), (IndexSet{1, 2, 4}));
  EXPECT_EQ(corres_subset({}, {}, 3), (IndexSet{0, 1, 2}));
}

TEST(Plucker, MatchesPermanentsOfMaximalMinors) {
  Sampler s(113);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + trial % 3, n = k + 1 + trial % 3;
    const TropMatrix a = s.matrix(k, n, 0.2);
    const TropPlucker p = plucker_trop(a);
    const auto subs = oracle::subsets(n, k);
    ASSERT_EQ(p.coords.size(), subs.size());
    IndexSet rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    for (std::size_t r = 0; r < subs.size(); ++r) EXPECT_EQ(p.coords[r], oracle::permanent(a.submatrix(rows, subs[r])));
  }
  EXPECT_THROW(plucker_trop(TropMatrix(3, 2)), DimensionError);
}

TEST(Stiefel, ThreeByTwoExample) {
  EXPECT_EQ(iota_trop(kStaircase3x2),
            (TropMatrix{{0, kBot, kBot, 0, 0}, {kBot, 0, kBot, 0, -1}, {kBot, kBot, 0, 0, -2}}));
  const TropPlucker p = stiefel_trop(kStaircase3x2);
  EXPECT_EQ(p.coords, (std::vector<TropScalar>{0, 0, -2, 0, -1, -1, 0, 0, 0, 0}));
  const StiefelInversion inv = invert_stiefel(p);
  EXPECT_TRUE(inv.in_image);
  EXPECT_EQ(inv.candidate, kStaircase3x2);
  EXPECT_FALSE(inv.mismatch.has_value());
}

TEST(Stiefel, SeriesEmbeddingSigns) {
  const SeriesMatrix b = canonical_lift(kStaircase3x2);
  const SeriesMatrix e = iota_series(b);
  EXPECT_EQ(e(0, 3), SeriesRat(1));
  EXPECT_EQ(e(1, 3), SeriesRat(-1));
  EXPECT_EQ(e(1, 4), parse_series("-t^-1"));
  EXPECT_EQ(e(2, 4), parse_series("t^-2"));
  const SeriesPlucker p = plucker_series(e);
  EXPECT_EQ(p.coords[5], parse_series("t^-1 - t^-2"));
  EXPECT_EQ(p.coords[8], parse_series("1 - t^-2"));
  for (const auto& x : p.coords) EXPECT_EQ(sign_of(x), Sign::Positive);
}

TEST(Stiefel, GapExampleIsNotInTheImage) {
  const TropPlucker p = plucker_trop(kGap2x4);
  EXPECT_EQ(p.coords, (std::vector<TropScalar>{0, 0, 0, -1, -1, -2}));
  const StiefelInversion inv = invert_stiefel(p);
  EXPECT_FALSE(inv.in_image);
  EXPECT_EQ(inv.candidate, (TropMatrix{{0, 0}, {-1, -1}}));
  ASSERT_TRUE(inv.mismatch.has_value());
  EXPECT_EQ(inv.mismatch->subset, (IndexSet{2, 3}));
  EXPECT_EQ(inv.mismatch->expected, TropScalar(-2));
  EXPECT_EQ(inv.mismatch->computed, TropScalar(-1));
  const LiftCertificate cert = certify_plucker_lift(kGap2x4, canonical_lift(kGap2x4));
  EXPECT_TRUE(cert.all_positive);
  EXPECT_TRUE(cert.valuations_match);
}

TEST(Stiefel, InversionIsProjective) {
  TropPlucker p = stiefel_trop(kStaircase3x2);
  for (auto& x : p.coords) x = trop_mul(x, TropScalar(Rational(7, 3)));
  EXPECT_TRUE(projectively_equal(p, stiefel_trop(kStaircase3x2)));
  const StiefelInversion inv = invert_stiefel(p);
  EXPECT_TRUE(inv.in_image);
  EXPECT_EQ(inv.candidate, kStaircase3x2);
}

TEST(Stiefel, InversionRoundTripOnRandomMonge) {
  Sampler s(127);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 3, m = 1 + (trial / 3) % 3;
    const TropMatrix b = s.monge(k, m);
    const StiefelInversion inv = invert_stiefel(stiefel_trop(b));
    EXPECT_TRUE(inv.in_image) << "trial " << trial;
    EXPECT_EQ(inv.candidate, b) << "trial " << trial;
    EXPECT_TRUE(inv.candidate_tn);
  }
}

TEST(Stiefel, LiftsOfMongeMatricesHavePositiveCoordinates) {
  Sampler s(131);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + trial % 3, m = 1 + (trial / 3) % 3;
    const LiftCertificate cert = certify_stiefel_lift(s.monge(k, m));
    EXPECT_TRUE(cert.all_positive) << "trial " << trial;
    EXPECT_TRUE(cert.valuations_match) << "trial " << trial;
  }
}

TEST(Stiefel, MalformedVectors) {
  EXPECT_THROW(invert_stiefel(TropPlucker{2, 4, {0, 0, 0}}), MalformedVector);
  EXPECT_THROW(invert_stiefel(TropPlucker{2, 4, {kBot, 0, 0, 0, 0, 0}}), MalformedVector);
}

TEST(Projective, SeriesAndTropicalEquality) {
  const TropPlucker p{2, 3, {0, 1, kBot}}, q{2, 3, {2, 3, kBot}}, r{2, 3, {2, 3, 0}};
  EXPECT_TRUE(projectively_equal(p, q));
  EXPECT_FALSE(projectively_equal(p, r));
  const SeriesPlucker a{2, 3, {SeriesRat(1), parse_series("t"), SeriesRat()}};
  const SeriesPlucker b{2, 3, {parse_series("2*t"), parse_series("2*t^2"), SeriesRat()}};
  EXPECT_TRUE(projectively_equal(a, b));
  EXPECT_FALSE(projectively_equal(a, SeriesPlucker{2, 3, {SeriesRat(1), SeriesRat(1), SeriesRat()}}));
}

}  // namespace
}  // namespace tropos
