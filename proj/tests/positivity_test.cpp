#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropos/errors.hpp"
#include "tropos/positivity.hpp"
#include "tropos/sampling.hpp"
#include "tropos/series_field.hpp"

namespace tropos {
namespace {

using oracle::kBot;

TEST(Positivity, WorkedExamples) {
  EXPECT_TRUE(is_tp_trop(TropMatrix{{2, 1}, {1, 2}}).tp_trop);
  EXPECT_FALSE(is_tp_trop(TropMatrix{{1, 1}, {0, 0}}).tp_trop);
  EXPECT_TRUE(is_tn_trop(TropMatrix{{1, 1}, {0, 0}}).tn_trop);
  EXPECT_FALSE(is_tp_trop(TropMatrix{{2, kBot}, {1, 2}}).tp_trop);
  EXPECT_FALSE(is_tn_trop(TropMatrix{{2, kBot, 2}, {2, kBot, 0}}).tn_trop);
  EXPECT_FALSE(is_tn_trop(TropMatrix{{1, 1, 1}, {1, 1, 3}, {2, 2, 1}}).tn_trop);
}

TEST(Positivity, WitnessIsFirstFailingMinor) {
  const PositivityReport r = is_tp_trop(TropMatrix{{1, 1}, {0, 0}});
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->rows, (IndexSet{0, 1}));
  EXPECT_EQ(r.witness->cls.tag, MinorTag::SignSingular);
  EXPECT_FALSE(is_tp_trop(TropMatrix{{2, 1}, {1, 2}}).witness.has_value());
  const PositivityReport bot = is_tp_trop(TropMatrix{{2, kBot}, {1, 2}});
  ASSERT_TRUE(bot.witness.has_value());
  EXPECT_EQ(bot.witness->rows, IndexSet{0});
  EXPECT_EQ(bot.witness->cols, IndexSet{1});
}

// The 2x2 criterion against classification of every minor.
TEST(Positivity, AgreesWithBruteForceOracle) {
  Sampler s(41, 2);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    const TropMatrix a = trial % 3 == 0 ? s.tn_masked(n, m, 0.25) : s.matrix(n, m, 0.2, -2, 2);
    const PositivityReport fast_tn = is_tn_trop(a), fast_tp = is_tp_trop(a);
    const PositivityReport slow_tn = bruteforce_class_oracle(a, false), slow_tp = bruteforce_class_oracle(a, true);
    ASSERT_EQ(fast_tn.tn_trop, slow_tn.tn_trop) << "trial " << trial;
    ASSERT_EQ(fast_tp.tp_trop, slow_tp.tp_trop) << "trial " << trial;
    EXPECT_EQ(fast_tn.tp2, slow_tn.tp2);
    EXPECT_EQ(fast_tn.tn2, slow_tn.tn2);
    EXPECT_EQ(fast_tn.dd, slow_tn.dd);
    EXPECT_EQ(fast_tn.ndd, slow_tn.ndd);
    EXPECT_EQ(fast_tn.witness.has_value(), slow_tn.witness.has_value());
    if (fast_tn.witness && slow_tn.witness) {
      EXPECT_EQ(fast_tn.witness->rows, slow_tn.witness->rows) << "trial " << trial;
      EXPECT_EQ(fast_tn.witness->cols, slow_tn.witness->cols) << "trial " << trial;
    }
    if (fast_tp.witness && slow_tp.witness) {
      EXPECT_EQ(fast_tp.witness->rows, slow_tp.witness->rows) << "trial " << trial;
      EXPECT_EQ(fast_tp.witness->cols, slow_tp.witness->cols) << "trial " << trial;
    }
  }
}

// TN^trop implies DD on square matrices, TP^trop implies strict DD.
TEST(Positivity, TotalNonnegativityImpliesDiagonalDominance) {
  Sampler s(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const TropMatrix a = s.tn_masked(n, n, 0.2);
    const PositivityReport r = is_tn_trop(a);
    if (r.tn_trop) EXPECT_TRUE(r.dd) << "trial " << trial;
    const TropMatrix b = s.monge(n, n, true);
    EXPECT_TRUE(is_tp_trop(b).ndd);
  }
}

TEST(Positivity, InitialMinorsDecideFiniteTp) {
  Sampler s(47);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    const TropMatrix a = trial % 2 ? s.monge(n, m, true) : s.matrix(n, m, 0.0, -3, 3);
    EXPECT_EQ(is_tp_trop_via_initial(a), is_tp_trop(a).tp_trop) << "trial " << trial;
  }
  EXPECT_THROW(is_tp_trop_via_initial(TropMatrix{{kBot}}), InfiniteEntry);
}

TEST(Positivity, InitialMinorsAloneDoNotDecideTn) {
  const TropMatrix a{{1, 1, 1}, {1, 1, 3}, {2, 2, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t k = std::min(i, j) + 1;
      IndexSet rows, cols;
      for (std::size_t t = 0; t < k; ++t) {
        rows.push_back(i + 1 - k + t);
        cols.push_back(j + 1 - k + t);
      }
      EXPECT_TRUE(classify_minor(a, rows, cols).is_nonnegative());
    }
  EXPECT_FALSE(is_tn_trop(a).tn_trop);
}

TEST(Positivity, SolidMinorReconstructionRoundTrips) {
  Sampler s(53);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    const TropMatrix a = s.monge(n, m, trial % 2 == 0);
    std::vector<TropScalar> row, col;
    for (std::size_t j = 0; j < m; ++j) row.push_back(a(0, j));
    for (std::size_t i = 0; i < n; ++i) col.push_back(a(i, 0));
    const TropMatrix minors = solid_minor_permanents(a);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < m; ++j)
        EXPECT_EQ(minors(i, j), oracle::permanent(a.submatrix(IndexSet{i, i + 1}, IndexSet{j, j + 1})));
    EXPECT_EQ(reconstruct_from_solid_minors(row, col, minors), a) << "trial " << trial;
  }
}

TEST(Positivity, SolidMinorReconstructionRejectsBadData) {
  EXPECT_THROW(reconstruct_from_solid_minors({0, kBot}, {0, 0}, TropMatrix{{0}}), InfiniteEntry);
  // per of [[0,0],[0,x]] is max(x, 0) ≥ 0, so -1 is unattainable.
  EXPECT_THROW(reconstruct_from_solid_minors({0, 0}, {0, 0}, TropMatrix{{-1}}), InconsistentData);
}

// Every minor of a TN^trop matrix has tropical value equal to the valuation
// of the corresponding minor of a Hadamard Vandermonde lift.
TEST(Positivity, ValuationOfLiftedMinorsMatchesPermanents) {
  Sampler s(59);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const TropMatrix a = s.monge(n, n);
    const SeriesMatrix lift = hadamard_lift(a, vandermonde_tp2c(n, n, (n - 1) * (n - 1)));
    for_each_minor(lift, 9, [&](const MinorKey& key, const SeriesRat& det) {
      const IndexSet rows = mask_to_indices(key.rows), cols = mask_to_indices(key.cols);
      EXPECT_GT(sign_of(det), Sign::Zero);
      EXPECT_EQ(valuation(det), oracle::permanent(a.submatrix(rows, cols)));
      return true;
    });
  }
}

}  // namespace
}  // namespace tropos
