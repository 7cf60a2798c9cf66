#include "tropos/regression.hpp"

#include <functional>
#include <initializer_list>

#include "tropos/errors.hpp"
#include "tropos/factorization.hpp"
#include "tropos/grassmannian.hpp"
#include "tropos/monge.hpp"
#include "tropos/networks.hpp"
#include "tropos/positivity.hpp"
#include "tropos/series_field.hpp"
#include "tropos/spectral.hpp"
#include "tropos/trop_core.hpp"

namespace tropos {
namespace {

const TropScalar kBot = TropScalar::neg_inf();

SeriesMatrix series_matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<SeriesRat> entries;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    cols = row.size();
    for (const char* x : row) entries.push_back(parse_series(x));
  }
  return SeriesMatrix(rows.size(), cols, std::move(entries));
}

std::vector<SeriesRat> series_list(std::initializer_list<const char*> xs) {
  std::vector<SeriesRat> out;
  for (const char* x : xs) out.push_back(parse_series(x));
  return out;
}

TropPlucker trop_plucker(std::size_t k, std::size_t n, std::vector<TropScalar> coords) {
  return TropPlucker{k, n, std::move(coords)};
}

std::string spectrum_text(const EigenSpectrum& s) {
  std::string out;
  for (const auto& [v, m] : s.eigenvalues) out += (out.empty() ? "" : ", ") + to_string(v) + " x" + std::to_string(m);
  return "{" + out + "}";
}

struct Check {
  const char* name;
  std::function<std::string()> body;  // empty string on success
};

std::string expect(bool ok, const std::string& why) { return ok ? std::string() : why; }

// Example matrices shared by several checks.
TropMatrix tp_2x2() { return {{2, 1}, {1, 2}}; }
TropMatrix ones_hadamard_counterexample() { return {{0, 0, kBot}, {0, 0, 0}, {kBot, 0, 0}}; }
TropMatrix stiefel_3x2() { return {{0, -2}, {0, -1}, {0, 0}}; }
TropMatrix stiefel_gap_2x4() { return {{0, -1, -2, -3}, {0, 0, 0, 0}}; }

TropNetwork two_wire_network(const TropScalar& alpha) {
  TropNetwork g;
  g.nodes = {{1, 0, 1}, {2, -1, 2}, {3, 2, 2}, {4, 1, 1}, {5, -1, 1}, {6, 2, 1}};
  g.edges = {{5, 1, 0}, {2, 1, 3}, {2, 3, alpha}, {1, 4, 1}, {4, 3, 2}, {4, 6, 0}};
  g.sources = {5, 2};
  g.targets = {6, 3};
  return g;
}

std::vector<Check> checks() {
  return {
      {"permanent_1346_sign_singular",
       [] {
         const TropMatrix a{{1, 3}, {4, 6}};
         const PermanentResult r = permanent_bruteforce(a);
         return expect(r.weight == TropScalar(7) && r.maximizers.size() == 2 &&
                           classify_square(a).tag == MinorTag::SignSingular,
                       "expected weight 7 attained by both permutations");
       }},
      {"permanent_assignment_tp_2x2",
       [] { return expect(permanent_assignment(tp_2x2()) == TropScalar(4), "expected 4"); }},
      {"minor_sign_singular_11_00",
       [] {
         const TropMatrix a{{1, 1}, {0, 0}};
         const MinorClass c = classify_minor(a, {0, 1}, {0, 1});
         return expect(c.tag == MinorTag::SignSingular && c.weight == TropScalar(1), "expected SignSingular, weight 1");
       }},
      {"valuation_two_over_t",
       [] { return expect(valuation(parse_series("2*t^-1")) == TropScalar(-1), "expected -1"); }},
      {"valuation_t2_minus_t", [] { return expect(valuation(parse_series("t^2 - t")) == TropScalar(2), "expected 2"); }},
      {"canonical_lift_tp_2x2",
       [] {
         return expect(canonical_lift(tp_2x2()) == series_matrix({{"t^2", "t"}, {"t", "t^2"}}),
                       "expected [[t^2,t],[t,t^2]]");
       }},
      {"hadamard_all_ones_det_minus_one",
       [] {
         const TropMatrix a = ones_hadamard_counterexample();
         const SeriesMatrix lift = hadamard_lift(a, SeriesMatrix(3, 3, SeriesRat(1)));
         const SeriesRat det = det_series(lift);
         return expect(det == SeriesRat(-1) && !is_tn_series(lift, false) && is_tn_trop(a).tn_trop,
                       "expected det -1 from a TN^trop matrix, got " + to_string(det));
       }},
      {"hadamard_vandermonde_counterexample_tn",
       [] {
         const SeriesMatrix lift = hadamard_lift(ones_hadamard_counterexample(), vandermonde_tp2c(3, 3, 4));
         return expect(is_tn_series(lift, false), "Vandermonde Hadamard lift should be TN");
       }},
      {"det_tp_lift_2x2",
       [] {
         const SeriesRat det = det_series(series_matrix({{"t^2", "t"}, {"t", "t^2"}}));
         return expect(det == parse_series("t^4 - t^2"), "got " + to_string(det));
       }},
      {"det_near_singular_lift",
       [] {
         const SeriesRat det = det_series(series_matrix({{"1", "1"}, {"1 - t^-1", "1 + t^-1"}}));
         return expect(det == parse_series("2*t^-1") && valuation(det) == TropScalar(-1) &&
                           permanent_assignment(TropMatrix{{0, 0}, {0, 0}}) == TropScalar(0),
                       "got " + to_string(det));
       }},
      {"tp_series_2t_t_1_1",
       [] {
         const SeriesMatrix m = series_matrix({{"2*t", "t"}, {"1", "1"}});
         return expect(is_tn_series(m, true) && !is_tp_trop(valuation(m)).tp_trop,
                       "expected TP over K with valuation outside TP^trop");
       }},
      {"tp_trop_rejects_11_00", [] { return expect(!is_tp_trop(TropMatrix{{1, 1}, {0, 0}}).tp_trop, "expected false"); }},
      {"tp_trop_rejects_neg_inf",
       [] { return expect(!is_tp_trop(TropMatrix{{2, kBot}, {1, 2}}).tp_trop, "expected false"); }},
      {"tn_trop_gap_column_counterexample",
       [] {
         const TropMatrix a{{2, kBot, 2}, {2, kBot, 0}};
         const PositivityReport r = is_tn_trop(a);
         return expect(!r.tn_trop && !bruteforce_class_oracle(a).tn_trop, "expected not TN^trop");
       }},
      {"initial_minors_not_enough_for_tn",
       [] {
         const TropMatrix a{{1, 1, 1}, {1, 1, 3}, {2, 2, 1}};
         bool initial_nonneg = true;
         for (std::size_t i = 0; i < 3; ++i)
           for (std::size_t j = 0; j < 3; ++j) {
             const std::size_t k = std::min(i, j) + 1;
             IndexSet rows, cols;
             for (std::size_t t = 0; t < k; ++t) {
               rows.push_back(i + 1 - k + t);
               cols.push_back(j + 1 - k + t);
             }
             initial_nonneg = initial_nonneg && classify_minor(a, rows, cols).is_nonnegative();
           }
         const MinorClass bottom_right = classify_minor(a, {1, 2}, {1, 2});
         return expect(initial_nonneg && !is_tn_trop(a).tn_trop && bottom_right.tag == MinorTag::TropNegative,
                       "expected nonnegative initial minors and a negative bottom-right 2x2 minor");
       }},
      {"double_echelon_4x5_pattern",
       [] {
         const TropMatrix e{{1, 1, 3, kBot, kBot}, {kBot, 2, 1, 2, kBot}, {kBot, 1, 1, 1, 3}, {kBot, kBot, 1, 1, 1}};
         const BoolMatrix expected{{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, 1, 1, 1}};
         return expect(support_pattern(e) == expected && is_double_echelon(e),
                       "pattern or echelon check mismatch");
       }},
      {"staircase_3x3_two_steps",
       [] {
         const TropMatrix a{{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}};
         const StaircaseDecomposition d = staircase_decompose(a);
         const Matrix<Rational> expected{{Rational(2), Rational(0)}, {Rational(0), Rational(2)}};
         return expect(d.lambda == expected && staircase_reconstruct(d) == a,
                       "expected lambda_22 = lambda_33 = 2 and an exact round trip");
       }},
      {"char_poly_tp_2x2",
       [] {
         const TropCharPoly p = char_poly_trop(tp_2x2());
         const EigenSpectrum s = tropical_eigenvalues(p);
         const EigenSpectrum expected{{{TropScalar(2), 2}}};
         return expect(p.coeffs == std::vector<TropScalar>{0, 2, 4} && s == expected,
                       "got spectrum " + spectrum_text(s));
       }},
      {"char_poly_valuation_11_00",
       [] {
         const TropCharPoly p = char_poly_trop(TropMatrix{{1, 1}, {0, 0}});
         return expect(p.coeffs == std::vector<TropScalar>{0, 1, 1}, "expected (0, 1, 1)");
       }},
      {"char_poly_series_tp_lift",
       [] {
         const auto alphas = char_poly_series(series_matrix({{"t^2", "t"}, {"t", "t^2"}}));
         const EigenSpectrum newton = eigen_valuations_via_newton(alphas);
         const EigenSpectrum expected{{{TropScalar(2), 2}}};
         return expect(alphas == series_list({"1", "2*t^2", "t^4 - t^2"}) && newton == expected,
                       "got Newton slopes " + spectrum_text(newton));
       }},
      {"char_poly_series_non_tp_valuation",
       [] {
         const auto alphas = char_poly_series(series_matrix({{"t + 1", "t"}, {"1", "1"}}));
         const EigenSpectrum newton = eigen_valuations_via_newton(alphas);
         const EigenSpectrum tropical = tropical_eigenvalues(char_poly_trop(TropMatrix{{1, 1}, {0, 0}}));
         const EigenSpectrum expected{{{TropScalar(1), 1}, {TropScalar(-1), 1}}};
         return expect(alphas == series_list({"1", "t + 2", "1"}) && newton == expected && !(newton == tropical),
                       "got Newton slopes " + spectrum_text(newton));
       }},
      {"spectrum_tn_is_diagonal",
       [] {
         const TropMatrix a{{3, 1, 0}, {2, 1, 0}, {0, 0, 0}};
         const EigenSpectrum s = tropical_eigenvalues(char_poly_trop(a));
         const EigenSpectrum expected{{{TropScalar(3), 1}, {TropScalar(1), 1}, {TropScalar(0), 1}}};
         return expect(is_tn_trop(a).tn_trop && s == expected, "got " + spectrum_text(s));
       }},
      {"cc_ee_tp_2x2_canonical_lift",
       [] { return expect(verify_cc_ee(tp_2x2(), LiftKind::Canonical).all_pass(), "coefficient or slope mismatch"); }},
      {"cc_ee_rejects_11_00",
       [] {
         try {
           verify_cc_ee(TropMatrix{{1, 1}, {0, 0}});
         } catch (const NotTP&) {
           return std::string();
         }
         return std::string("expected NotTP");
       }},
      {"iota_3x2",
       [] {
         const TropMatrix expected{{0, kBot, kBot, 0, 0}, {kBot, 0, kBot, 0, -1}, {kBot, kBot, 0, 0, -2}};
         return expect(iota_trop(stiefel_3x2()) == expected, "block embedding mismatch");
       }},
      {"plucker_stiefel_3x2",
       [] {
         const TropPlucker p = stiefel_trop(stiefel_3x2());
         return expect(p == trop_plucker(3, 5, {0, 0, -2, 0, -1, -1, 0, 0, 0, 0}), "coordinate mismatch");
       }},
      {"plucker_series_stiefel_3x2",
       [] {
         const SeriesMatrix lifted = iota_series(canonical_lift(stiefel_3x2()));
         const SeriesMatrix expected = series_matrix({{"1", "0", "0", "1", "1"},
                                                      {"0", "1", "0", "-1", "-t^-1"},
                                                      {"0", "0", "1", "1", "t^-2"}});
         const SeriesPlucker p = plucker_series(lifted);
         const SeriesPlucker want{3, 5,
                                  series_list({"1", "1", "t^-2", "1", "t^-1", "t^-1 - t^-2", "1", "1", "1 - t^-2",
                                               "1 - t^-1"})};
         const LiftCertificate cert = certify_plucker_lift(iota_trop(stiefel_3x2()), lifted);
         return expect(lifted == expected && p == want && cert.all_positive && cert.valuations_match,
                       "series embedding or coordinates mismatch");
       }},
      {"stiefel_invert_3x2",
       [] {
         const StiefelInversion inv = invert_stiefel(trop_plucker(3, 5, {0, 0, -2, 0, -1, -1, 0, 0, 0, 0}));
         return expect(inv.in_image && inv.candidate == stiefel_3x2(), "expected to recover B");
       }},
      {"plucker_gap_2x4",
       [] {
         const TropPlucker p = plucker_trop(stiefel_gap_2x4());
         const SeriesPlucker ps = plucker_series(canonical_lift(stiefel_gap_2x4()));
         const SeriesPlucker want{2, 4,
                                  series_list({"1 - t^-1", "1 - t^-2", "1 - t^-3", "t^-1 - t^-2", "t^-1 - t^-3",
                                               "t^-2 - t^-3"})};
         const LiftCertificate cert = certify_plucker_lift(stiefel_gap_2x4(), canonical_lift(stiefel_gap_2x4()));
         return expect(p == trop_plucker(2, 4, {0, 0, 0, -1, -1, -2}) && ps == want && cert.all_positive &&
                           cert.valuations_match,
                       "coordinate mismatch");
       }},
      {"stiefel_invert_gap_2x4_not_in_image",
       [] {
         const StiefelInversion inv = invert_stiefel(trop_plucker(2, 4, {0, 0, 0, -1, -1, -2}));
         const TropMatrix candidate{{0, 0}, {-1, -1}};
         const bool ok = !inv.in_image && inv.candidate == candidate && inv.mismatch &&
                         inv.mismatch->subset == IndexSet{2, 3} && inv.mismatch->expected == TropScalar(-2) &&
                         inv.mismatch->computed == TropScalar(-1);
         return expect(ok, "expected a mismatch at {3,4}: -2 vs -1");
       }},
      {"network_two_wire_weight_matrix",
       [] {
         const TropMatrix expected{{1, 3}, {4, 6}};
         bool ok = weight_matrix_trop(two_wire_network(6)) == expected;
         for (long alpha = -2; alpha <= 6; ++alpha) ok = ok && weight_matrix_trop(two_wire_network(alpha)) == expected;
         return expect(ok, "expected [[1,3],[4,6]] for every alpha <= 6");
       }},
      {"factor_tp_2x2",
       [] {
         const std::vector<JacobiFactor> fs = factor_tn(tp_2x2());
         const std::vector<JacobiFactor> expected{{JacobiKind::Lower, 0, -1},
                                                  {JacobiKind::Diag, 0, 2},
                                                  {JacobiKind::Diag, 1, 2},
                                                  {JacobiKind::Upper, 0, -1}};
         return expect(fs == expected && multiply_factors(fs, 2) == tp_2x2(), "unexpected factor sequence");
       }},
      {"factor_hadamard_counterexample",
       [] {
         const TropMatrix a = ones_hadamard_counterexample();
         return expect(multiply_factors(factor_tn(a), 3) == a, "factor product differs");
       }},
  };
}

}  // namespace

std::vector<RegressionResult> run_regression_suite() {
  std::vector<RegressionResult> out;
  for (const auto& c : checks()) {
    RegressionResult r{c.name, false, {}};
    try {
      r.detail = c.body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tropos
