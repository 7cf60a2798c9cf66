#include "tropos/spectral.hpp"

#include <algorithm>
#include <string>

#include "tropos/errors.hpp"
#include "tropos/positivity.hpp"

namespace tropos {
namespace {

void require_square(const TropMatrix& a, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + " needs a square matrix");
}

// Slope of the segment from (k1, y1) to (k2, y2), k1 < k2.
Rational slope(std::size_t k1, const Rational& y1, std::size_t k2, const Rational& y2) {
  return (y2 - y1) / Rational(static_cast<long>(k2 - k1));
}

}  // namespace

TropScalar TropCharPoly::evaluate(const TropScalar& x) const {
  const std::size_t n = degree();
  TropScalar best = TropScalar::neg_inf();
  for (std::size_t k = 0; k <= n; ++k)
    best = trop_add(best, trop_mul(coeffs[k], trop_pow(x, static_cast<long>(n - k))));
  return best;
}

std::vector<TropScalar> EigenSpectrum::flattened() const {
  std::vector<TropScalar> out;
  for (const auto& [value, mult] : eigenvalues) out.insert(out.end(), mult, value);
  return out;
}

std::size_t EigenSpectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : eigenvalues) total += e.second;
  return total;
}

TropCharPoly char_poly_trop_sorted_diagonal(const TropMatrix& a) {
  require_square(a, "char_poly_trop");
  std::vector<TropScalar> diag;
  for (std::size_t i = 0; i < a.rows(); ++i) diag.push_back(a(i, i));
  std::sort(diag.begin(), diag.end(), std::greater<>());
  TropCharPoly p;
  p.coeffs.push_back(TropScalar::unit());
  for (const auto& d : diag) p.coeffs.push_back(trop_mul(p.coeffs.back(), d));
  return p;
}

TropCharPoly char_poly_trop_bruteforce(const TropMatrix& a, std::size_t cap) {
  require_square(a, "char_poly_trop");
  const std::size_t n = a.rows();
  if (n > cap) throw CapExceeded("principal submatrix enumeration of size " + std::to_string(n) + " exceeds cap");
  TropCharPoly p;
  p.coeffs.assign(n + 1, TropScalar::neg_inf());
  p.coeffs[0] = TropScalar::unit();
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& subset : k_subsets(n, k))
      p.coeffs[k] = trop_add(p.coeffs[k], permanent_assignment(a.submatrix(subset, subset)));
  return p;
}

TropCharPoly char_poly_trop(const TropMatrix& a, std::size_t cap) {
  require_square(a, "char_poly_trop");
  if (is_tn_trop(a).tn_trop) return char_poly_trop_sorted_diagonal(a);
  return char_poly_trop_bruteforce(a, cap);
}

EigenSpectrum concave_hull_slopes(const std::vector<TropScalar>& values) {
  if (values.empty() || values[0].is_neg_inf()) throw DimensionError("hull needs a finite leading value");
  const std::size_t n = values.size() - 1;
  // Upper hull by a monotone chain over the finite points.
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    if (values[k].is_neg_inf()) continue;
    while (hull.size() >= 2) {
      const std::size_t p = hull[hull.size() - 2];
      const std::size_t q = hull.back();
      // Drop q unless the slope strictly decreases at q.
      if (slope(p, values[p].value(), q, values[q].value()) > slope(q, values[q].value(), k, values[k].value())) break;
      hull.pop_back();
    }
    hull.push_back(k);
  }
  EigenSpectrum s;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t p = hull[h];
    const std::size_t q = hull[h + 1];
    s.eigenvalues.emplace_back(slope(p, values[p].value(), q, values[q].value()), q - p);
  }
  const std::size_t last = hull.back();
  if (last < n) s.eigenvalues.emplace_back(TropScalar::neg_inf(), n - last);
  return s;
}

EigenSpectrum tropical_eigenvalues(const TropCharPoly& p) { return concave_hull_slopes(p.coeffs); }

bool is_active(const TropCharPoly& p, std::size_t k) {
  const std::size_t n = p.degree();
  if (k > n) return false;
  for (const auto& [eta, mult] : tropical_eigenvalues(p).eigenvalues) {
    const TropScalar term = trop_mul(p.coeffs[k], trop_pow(eta, static_cast<long>(n - k)));
    if (term == p.evaluate(eta)) return true;  // equality in R_max, so −∞ = −∞ counts
  }
  return false;
}

std::vector<SeriesRat> char_poly_series(const SeriesMatrix& m, std::size_t cap) {
  if (!m.is_square()) throw DimensionError("char_poly_series needs a square matrix");
  const std::size_t n = m.rows();
  if (n > cap) throw CapExceeded("char_poly_series of size " + std::to_string(n) + " exceeds cap");
  std::vector<SeriesRat> alphas(n + 1);
  alphas[0] = SeriesRat(1);
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& subset : k_subsets(n, k)) alphas[k] += det_series(m.submatrix(subset, subset));
  return alphas;
}

EigenSpectrum eigen_valuations_via_newton(const std::vector<SeriesRat>& alphas) {
  if (alphas.empty() || alphas[0] != SeriesRat(1)) throw InconsistentData("characteristic coefficients need α_0 = 1");
  std::vector<TropScalar> vals;
  for (const auto& a : alphas) vals.push_back(valuation(a));
  return concave_hull_slopes(vals);
}

bool CcEeReport::all_pass() const {
  return spectra_match && std::all_of(coeff_match.begin(), coeff_match.end(), [](bool b) { return b; });
}

CcEeReport verify_cc_ee(const TropMatrix& a, LiftKind lift, std::uint64_t seed, std::size_t cap) {
  require_square(a, "verify_cc_ee");
  if (!is_tp_trop(a).tp_trop) throw NotTP("verify_cc_ee needs a TP^trop matrix");
  CcEeReport r;
  r.lift = make_lift(a, lift, seed);
  r.trop = char_poly_trop(a, cap);
  r.alphas = char_poly_series(r.lift, cap);
  for (std::size_t k = 0; k < r.alphas.size(); ++k) r.coeff_match.push_back(valuation(r.alphas[k]) == r.trop.coeffs[k]);
  r.tropical = tropical_eigenvalues(r.trop);
  r.newton = eigen_valuations_via_newton(r.alphas);
  r.spectra_match = r.tropical == r.newton;
  return r;
}

}  // namespace tropos
