#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tropos/matrix.hpp"
#include "tropos/sampling.hpp"
#include "tropos/series_field.hpp"
#include "tropos/trop_core.hpp"

namespace tropos {

// coeffs[k] = a_k, the best weight of a k×k principal minor; a_0 = 0.
// f_A(x) = max_k (a_k + (n−k)·x).
struct TropCharPoly {
  std::vector<TropScalar> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  TropScalar evaluate(const TropScalar& x) const;

  friend bool operator==(const TropCharPoly&, const TropCharPoly&) = default;
};

// Distinct eigenvalues in decreasing order with multiplicities summing to n;
// −∞, if present, comes last.
struct EigenSpectrum {
  std::vector<std::pair<TropScalar, std::size_t>> eigenvalues;

  // Each eigenvalue repeated by its multiplicity, decreasing.
  std::vector<TropScalar> flattened() const;
  std::size_t total_multiplicity() const;

  friend bool operator==(const EigenSpectrum&, const EigenSpectrum&) = default;
};

// Chooses the sorted-diagonal formula when A ∈ TN^trop, enumeration of
// principal submatrices otherwise. Throws DimensionError, and CapExceeded if
// A ∉ TN^trop and n > cap.
TropCharPoly char_poly_trop(const TropMatrix& a, std::size_t cap = kDefaultEnumerationCap);
// a_k = max over k-subsets I of per(A_{I,I}), by optimal assignment per
// subset. Throws CapExceeded if n > cap.
TropCharPoly char_poly_trop_bruteforce(const TropMatrix& a, std::size_t cap = kDefaultEnumerationCap);
// a_k = sum of the k largest diagonal entries. Valid for A ∈ TN^trop.
TropCharPoly char_poly_trop_sorted_diagonal(const TropMatrix& a);

// Slopes of the upper concave hull of the points (k, values[k]) for finite
// values, with horizontal lengths as multiplicities; values[0] must be
// finite. If K is the last finite index, −∞ gets multiplicity (size−1) − K.
EigenSpectrum concave_hull_slopes(const std::vector<TropScalar>& values);

EigenSpectrum tropical_eigenvalues(const TropCharPoly& p);

// f_A(η) = a_k ⊙ η^{n−k} in R_max for some eigenvalue η (η = −∞ included).
bool is_active(const TropCharPoly& p, std::size_t k);

// alpha[k] = sum of the k×k principal minors; alpha[0] = 1. Throws
// DimensionError and CapExceeded if n > cap.
std::vector<SeriesRat> char_poly_series(const SeriesMatrix& m, std::size_t cap = 7);

// Valuations of the roots of λ^n + Σ (−1)^{n−i} α_{n−i} λ^i, read off the
// Newton polygon: the hull slopes over (k, val α_k). Throws InconsistentData
// unless α_0 = 1.
EigenSpectrum eigen_valuations_via_newton(const std::vector<SeriesRat>& alphas);

struct CcEeReport {
  SeriesMatrix lift;
  TropCharPoly trop;
  std::vector<SeriesRat> alphas;
  std::vector<bool> coeff_match;  // val α_k = a_k
  EigenSpectrum tropical;
  EigenSpectrum newton;
  bool spectra_match = false;

  bool all_pass() const;
};

// For A ∈ TP^trop: lifts A, then compares val α_k with a_k for every k and
// the Newton slopes with the tropical spectrum. Throws NotTP.
CcEeReport verify_cc_ee(const TropMatrix& a, LiftKind lift = LiftKind::Random, std::uint64_t seed = 0,
                        std::size_t cap = 7);

}  // namespace tropos
