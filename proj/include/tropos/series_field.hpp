#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "tropos/matrix.hpp"
#include "tropos/series.hpp"
#include "tropos/trop_core.hpp"

namespace tropos {

using SeriesMatrix = Matrix<SeriesRat>;

SeriesMatrix series_identity(std::size_t n);
SeriesMatrix series_product(const SeriesMatrix& a, const SeriesMatrix& b);

// Entrywise valuation.
TropMatrix valuation(const SeriesMatrix& m);

// A_{ij} ↦ t^{A_{ij}}, with −∞ ↦ 0.
SeriesMatrix canonical_lift(const TropMatrix& a);

// Entrywise B_{ij}·t^{A_{ij}}. Throws DimensionError on a shape mismatch.
SeriesMatrix hadamard_lift(const TropMatrix& a, const SeriesMatrix& b);

// V_{ij} = λ_i^{j-1} with λ_i = base^{i-1}; base defaults to C + 1. Every
// consecutive ratio λ_{i+1}/λ_i = base exceeds C, so V ∈ TP_{2,C}.
// Throws DimensionError if C < 1 or base ≤ C.
SeriesMatrix vandermonde_tp2c(std::size_t n, std::size_t m, const Rational& c,
                              std::optional<Rational> base = std::nullopt);

// Exact determinant. Division-free cofactor recursion over column subsets
// for n ≤ 12, fraction-field Gaussian elimination above that.
SeriesRat det_series(const SeriesMatrix& m);

// Row and column subsets as bitmasks (bit i = index i).
struct MinorKey {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
};

// Visits every k×k minor for k = 1..min(n,m), in increasing k, with its
// exact determinant. The visitor returns false to stop early. Minors of size
// k are computed from those of size k-1 by expansion along the last row, so
// no division occurs. Throws CapExceeded if min(n,m) > cap.
void for_each_minor(const SeriesMatrix& m, std::size_t cap,
                    const std::function<bool(const MinorKey&, const SeriesRat&)>& visit);

// Every minor positive (strict) or nonnegative. Throws CapExceeded if
// min(n,m) > cap.
bool is_tn_series(const SeriesMatrix& m, bool strict, std::size_t cap = kDefaultEnumerationCap);

// M_{ij}·M_{i'j'} ≥ C·M_{ij'}·M_{i'j} (strictly, if requested) for all
// i < i', j < j'.
bool is_tn2c(const SeriesMatrix& m, const Rational& c, bool strict);

IndexSet mask_to_indices(std::uint32_t mask);
std::uint32_t indices_to_mask(const IndexSet& indices);

}  // namespace tropos
