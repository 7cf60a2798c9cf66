#include "tropos/positivity.hpp"

#include <algorithm>

#include "tropos/errors.hpp"

namespace tropos {
namespace {

MinorClass classify_1x1(const TropScalar& x) {
  return {x.is_finite() ? MinorTag::TropPositive : MinorTag::Bottom, x};
}

MinorClass classify_2x2(const TropMatrix& a, std::size_t i, std::size_t i2, std::size_t j, std::size_t j2) {
  const TropScalar diag = trop_mul(a(i, j), a(i2, j2));
  const TropScalar anti = trop_mul(a(i, j2), a(i2, j));
  const TropScalar weight = trop_add(diag, anti);
  if (weight.is_neg_inf()) return {MinorTag::Bottom, weight};
  if (diag == anti) return {MinorTag::SignSingular, weight};
  return {diag > anti ? MinorTag::TropPositive : MinorTag::TropNegative, weight};
}

bool accepts(const MinorClass& c, bool strict) { return strict ? c.is_positive() : c.is_nonnegative(); }

// Lexicographically first failing minor of size 1 or 2.
std::optional<MinorWitness> small_minor_witness(const TropMatrix& a, bool strict) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const MinorClass c = classify_1x1(a(i, j));
      if (!accepts(c, strict)) return MinorWitness{{i}, {j}, c};
    }
  for (const auto& rows : k_subsets(a.rows(), 2))
    for (const auto& cols : k_subsets(a.cols(), 2)) {
      const MinorClass c = classify_2x2(a, rows[0], rows[1], cols[0], cols[1]);
      if (!accepts(c, strict)) return MinorWitness{rows, cols, c};
    }
  return std::nullopt;
}

bool consecutive_monge(const TropMatrix& a, bool strict) {
  for (std::size_t i = 0; i + 1 < a.rows(); ++i)
    for (std::size_t j = 0; j + 1 < a.cols(); ++j)
      if (!accepts(classify_2x2(a, i, i + 1, j, j + 1), strict)) return false;
  return true;
}

TropMatrix leading_square_block(const TropMatrix& a) {
  const IndexSet idx = full_index_set(std::min(a.rows(), a.cols()));
  return a.submatrix(idx, idx);
}

// TP^trop and TN^trop via the 2x2 reductions, together with the remaining
// flags computed independently.
PositivityReport fast_report(const TropMatrix& a, std::size_t cap) {
  PositivityReport r;
  const bool finite = is_finite(a);
  r.tp2 = !small_minor_witness(a, true);
  r.tn2 = !small_minor_witness(a, false);
  r.tp_trop = finite && consecutive_monge(a, true);
  r.tn_trop = finite ? consecutive_monge(a, false) : r.tn2;
  const TropMatrix block = leading_square_block(a);
  r.dd = is_diag_dominant(block, false, cap);
  r.ndd = is_diag_dominant(block, true, cap);
  return r;
}

}  // namespace

PositivityReport is_tp_trop(const TropMatrix& a, std::size_t cap) {
  PositivityReport r = fast_report(a, cap);
  if (!r.tp_trop) r.witness = small_minor_witness(a, true);
  return r;
}

PositivityReport is_tn_trop(const TropMatrix& a, std::size_t cap) {
  PositivityReport r = fast_report(a, cap);
  if (!r.tn_trop) r.witness = small_minor_witness(a, false);
  return r;
}

bool is_tp_trop_via_initial(const TropMatrix& a, std::size_t cap) {
  if (!is_finite(a)) throw InfiniteEntry("is_tp_trop_via_initial needs finite entries");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::size_t k = std::min(i, j) + 1;
      IndexSet rows(k), cols(k);
      for (std::size_t t = 0; t < k; ++t) {
        rows[t] = i + 1 - k + t;
        cols[t] = j + 1 - k + t;
      }
      if (!classify_minor(a, rows, cols, cap).is_positive()) return false;
    }
  return true;
}

TropMatrix solid_minor_permanents(const TropMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionError("solid_minor_permanents needs a nonempty matrix");
  TropMatrix m(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0; i + 1 < a.rows(); ++i)
    for (std::size_t j = 0; j + 1 < a.cols(); ++j) m(i, j) = classify_2x2(a, i, i + 1, j, j + 1).weight;
  return m;
}

TropMatrix reconstruct_from_solid_minors(const std::vector<TropScalar>& first_row,
                                         const std::vector<TropScalar>& first_col, const TropMatrix& minors) {
  const std::size_t n = first_col.size();
  const std::size_t m = first_row.size();
  if (n == 0 || m == 0) throw DimensionError("reconstruction needs a nonempty first row and column");
  if (minors.rows() != n - 1 || minors.cols() != m - 1) throw DimensionError("solid minor grid has the wrong shape");
  for (const auto& x : first_row)
    if (x.is_neg_inf()) throw InfiniteEntry("first row must be finite");
  for (const auto& x : first_col)
    if (x.is_neg_inf()) throw InfiniteEntry("first column must be finite");
  if (!is_finite(minors)) throw InfiniteEntry("solid minors must be finite");
  if (first_row[0] != first_col[0]) throw InconsistentData("first row and column disagree at the corner");

  TropMatrix a(n, m);
  for (std::size_t j = 0; j < m; ++j) a(0, j) = first_row[j];
  for (std::size_t i = 0; i < n; ++i) a(i, 0) = first_col[i];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < m; ++j) a(i, j) = Rational(minors(i - 1, j - 1).value() - a(i - 1, j - 1).value());

  if (solid_minor_permanents(a) != minors || !consecutive_monge(a, false)) {
    throw InconsistentData("no TN^trop matrix has these solid minors");
  }
  return a;
}

PositivityReport bruteforce_class_oracle(const TropMatrix& a, bool strict, std::size_t cap) {
  const std::size_t k_max = std::min(a.rows(), a.cols());
  if (k_max > cap) throw CapExceeded("oracle minor enumeration exceeds cap");
  PositivityReport r;
  r.tp_trop = r.tn_trop = r.tp2 = r.tn2 = true;
  for (std::size_t k = 1; k <= k_max; ++k)
    for (const auto& rows : k_subsets(a.rows(), k))
      for (const auto& cols : k_subsets(a.cols(), k)) {
        const MinorClass c = classify_minor(a, rows, cols, cap);
        if (!c.is_positive()) {
          r.tp_trop = false;
          if (k <= 2) r.tp2 = false;
        }
        if (!c.is_nonnegative()) {
          r.tn_trop = false;
          if (k <= 2) r.tn2 = false;
        }
        if (!r.witness && !accepts(c, strict)) r.witness = MinorWitness{rows, cols, c};
      }
  const TropMatrix block = leading_square_block(a);
  r.dd = is_diag_dominant_bruteforce(block, false, cap);
  r.ndd = is_diag_dominant_bruteforce(block, true, cap);
  return r;
}

}  // namespace tropos
