#include "tropos/series_field.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "tropos/errors.hpp"

namespace tropos {
namespace {

void require_square(const SeriesMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + " needs a square matrix");
}

std::uint64_t pack(std::uint32_t rows, std::uint32_t cols) {
  return (static_cast<std::uint64_t>(rows) << 32) | cols;
}

// Determinant by expansion along successive rows, memoized on the set of
// columns still available. Level r holds the minors on rows 0..r-1.
SeriesRat det_by_cofactors(const SeriesMatrix& m) {
  const std::size_t n = m.rows();
  std::unordered_map<std::uint32_t, SeriesRat> level{{0u, SeriesRat(1)}};
  for (std::size_t r = 0; r < n; ++r) {
    std::unordered_map<std::uint32_t, SeriesRat> next;
    for (const auto& [cols, minor] : level) {
      if (minor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t bit = 1u << j;
        if (cols & bit) continue;
        if (m(r, j).is_zero()) continue;
        // Sign of placing column j after the columns already used that exceed it.
        const int larger = std::popcount(cols & ~((bit << 1) - 1));
        SeriesRat term = minor * m(r, j);
        if (larger % 2) term = -term;
        auto [it, inserted] = next.try_emplace(cols | bit, term);
        if (!inserted) it->second += term;
      }
    }
    level = std::move(next);
  }
  const auto it = level.find(n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
  return it == level.end() ? SeriesRat() : it->second;
}

SeriesRat det_by_elimination(SeriesMatrix m) {
  const std::size_t n = m.rows();
  SeriesRat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return SeriesRat();
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const SeriesRat f = m(i, c) / m(c, c);
      for (std::size_t j = c + 1; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace

SeriesMatrix series_identity(std::size_t n) {
  SeriesMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = SeriesRat(1);
  return id;
}

SeriesMatrix series_product(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("series product shape mismatch");
  SeriesMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

TropMatrix valuation(const SeriesMatrix& m) {
  TropMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = valuation(m(i, j));
  return out;
}

SeriesMatrix canonical_lift(const TropMatrix& a) {
  SeriesMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) out(i, j) = SeriesRat::t_pow(a(i, j).value());
  return out;
}

SeriesMatrix hadamard_lift(const TropMatrix& a, const SeriesMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("hadamard_lift shape mismatch");
  SeriesMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) out(i, j) = b(i, j) * SeriesRat::t_pow(a(i, j).value());
  return out;
}

SeriesMatrix vandermonde_tp2c(std::size_t n, std::size_t m, const Rational& c, std::optional<Rational> base) {
  if (c < 1) throw DimensionError("vandermonde_tp2c needs C >= 1");
  const Rational lambda = base ? *base : Rational(c + 1);
  if (lambda <= c) throw DimensionError("vandermonde base must exceed C");
  SeriesMatrix out(n, m);
  Rational row_base = 1;  // λ_i
  for (std::size_t i = 0; i < n; ++i) {
    Rational entry = 1;
    for (std::size_t j = 0; j < m; ++j) {
      out(i, j) = SeriesRat(entry);
      entry *= row_base;
    }
    row_base *= lambda;
  }
  return out;
}

SeriesRat det_series(const SeriesMatrix& m) {
  require_square(m, "det_series");
  if (m.rows() <= 12) return det_by_cofactors(m);
  return det_by_elimination(m);
}

void for_each_minor(const SeriesMatrix& m, std::size_t cap,
                    const std::function<bool(const MinorKey&, const SeriesRat&)>& visit) {
  const std::size_t n = m.rows();
  const std::size_t k_max = std::min(n, m.cols());
  if (k_max > cap) {
    throw CapExceeded("minor enumeration of size " + std::to_string(k_max) + " exceeds cap " + std::to_string(cap));
  }
  if (n > 32 || m.cols() > 32) throw CapExceeded("minor enumeration supports at most 32 rows and columns");
  std::unordered_map<std::uint64_t, SeriesRat> previous{{pack(0, 0), SeriesRat(1)}};
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::unordered_map<std::uint64_t, SeriesRat> current;
    for (const auto& rows : k_subsets(n, k)) {
      const std::uint32_t row_mask = indices_to_mask(rows);
      const std::size_t last = rows.back();
      const std::uint32_t rest_rows = row_mask & ~(1u << last);
      for (const auto& cols : k_subsets(m.cols(), k)) {
        const std::uint32_t col_mask = indices_to_mask(cols);
        SeriesRat det;
        for (std::size_t p = 0; p < k; ++p) {
          const SeriesRat& entry = m(last, cols[p]);
          if (entry.is_zero()) continue;
          const SeriesRat& sub = previous.at(pack(rest_rows, col_mask & ~(1u << cols[p])));
          if (sub.is_zero()) continue;
          SeriesRat term = entry * sub;
          if ((k - 1 + p) % 2) term = -term;
          det += term;
        }
        if (!visit({row_mask, col_mask}, det)) return;
        current.emplace(pack(row_mask, col_mask), std::move(det));
      }
    }
    previous = std::move(current);
  }
}

bool is_tn_series(const SeriesMatrix& m, bool strict, std::size_t cap) {
  bool ok = true;
  for_each_minor(m, cap, [&](const MinorKey&, const SeriesRat& det) {
    const Sign s = sign_of(det);
    ok = strict ? s == Sign::Positive : s != Sign::Negative;
    return ok;
  });
  return ok;
}

bool is_tn2c(const SeriesMatrix& m, const Rational& c, bool strict) {
  const SeriesRat factor(c);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t i2 = i + 1; i2 < m.rows(); ++i2)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t j2 = j + 1; j2 < m.cols(); ++j2) {
          const SeriesRat lhs = m(i, j) * m(i2, j2);
          const SeriesRat rhs = factor * m(i, j2) * m(i2, j);
          if (strict ? !(lhs > rhs) : lhs < rhs) return false;
        }
  return true;
}

IndexSet mask_to_indices(std::uint32_t mask) {
  IndexSet out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

std::uint32_t indices_to_mask(const IndexSet& indices) {
  std::uint32_t mask = 0;
  for (auto i : indices) mask |= 1u << i;
  return mask;
}

}  // namespace tropos
