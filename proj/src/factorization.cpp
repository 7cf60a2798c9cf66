#include "tropos/factorization.hpp"

#include <string>

#include "tropos/errors.hpp"
#include "tropos/positivity.hpp"

namespace tropos {
namespace {

template <typename Factor>
void check_index(const Factor& f, std::size_t n) {
  const bool ok = f.kind == JacobiKind::Diag ? f.i < n : f.i + 1 < n;
  if (!ok) {
    throw IndexError(std::string(to_string(f.kind)) + " factor index " + std::to_string(f.i + 1) +
                     " out of range for n = " + std::to_string(n));
  }
}

// Row elimination on column col, from the bottom row up to row col+1.
// Each recorded multiplier m_i satisfies row_i ← row_i − m_i·row_{i−1}.
void eliminate_below(SeriesMatrix& w, std::size_t col, std::vector<SeriesJacobiFactor>& out) {
  const std::size_t n = w.rows();
  for (std::size_t i = n - 1; i > col; --i) {
    SeriesRat mult;
    if (!w(i, col).is_zero()) {
      if (w(i - 1, col).is_zero()) throw NotTN("zero pivot above a nonzero entry during Neville elimination");
      mult = w(i, col) / w(i - 1, col);
      if (sign_of(mult) == Sign::Negative) throw NotTN("negative Neville multiplier");
      for (std::size_t j = col; j < n; ++j) {
        if (!w(i - 1, j).is_zero()) w(i, j) -= mult * w(i - 1, j);
      }
    }
    out.push_back({JacobiKind::Lower, i - 1, std::move(mult)});
  }
}

std::vector<SeriesJacobiFactor> eliminate_lower(SeriesMatrix& w) {
  std::vector<SeriesJacobiFactor> out;
  for (std::size_t col = 0; col + 1 < w.rows(); ++col) eliminate_below(w, col, out);
  return out;
}

}  // namespace

const char* to_string(JacobiKind kind) {
  switch (kind) {
    case JacobiKind::Lower:
      return "Lower";
    case JacobiKind::Upper:
      return "Upper";
    case JacobiKind::Diag:
      return "Diag";
  }
  return "?";
}

JacobiKind parse_jacobi_kind(std::string_view text) {
  if (text == "Lower" || text == "lower" || text == "L") return JacobiKind::Lower;
  if (text == "Upper" || text == "upper" || text == "U") return JacobiKind::Upper;
  if (text == "Diag" || text == "diag" || text == "D") return JacobiKind::Diag;
  throw ParseError("unknown Jacobi factor kind '" + std::string(text) + "'");
}

TropMatrix jacobi_to_matrix(const JacobiFactor& f, std::size_t n) {
  check_index(f, n);
  if (f.a.is_neg_inf()) throw InfiniteEntry("Jacobi factor parameter must be finite");
  TropMatrix m = trop_identity(n);
  switch (f.kind) {
    case JacobiKind::Lower:
      m(f.i + 1, f.i) = f.a;
      break;
    case JacobiKind::Upper:
      m(f.i, f.i + 1) = f.a;
      break;
    case JacobiKind::Diag:
      m(f.i, f.i) = f.a;
      break;
  }
  return m;
}

TropMatrix multiply_factors(const std::vector<JacobiFactor>& fs, std::size_t n) {
  TropMatrix out = trop_identity(n);
  // Right multiplication by a Jacobi factor is a single column operation.
  for (const auto& f : fs) {
    check_index(f, n);
    if (f.a.is_neg_inf()) throw InfiniteEntry("Jacobi factor parameter must be finite");
    for (std::size_t r = 0; r < n; ++r) {
      switch (f.kind) {
        case JacobiKind::Lower:
          out(r, f.i) = trop_add(out(r, f.i), trop_mul(out(r, f.i + 1), f.a));
          break;
        case JacobiKind::Upper:
          out(r, f.i + 1) = trop_add(out(r, f.i + 1), trop_mul(out(r, f.i), f.a));
          break;
        case JacobiKind::Diag:
          out(r, f.i) = trop_mul(out(r, f.i), f.a);
          break;
      }
    }
  }
  return out;
}

SeriesMatrix series_jacobi_to_matrix(const SeriesJacobiFactor& f, std::size_t n) {
  check_index(f, n);
  SeriesMatrix m = series_identity(n);
  switch (f.kind) {
    case JacobiKind::Lower:
      m(f.i + 1, f.i) = f.a;
      break;
    case JacobiKind::Upper:
      m(f.i, f.i + 1) = f.a;
      break;
    case JacobiKind::Diag:
      m(f.i, f.i) = f.a;
      break;
  }
  return m;
}

SeriesMatrix multiply_series_factors(const std::vector<SeriesJacobiFactor>& fs, std::size_t n) {
  SeriesMatrix out = series_identity(n);
  for (const auto& f : fs) {
    check_index(f, n);
    if (f.a.is_zero() && f.kind != JacobiKind::Diag) continue;
    for (std::size_t r = 0; r < n; ++r) {
      switch (f.kind) {
        case JacobiKind::Lower:
          out(r, f.i) += out(r, f.i + 1) * f.a;
          break;
        case JacobiKind::Upper:
          out(r, f.i + 1) += out(r, f.i) * f.a;
          break;
        case JacobiKind::Diag:
          out(r, f.i) *= f.a;
          break;
      }
    }
  }
  return out;
}

std::vector<SeriesJacobiFactor> neville_eliminate(const SeriesMatrix& m) {
  if (!m.is_square()) throw DimensionError("neville_eliminate needs a square matrix");
  const std::size_t n = m.rows();
  if (det_series(m).is_zero()) throw NotInvertible("matrix is singular");

  SeriesMatrix w = m;
  std::vector<SeriesJacobiFactor> lower = eliminate_lower(w);

  std::vector<SeriesRat> pivots(n);
  for (std::size_t i = 0; i < n; ++i) {
    pivots[i] = w(i, i);
    if (sign_of(pivots[i]) != Sign::Positive) throw NotTN("nonpositive Neville pivot");
  }
  // V = D⁻¹U is unit upper triangular; factor Vᵀ the same way and transpose.
  SeriesMatrix vt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) vt(j, i) = j == i ? SeriesRat(1) : w(i, j) / pivots[i];
  std::vector<SeriesJacobiFactor> upper_t = eliminate_lower(vt);

  std::vector<SeriesJacobiFactor> out;
  for (auto& f : lower)
    if (!f.a.is_zero()) out.push_back(std::move(f));
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != SeriesRat(1)) out.push_back({JacobiKind::Diag, i, pivots[i]});
  for (auto it = upper_t.rbegin(); it != upper_t.rend(); ++it)
    if (!it->a.is_zero()) out.push_back({JacobiKind::Upper, it->i, it->a});
  return out;
}

std::vector<JacobiFactor> factor_tn(const TropMatrix& a) {
  if (!a.is_square()) throw DimensionError("factor_tn needs a square matrix");
  const std::size_t n = a.rows();
  if (!is_tn_trop(a).tn_trop) throw NotTN("matrix is not tropically totally nonnegative");
  if (permanent_assignment(a).is_neg_inf()) throw SingularPermanent("tropical permanent is −∞");

  const Rational c = n <= 2 ? Rational(1) : Rational(static_cast<long>((n - 1) * (n - 1)));
  const SeriesMatrix lift = hadamard_lift(a, vandermonde_tp2c(n, n, c));
  std::vector<JacobiFactor> out;
  for (const auto& f : neville_eliminate(lift)) {
    const TropScalar val = valuation(f.a);
    if (val.is_neg_inf()) {
      if (f.kind == JacobiKind::Diag) throw FactorizationMismatch("vanishing diagonal factor");
      continue;
    }
    out.push_back({f.kind, f.i, val});
  }
  if (multiply_factors(out, n) != a) throw FactorizationMismatch("tropical factor product differs from the input");
  return out;
}

}  // namespace tropos
