#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "tropos/matrix.hpp"
#include "tropos/series_field.hpp"
#include "tropos/trop_core.hpp"

namespace tropos {

// Lower(i) modifies (i+1, i), Upper(i) modifies (i, i+1), Diag(i) modifies
// (i, i). Indices are 0-based.
enum class JacobiKind { Lower, Upper, Diag };

const char* to_string(JacobiKind kind);
JacobiKind parse_jacobi_kind(std::string_view text);

// The tropical identity with one finite entry replaced by a.
struct JacobiFactor {
  JacobiKind kind = JacobiKind::Diag;
  std::size_t i = 0;
  TropScalar a = TropScalar::unit();

  friend bool operator==(const JacobiFactor&, const JacobiFactor&) = default;
};

// The identity over K with one entry replaced by a (a ≥ 0 after elimination).
struct SeriesJacobiFactor {
  JacobiKind kind = JacobiKind::Diag;
  std::size_t i = 0;
  SeriesRat a = SeriesRat(1);
};

// Throws IndexError if the modified position lies outside n x n and
// InfiniteEntry if a = −∞.
TropMatrix jacobi_to_matrix(const JacobiFactor& f, std::size_t n);

// Left-to-right max-plus product; the empty product is the identity.
TropMatrix multiply_factors(const std::vector<JacobiFactor>& fs, std::size_t n);

SeriesMatrix series_jacobi_to_matrix(const SeriesJacobiFactor& f, std::size_t n);
SeriesMatrix multiply_series_factors(const std::vector<SeriesJacobiFactor>& fs, std::size_t n);

// Bidiagonal factorization M = L_1 ⋯ L_p · D · U_q ⋯ U_1 by Neville
// elimination without row exchanges. Lower factors come in elimination
// order (column by column, bottom-up within a column), then all n diagonal
// factors, then the upper factors. Factors equal to the identity (parameter
// 0 off the diagonal, 1 on it) are omitted, so the identity gives [].
// Throws DimensionError if M is not square, NotInvertible if det M = 0, and
// NotTN if a negative multiplier or pivot appears or a zero pivot sits above a
// nonzero entry.
std::vector<SeriesJacobiFactor> neville_eliminate(const SeriesMatrix& m);

// Factors A ∈ TN^trop with finite permanent: lifts A to B∗t^A with a
// Vandermonde B ∈ TP_{2,C}, C = max(1, (n-1)²), eliminates over K, and maps
// every parameter through the valuation. The tropical product is checked
// against A before returning.
// Throws DimensionError, NotTN, SingularPermanent, FactorizationMismatch.
std::vector<JacobiFactor> factor_tn(const TropMatrix& a);

}  // namespace tropos
