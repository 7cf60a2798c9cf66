#include "tropos/grassmannian.hpp"

#include <algorithm>
#include <string>

#include "tropos/errors.hpp"
#include "tropos/positivity.hpp"
#include "tropos/trop_core.hpp"

namespace tropos {
namespace {

template <typename M>
void require_wide(const M& a, const char* what) {
  if (a.rows() > a.cols()) throw DimensionError(std::string(what) + " needs k <= n");
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t subset_rank(const IndexSet& subset, std::size_t n) {
  const std::size_t k = subset.size();
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (std::size_t x = next; x < subset[pos]; ++x) rank += binomial(n - x - 1, k - pos - 1);
    next = subset[pos] + 1;
  }
  return rank;
}

TropPlucker plucker_trop(const TropMatrix& a) {
  require_wide(a, "plucker_trop");
  TropPlucker p{a.rows(), a.cols(), {}};
  const IndexSet rows = full_index_set(a.rows());
  for (const auto& cols : k_subsets(a.cols(), a.rows()))
    p.coords.push_back(permanent_assignment(a.submatrix(rows, cols)));
  return p;
}

SeriesPlucker plucker_series(const SeriesMatrix& a) {
  require_wide(a, "plucker_series");
  SeriesPlucker p{a.rows(), a.cols(), {}};
  const IndexSet rows = full_index_set(a.rows());
  for (const auto& cols : k_subsets(a.cols(), a.rows())) p.coords.push_back(det_series(a.submatrix(rows, cols)));
  return p;
}

bool projectively_equal(const TropPlucker& p, const TropPlucker& q) {
  if (p.k != q.k || p.n != q.n || p.coords.size() != q.coords.size()) return false;
  std::optional<Rational> shift;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i].is_finite() != q.coords[i].is_finite()) return false;
    if (p.coords[i].is_neg_inf()) continue;
    const Rational d = p.coords[i].value() - q.coords[i].value();
    if (!shift) shift = d;
    else if (*shift != d) return false;
  }
  return true;
}

bool projectively_equal(const SeriesPlucker& p, const SeriesPlucker& q) {
  if (p.k != q.k || p.n != q.n || p.coords.size() != q.coords.size()) return false;
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i].is_zero() != q.coords[i].is_zero()) return false;
    if (!pivot && !p.coords[i].is_zero()) pivot = i;
  }
  if (!pivot) return true;
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (p.coords[i] * q.coords[*pivot] != q.coords[i] * p.coords[*pivot]) return false;
  return true;
}

TropMatrix iota_trop(const TropMatrix& b) {
  const std::size_t k = b.rows();
  const std::size_t r = b.cols();
  TropMatrix out(k, k + r);
  for (std::size_t t = 0; t < k; ++t) {
    out(t, t) = TropScalar::unit();
    for (std::size_t j = 0; j < r; ++j) out(t, k + j) = b(k - 1 - t, j);
  }
  return out;
}

SeriesMatrix iota_series(const SeriesMatrix& b) {
  const std::size_t k = b.rows();
  const std::size_t r = b.cols();
  SeriesMatrix out(k, k + r);
  for (std::size_t t = 0; t < k; ++t) {
    out(t, t) = SeriesRat(1);
    // 1-based row t+1 carries sign (−1)^{k−(t+1)}.
    const bool negate = (k - 1 - t) % 2 == 1;
    for (std::size_t j = 0; j < r; ++j) out(t, k + j) = negate ? -b(k - 1 - t, j) : b(k - 1 - t, j);
  }
  return out;
}

TropPlucker stiefel_trop(const TropMatrix& b) { return plucker_trop(iota_trop(b)); }

IndexSet corres_subset(const IndexSet& rows, const IndexSet& cols, std::size_t k) {
  std::vector<bool> removed(k, false);
  for (auto i : rows) removed[k - 1 - i] = true;
  IndexSet out;
  for (std::size_t x = 0; x < k; ++x)
    if (!removed[x]) out.push_back(x);
  for (auto j : cols) out.push_back(k + j);
  return out;
}

StiefelInversion invert_stiefel(const TropPlucker& p) {
  const std::size_t k = p.k;
  const std::size_t n = p.n;
  if (k > n || p.coords.size() != binomial(n, k)) throw MalformedVector("coordinate count does not match C(n, k)");
  const TropScalar& base = p.coords[0];  // Δ_[k], the lexicographically first subset
  if (base.is_neg_inf()) throw MalformedVector("coordinate of the first k-subset is −∞");

  StiefelInversion out;
  out.candidate = TropMatrix(k, n - k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n - k; ++j) {
      const TropScalar& c = p.coords[subset_rank(corres_subset({i}, {j}, k), n)];
      if (c.is_neg_inf()) throw MalformedVector("single-entry coordinate is −∞");
      out.candidate(i, j) = trop_div(c, base);
    }
  out.candidate_tn = is_tn_trop(out.candidate).tn_trop;

  const TropPlucker image = stiefel_trop(out.candidate);
  const auto subsets = p.subsets();
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    const TropScalar expected = p.coords[s].is_finite() ? trop_div(p.coords[s], base) : TropScalar::neg_inf();
    if (expected != image.coords[s]) {
      out.mismatch = StiefelMismatch{subsets[s], expected, image.coords[s]};
      break;
    }
  }
  out.in_image = !out.mismatch && out.candidate_tn;
  return out;
}

LiftCertificate certify_plucker_lift(const TropMatrix& a, const SeriesMatrix& lift) {
  LiftCertificate cert;
  cert.coords = plucker_series(lift);
  const TropPlucker trop = plucker_trop(a);
  cert.all_positive = std::all_of(cert.coords.coords.begin(), cert.coords.coords.end(),
                                  [](const SeriesRat& x) { return sign_of(x) == Sign::Positive; });
  cert.valuations_match = true;
  for (std::size_t s = 0; s < trop.coords.size(); ++s)
    if (valuation(cert.coords.coords[s]) != trop.coords[s]) cert.valuations_match = false;
  return cert;
}

LiftCertificate certify_stiefel_lift(const TropMatrix& b) {
  const std::size_t m = std::min(b.rows(), b.cols());
  const Rational c = m <= 2 ? Rational(1) : Rational(static_cast<long>((m - 1) * (m - 1)));
  const SeriesMatrix lift = hadamard_lift(b, vandermonde_tp2c(b.rows(), b.cols(), c));
  return certify_plucker_lift(iota_trop(b), iota_series(lift));
}

}  // namespace tropos
