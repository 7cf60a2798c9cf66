#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropos/matrix.hpp"
#include "tropos/series_field.hpp"

namespace tropos {

// Coordinates indexed by the k-subsets of [n] in lexicographic order.
template <typename T>
struct PluckerVector {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<T> coords;

  std::vector<IndexSet> subsets() const { return k_subsets(n, k); }

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

using TropPlucker = PluckerVector<TropScalar>;
using SeriesPlucker = PluckerVector<SeriesRat>;

// Position of a sorted k-subset of [n] in lexicographic order.
std::size_t subset_rank(const IndexSet& subset, std::size_t n);

// Δ_I = per(A_{[k], I}). Throws DimensionError if k > n.
TropPlucker plucker_trop(const TropMatrix& a);
// Δ_I = det(A_{[k], I}). Throws DimensionError if k > n.
SeriesPlucker plucker_series(const SeriesMatrix& a);

// Equal −∞ supports and equal differences to the lexicographically first
// finite coordinate.
bool projectively_equal(const TropPlucker& p, const TropPlucker& q);
// Proportional by a nonzero scalar.
bool projectively_equal(const SeriesPlucker& p, const SeriesPlucker& q);

// [tropical identity | B̃] with row t of B̃ equal to row k−t+1 of B.
TropMatrix iota_trop(const TropMatrix& b);
// [identity | B̃] with B̃_t = (−1)^{k−t}·B_{k−t+1}.
SeriesMatrix iota_series(const SeriesMatrix& b);

// plucker_trop(iota_trop(B)).
TropPlucker stiefel_trop(const TropMatrix& b);

// The subset ([k]∖Ĩ) ∪ J̃ with Ĩ = {k−t+1 : t ∈ I} and J̃ = {t+k : t ∈ J}, for
// B of size k×(n−k). Indices are 0-based on both sides.
IndexSet corres_subset(const IndexSet& rows, const IndexSet& cols, std::size_t k);

struct StiefelMismatch {
  IndexSet subset;
  TropScalar expected;  // from the input vector, normalized so Δ_[k] = 0
  TropScalar computed;  // from the reconstructed candidate
};

struct StiefelInversion {
  bool in_image = false;
  TropMatrix candidate;  // read off the coordinates ([k]∖{k−i+1}) ∪ {k+j}
  bool candidate_tn = false;
  std::optional<StiefelMismatch> mismatch;  // first differing coordinate
};

// Reconstructs the unique candidate B from its k(n−k) single-entry
// coordinates and accepts it iff stiefel_trop(B) matches p projectively and
// B ∈ TN^trop(R). Throws MalformedVector if the coordinate count is wrong or
// Δ_[k] or a single-entry coordinate is −∞.
StiefelInversion invert_stiefel(const TropPlucker& p);

struct LiftCertificate {
  SeriesPlucker coords;
  bool all_positive = false;
  bool valuations_match = false;
};

// Lifts B ∈ TN^trop(R) as a Hadamard product with a Vandermonde matrix in
// TP_{2,C}, C = max(1, (min(k, n−k) − 1)²), and checks that every Plücker
// coordinate of iota_series of the lift is positive with valuation equal to
// the matching coordinate of stiefel_trop(B).
LiftCertificate certify_stiefel_lift(const TropMatrix& b);

// Certifies that val Δ(lift) = Δ(A) with every Δ_I(lift) positive, for a
// given k×n matrix and one of its lifts.
LiftCertificate certify_plucker_lift(const TropMatrix& a, const SeriesMatrix& lift);

}  // namespace tropos
