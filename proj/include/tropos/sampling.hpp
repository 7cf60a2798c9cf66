#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropos/factorization.hpp"
#include "tropos/matrix.hpp"
#include "tropos/monge.hpp"
#include "tropos/series_field.hpp"

namespace tropos {

enum class LiftKind { Canonical, Hadamard, Random };

const char* to_string(LiftKind kind);
LiftKind parse_lift_kind(std::string_view text);

// Seeded generator of test matrices. Every draw is a deterministic function
// of the seed and the sequence of calls. Rationals have denominators in
// {1, ..., max_den}.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long max_den = 3) : rng_(seed), max_den_(max_den) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi);
  bool coin(double p);
  // Uniform over {p/q : lo ≤ p/q ≤ hi, 1 ≤ q ≤ max_den} (by numerator, then q).
  Rational rational(long lo, long hi);
  // Strictly positive, in (0, hi].
  Rational positive_rational(long hi);

  // Entries rational in [lo, hi], each −∞ with probability p_neg_inf.
  TropMatrix matrix(std::size_t n, std::size_t m, double p_neg_inf, long lo = -5, long hi = 5);

  // Finite Monge matrix u·1ᵀ + 1·vᵀ + Σ λ L^{(k,l)} with λ ≥ 0, each λ zero
  // with probability p_zero. strict forces every λ > 0 (so A ∈ TP^trop).
  TropMatrix monge(std::size_t n, std::size_t m, bool strict = false, double p_zero = 0.3);
  StaircaseDecomposition staircase(std::size_t n, std::size_t m, bool strict, double p_zero);

  // A finite Monge matrix with entries masked to −∞, kept only once the
  // result is TN^trop (falls back to the unmasked matrix after repeated
  // failures).
  TropMatrix tn_masked(std::size_t n, std::size_t m, double p_neg_inf);

  // A max-plus product of random tropical Jacobi factors; TN^trop with finite
  // diagonal, hence finite permanent.
  TropMatrix jacobi_product(std::size_t n, std::size_t factors);
  std::vector<JacobiFactor> jacobi_factors(std::size_t n, std::size_t factors);

  // b·t^{A_{ij}} with b drawn from small positive rationals.
  SeriesMatrix random_lift(const TropMatrix& a);

 private:
  std::mt19937_64 rng_;
  long max_den_;
};

// The lift used by spectrum checks: canonical t^A, Hadamard with a Vandermonde
// matrix in TP_{2,(n-1)²}, or random positive coefficients drawn from seed.
SeriesMatrix make_lift(const TropMatrix& a, LiftKind kind, std::uint64_t seed);

}  // namespace tropos
