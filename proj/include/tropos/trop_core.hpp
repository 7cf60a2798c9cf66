#pragma once

#include <cstddef>
#include <vector>

#include "tropos/matrix.hpp"
#include "tropos/scalar.hpp"

namespace tropos {

// Default size cap for every brute-force enumeration (9! ≈ 3.6e5 permutations).
inline constexpr std::size_t kDefaultEnumerationCap = 9;

struct Permutation {
  std::vector<std::size_t> image;  // image[i] = σ(i)
  bool even = true;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct PermanentResult {
  TropScalar weight;
  // Every permutation of maximal weight, in lexicographic order of images.
  // Empty iff weight is −∞.
  std::vector<Permutation> maximizers;
};

// Enumerates S_n, returning the tropical permanent and all maximizers.
// Throws DimensionError if A is not square, CapExceeded if n > cap.
PermanentResult permanent_bruteforce(const TropMatrix& a, std::size_t cap = kDefaultEnumerationCap);

// Tropical permanent by the Hungarian method on exact rationals; −∞ entries
// are forbidden edges. Returns −∞ when no finite perfect matching exists.
TropScalar permanent_assignment(const TropMatrix& a);

enum class MinorTag { TropPositive, TropNegative, SignSingular, Bottom };

struct MinorClass {
  MinorTag tag = MinorTag::Bottom;
  TropScalar weight;

  // Tropically nonnegative: positive, sign-singular, or −∞.
  bool is_nonnegative() const { return tag != MinorTag::TropNegative; }
  bool is_positive() const { return tag == MinorTag::TropPositive; }
};

const char* to_string(MinorTag tag);

// Classifies the minor A_{I,J} by the parities of its optimal permutations.
// The 0x0 minor is TropPositive with weight 0.
MinorClass classify_minor(const TropMatrix& a, const IndexSet& rows, const IndexSet& cols,
                          std::size_t cap = kDefaultEnumerationCap);

// Classifies a whole square matrix (I = J = everything).
MinorClass classify_square(const TropMatrix& a, std::size_t cap = kDefaultEnumerationCap);

// max over elementary cycles of (weight / length), by Karp's algorithm.
// −∞ when the digraph of finite entries is acyclic.
TropScalar max_cycle_mean(const TropMatrix& a);

// True iff every principal submatrix A_{I,I} has the identity among its
// optimal permutations (strict: as its only optimal permutation, |I| ≥ 2).
// Decided by the cycle criterion; cap is accepted for interface symmetry.
bool is_diag_dominant(const TropMatrix& a, bool strict, std::size_t cap = kDefaultEnumerationCap);

// The same property decided by enumerating every principal submatrix and all
// of its permutations. Throws CapExceeded if n > cap.
bool is_diag_dominant_bruteforce(const TropMatrix& a, bool strict, std::size_t cap = kDefaultEnumerationCap);

}  // namespace tropos
