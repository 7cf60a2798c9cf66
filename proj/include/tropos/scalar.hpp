#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "tropos/rational.hpp"

namespace tropos {

// An element of R_max = Q ∪ {−∞}. ⊕ is max, ⊙ is +. −∞ is a distinct state,
// never a sentinel rational. Default-constructed scalars are −∞ (the
// tropical zero).
class TropScalar {
 public:
  TropScalar() = default;
  TropScalar(const Rational& value) : finite_(true), value_(value) { value_.canonicalize(); }  // NOLINT
  template <std::integral I>
  TropScalar(I value) : finite_(true), value_(static_cast<long>(value)) {}  // NOLINT

  static TropScalar neg_inf() { return TropScalar(); }
  static TropScalar unit() { return TropScalar(0); }

  bool is_finite() const { return finite_; }
  bool is_neg_inf() const { return !finite_; }

  // Throws InfiniteEntry for −∞.
  const Rational& value() const;

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  bool finite_ = false;
  Rational value_;
};

// a ⊕ b = max(a, b).
TropScalar trop_add(const TropScalar& a, const TropScalar& b);
// a ⊙ b = a + b, with −∞ absorbing.
TropScalar trop_mul(const TropScalar& a, const TropScalar& b);
// a ⊘ b = a − b. b must be finite.
TropScalar trop_div(const TropScalar& a, const TropScalar& b);
// k ⊙-fold power of a, k ≥ 0 (k·a; a^0 = 0).
TropScalar trop_pow(const TropScalar& a, long k);

TropScalar parse_trop(std::string_view text);
std::string to_string(const TropScalar& a);
std::ostream& operator<<(std::ostream& os, const TropScalar& a);

}  // namespace tropos
