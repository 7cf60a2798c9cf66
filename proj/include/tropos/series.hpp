#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tropos/rational.hpp"
#include "tropos/scalar.hpp"

namespace tropos {

struct Term {
  Rational exponent;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// A generalized polynomial Σ c·t^e with rational c ≠ 0 and rational e.
// Terms are kept sorted by strictly decreasing exponent, so the leading
// (valuation-defining) term comes first.
class GenPoly {
 public:
  GenPoly() = default;
  explicit GenPoly(const Rational& constant);
  // Terms in any order; equal exponents are merged and zeros dropped.
  explicit GenPoly(std::vector<Term> terms);

  static GenPoly monomial(const Rational& coeff, const Rational& exponent);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  const std::vector<Term>& terms() const { return terms_; }

  // Largest exponent; −∞ for the zero polynomial.
  TropScalar valuation() const;
  // Coefficient of the largest exponent. Requires a nonzero polynomial.
  const Rational& leading_coeff() const;
  const Rational& max_exponent() const;
  const Rational& min_exponent() const;

  // Multiply by c·t^e.
  GenPoly times_monomial(const Rational& coeff, const Rational& exponent) const;

  GenPoly operator-() const;
  friend GenPoly operator+(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator-(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend bool operator==(const GenPoly&, const GenPoly&) = default;

 private:
  std::vector<Term> terms_;
};

// Greatest common divisor in the ring of generalized polynomials, up to a
// unit c·t^e. Returned monic with minimal exponent 0. gcd(0, 0) = 0.
GenPoly poly_gcd(const GenPoly& a, const GenPoly& b);

// Exact quotient a / b. Throws DivisionByZero for b = 0 and InconsistentData
// if b does not divide a.
GenPoly poly_divexact(const GenPoly& a, const GenPoly& b);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

// An element num/den of the field K modeled as the fraction field of
// generalized polynomials. Canonical form: gcd(num, den) = 1, den has
// minimal exponent 0 and leading coefficient 1, and 0 is stored as 0/1.
// Canonical forms are unique, so == is structural.
class SeriesRat {
 public:
  SeriesRat() : den_(Rational(1)) {}
  SeriesRat(const Rational& constant);  // NOLINT
  template <std::integral I>
  SeriesRat(I constant) : SeriesRat(Rational(static_cast<long>(constant))) {}  // NOLINT
  explicit SeriesRat(GenPoly num);
  // Throws DivisionByZero if den = 0.
  SeriesRat(GenPoly num, GenPoly den);

  static SeriesRat monomial(const Rational& coeff, const Rational& exponent);
  static SeriesRat t_pow(const Rational& exponent) { return monomial(Rational(1), exponent); }

  const GenPoly& num() const { return num_; }
  const GenPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  SeriesRat operator-() const;
  friend SeriesRat operator+(const SeriesRat& a, const SeriesRat& b);
  friend SeriesRat operator-(const SeriesRat& a, const SeriesRat& b);
  friend SeriesRat operator*(const SeriesRat& a, const SeriesRat& b);
  // Throws DivisionByZero.
  friend SeriesRat operator/(const SeriesRat& a, const SeriesRat& b);
  SeriesRat& operator+=(const SeriesRat& b) { return *this = *this + b; }
  SeriesRat& operator-=(const SeriesRat& b) { return *this = *this - b; }
  SeriesRat& operator*=(const SeriesRat& b) { return *this = *this * b; }

  friend bool operator==(const SeriesRat&, const SeriesRat&) = default;
  // The order of the real closed field: f > g iff f − g has a positive
  // leading coefficient.
  friend std::strong_ordering operator<=>(const SeriesRat& a, const SeriesRat& b);

 private:
  struct Canonical {};
  SeriesRat(GenPoly num, GenPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  GenPoly num_;
  GenPoly den_;
};

// val(num) − val(den); −∞ for 0.
TropScalar valuation(const SeriesRat& a);
Sign sign_of(const SeriesRat& a);

// Substitutes t = base^root. Every exponent e must make e·root an integer;
// throws DimensionError otherwise. The base must be nonzero.
Rational evaluate_at(const SeriesRat& a, const Rational& base, long root);

// Literal syntax: signed sums of terms "c*t^e", "c t^e", "t^e", "c", with
// rational c and e; exponents may be written t^-1, t^(1/2), t^-3/2.
// A quotient is written "(num)/(den)".
SeriesRat parse_series(std::string_view text);
std::string to_string(const GenPoly& p);
std::string to_string(const SeriesRat& a);
std::ostream& operator<<(std::ostream& os, const SeriesRat& a);

const char* to_string(Sign s);

}  // namespace tropos
