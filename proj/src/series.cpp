#include "tropos/series.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "tropos/errors.hpp"

namespace tropos {
namespace {

// Terms sorted by decreasing exponent with zero coefficients removed.
std::vector<Term> normalize_terms(std::vector<Term> terms) {
  // gmp compares only canonical rationals correctly; callers may pass raw p/q.
  for (auto& t : terms) {
    t.exponent.canonicalize();
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// Dense univariate polynomial over Q in s, coefficients low to high.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Shared change of variable s = t^step, chosen so that every polynomial in a
// group (each shifted to minimal exponent 0) becomes an ordinary polynomial.
struct DenseFrame {
  Rational step;  // 0 when every polynomial is a constant
};

DenseFrame make_frame(std::initializer_list<const GenPoly*> polys) {
  Integer lcm_den = 1;
  for (const GenPoly* p : polys)
    for (const auto& t : p->terms()) {
      const Rational shifted = t.exponent - p->min_exponent();
      lcm_den = lcm(lcm_den, shifted.get_den());
    }
  Integer g = 0;
  for (const GenPoly* p : polys)
    for (const auto& t : p->terms()) {
      const Rational shifted = t.exponent - p->min_exponent();
      const Integer scaled = shifted.get_num() * (lcm_den / shifted.get_den());
      g = gcd(g, scaled);
    }
  return {g == 0 ? Rational(0) : Rational(g, lcm_den)};
}

Dense to_dense(const GenPoly& p, const DenseFrame& frame) {
  if (frame.step == 0) return Dense{p.terms().front().coeff};
  const Rational lo = p.min_exponent();
  Rational top = (p.max_exponent() - lo) / frame.step;
  if (top.get_num() > 200000) throw CapExceeded("generalized polynomial too wide for dense arithmetic");
  Dense d(top.get_num().get_ui() + 1);
  for (const auto& t : p.terms()) {
    const Rational idx = (t.exponent - lo) / frame.step;
    d[idx.get_num().get_ui()] = t.coeff;
  }
  return d;
}

GenPoly from_dense(const Dense& d, const DenseFrame& frame, const Rational& shift) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    terms.push_back({Rational(frame.step * static_cast<long>(k) + shift), d[k]});
  }
  return GenPoly(std::move(terms));
}

// Long division a = q·b + r.
void dense_divmod(Dense a, const Dense& b, Dense& q, Dense& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

GenPoly monic_unit_free(const GenPoly& p) {
  return p.times_monomial(Rational(1) / p.leading_coeff(), -p.min_exponent());
}

// Modular gcd in Z[s]. Images modulo word-size primes fix the degree of
// the gcd (an image never has smaller degree than the true gcd when the
// prime divides neither leading coefficient); images of that degree are
// combined by CRT until the balanced lift divides both inputs exactly.

using IntPoly = std::vector<Integer>;  // coefficients low to high, no trailing zeros

IntPoly primitive_part(const Dense& p) {
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  IntPoly out(p.size());
  Integer content = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = p[k].get_num() * (den / p[k].get_den());
    content = gcd(content, out[k]);
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

using ModPoly = std::vector<u64>;

ModPoly reduce(const IntPoly& f, u64 p) {
  ModPoly out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = mpz_fdiv_ui(f[k].get_mpz_t(), p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Monic gcd over Z/p by Euclid.
ModPoly gcd_mod(ModPoly x, ModPoly y, u64 p) {
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    const u64 inv = inv_mod(y.back(), p);
    while (x.size() >= y.size()) {
      const u64 f = mul_mod(x.back(), inv, p);
      const std::size_t shift = x.size() - y.size();
      for (std::size_t k = 0; k < y.size(); ++k) x[shift + k] = (x[shift + k] + p - mul_mod(f, y[k], p)) % p;
      while (!x.empty() && x.back() == 0) x.pop_back();
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  const u64 inv = inv_mod(x.back(), p);
  for (auto& c : x) c = mul_mod(c, inv, p);
  return x;
}

bool divides(const IntPoly& g, const IntPoly& f) {
  Dense q, r;
  dense_divmod(Dense(f.begin(), f.end()), Dense(g.begin(), g.end()), q, r);
  return r.empty();
}

IntPoly modular_gcd(const IntPoly& a, const IntPoly& b) {
  const Integer lc_gcd = gcd(a.back(), b.back());
  Integer prime = Integer(1) << 61;
  IntPoly image;  // CRT accumulation, coefficients in [0, modulus)
  Integer modulus = 0;
  IntPoly last_candidate;
  while (true) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) || mpz_divisible_ui_p(b.back().get_mpz_t(), p)) continue;
    ModPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
    if (g.size() == 1) return IntPoly{Integer(1)};
    const u64 scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
    for (auto& c : g) c = mul_mod(c, scale, p);
    if (modulus == 0 || g.size() < image.size()) {
      image.assign(g.begin(), g.end());
      for (std::size_t k = 0; k < g.size(); ++k) image[k] = Integer(static_cast<unsigned long>(g[k]));
      modulus = prime;
    } else if (g.size() > image.size()) {
      continue;  // unlucky prime
    } else {
      const u64 m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const u64 residue = mpz_fdiv_ui(image[k].get_mpz_t(), p);
        const u64 t = mul_mod((g[k] + p - residue) % p, m_inv, p);
        image[k] += modulus * Integer(static_cast<unsigned long>(t));
      }
      modulus *= prime;
    }
    IntPoly candidate(image.size());
    const Integer half = modulus / 2;
    Integer content = 0;
    for (std::size_t k = 0; k < image.size(); ++k) {
      candidate[k] = image[k] > half ? Integer(image[k] - modulus) : image[k];
      content = gcd(content, candidate[k]);
    }
    if (content == 0) continue;
    if (candidate.back() < 0) content = -content;
    for (auto& c : candidate) c /= content;
    // Trial division only once the lift has stopped changing.
    if (candidate == last_candidate && divides(candidate, a) && divides(candidate, b)) return candidate;
    last_candidate = std::move(candidate);
  }
}

}  // namespace

GenPoly::GenPoly(const Rational& constant) {
  Rational c = constant;
  c.canonicalize();
  if (c != 0) terms_.push_back({Rational(0), std::move(c)});
}

GenPoly::GenPoly(std::vector<Term> terms) : terms_(normalize_terms(std::move(terms))) {}

GenPoly GenPoly::monomial(const Rational& coeff, const Rational& exponent) {
  Term t{exponent, coeff};
  t.exponent.canonicalize();
  t.coeff.canonicalize();
  GenPoly p;
  if (t.coeff != 0) p.terms_.push_back(std::move(t));
  return p;
}

bool GenPoly::is_one() const { return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coeff == 1; }

TropScalar GenPoly::valuation() const {
  if (terms_.empty()) return TropScalar::neg_inf();
  return terms_.front().exponent;
}

const Rational& GenPoly::leading_coeff() const {
  if (terms_.empty()) throw DivisionByZero("leading coefficient of the zero polynomial");
  return terms_.front().coeff;
}

const Rational& GenPoly::max_exponent() const {
  if (terms_.empty()) throw DivisionByZero("exponent of the zero polynomial");
  return terms_.front().exponent;
}

const Rational& GenPoly::min_exponent() const {
  if (terms_.empty()) throw DivisionByZero("exponent of the zero polynomial");
  return terms_.back().exponent;
}

GenPoly GenPoly::times_monomial(const Rational& coeff, const Rational& exponent) const {
  GenPoly out;
  if (coeff == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({Rational(t.exponent + exponent), Rational(t.coeff * coeff)});
  return out;
}

GenPoly GenPoly::operator-() const {
  GenPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

GenPoly operator+(const GenPoly& a, const GenPoly& b) {
  GenPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exponent > b.terms_[j].exponent)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].exponent > a.terms_[i].exponent) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({a.terms_[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

GenPoly operator-(const GenPoly& a, const GenPoly& b) { return a + (-b); }

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  if (a.is_zero() || b.is_zero()) return GenPoly();
  if (b.is_monomial()) return a.times_monomial(b.terms_[0].coeff, b.terms_[0].exponent);
  if (a.is_monomial()) return b.times_monomial(a.terms_[0].coeff, a.terms_[0].exponent);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) products.push_back({Rational(x.exponent + y.exponent), Rational(x.coeff * y.coeff)});
  return GenPoly(std::move(products));
}

GenPoly poly_gcd(const GenPoly& a, const GenPoly& b) {
  if (a.is_zero() && b.is_zero()) return GenPoly();
  if (a.is_zero()) return monic_unit_free(b);
  if (b.is_zero()) return monic_unit_free(a);
  if (a.is_monomial() || b.is_monomial()) return GenPoly(Rational(1));
  const DenseFrame frame = make_frame({&a, &b});
  if (frame.step == 0) return GenPoly(Rational(1));
  const IntPoly g = modular_gcd(primitive_part(to_dense(a, frame)), primitive_part(to_dense(b, frame)));
  Dense d(g.begin(), g.end());
  return monic_unit_free(from_dense(d, frame, Rational(0)));
}

GenPoly poly_divexact(const GenPoly& a, const GenPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return GenPoly();
  if (b.is_monomial()) {
    return a.times_monomial(Rational(1) / b.terms()[0].coeff, -b.terms()[0].exponent);
  }
  const DenseFrame frame = make_frame({&a, &b});
  if (frame.step == 0) throw InconsistentData("inexact polynomial division");
  Dense q, r;
  dense_divmod(to_dense(a, frame), to_dense(b, frame), q, r);
  if (!r.empty()) throw InconsistentData("inexact polynomial division");
  return from_dense(q, frame, Rational(a.min_exponent() - b.min_exponent()));
}

SeriesRat::SeriesRat(const Rational& constant) : num_(constant), den_(Rational(1)) {}

SeriesRat::SeriesRat(GenPoly num) : num_(std::move(num)), den_(Rational(1)) {}

SeriesRat::SeriesRat(GenPoly num, GenPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

SeriesRat SeriesRat::monomial(const Rational& coeff, const Rational& exponent) {
  return SeriesRat(GenPoly::monomial(coeff, exponent));
}

void SeriesRat::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero("series with zero denominator");
  if (num_.is_zero()) {
    den_ = GenPoly(Rational(1));
    return;
  }
  if (!den_.is_monomial()) {
    const GenPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly_divexact(num_, g);
      den_ = poly_divexact(den_, g);
    }
  }
  const Rational scale = Rational(1) / den_.leading_coeff();
  const Rational shift = -den_.min_exponent();
  num_ = num_.times_monomial(scale, shift);
  den_ = den_.times_monomial(scale, shift);
}

SeriesRat SeriesRat::operator-() const { return SeriesRat(-num_, den_, Canonical{}); }

SeriesRat operator+(const SeriesRat& a, const SeriesRat& b) {
  if (a.is_polynomial() && b.is_polynomial()) return SeriesRat(a.num_ + b.num_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return SeriesRat(a.num_ + b.num_, a.den_);
  return SeriesRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

SeriesRat operator-(const SeriesRat& a, const SeriesRat& b) { return a + (-b); }

SeriesRat operator*(const SeriesRat& a, const SeriesRat& b) {
  if (a.is_polynomial() && b.is_polynomial()) return SeriesRat(a.num_ * b.num_);
  if (a.is_zero() || b.is_zero()) return SeriesRat();
  return SeriesRat(a.num_ * b.num_, a.den_ * b.den_);
}

SeriesRat operator/(const SeriesRat& a, const SeriesRat& b) {
  if (b.is_zero()) throw DivisionByZero("series division by zero");
  if (a.is_zero()) return SeriesRat();
  return SeriesRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const SeriesRat& a, const SeriesRat& b) {
  if (a == b) return std::strong_ordering::equal;
  switch (sign_of(a - b)) {
    case Sign::Negative:
      return std::strong_ordering::less;
    case Sign::Positive:
      return std::strong_ordering::greater;
    case Sign::Zero:
      break;
  }
  return std::strong_ordering::equal;
}

TropScalar valuation(const SeriesRat& a) {
  if (a.is_zero()) return TropScalar::neg_inf();
  return Rational(a.num().max_exponent() - a.den().max_exponent());
}

Sign sign_of(const SeriesRat& a) {
  if (a.is_zero()) return Sign::Zero;
  // The canonical denominator has leading coefficient 1.
  return sgn(a.num().leading_coeff()) > 0 ? Sign::Positive : Sign::Negative;
}

namespace {

Rational power(const Rational& base, const Integer& k) {
  if (!k.fits_slong_p()) throw DimensionError("exponent too large to evaluate");
  long e = k.get_si();
  const bool invert = e < 0;
  if (invert) e = -e;
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  Rational out = invert ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

Rational evaluate_poly(const GenPoly& p, const Rational& base, long root) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    const Rational scaled = t.exponent * root;
    if (!is_integer(scaled)) throw DimensionError("exponent is not a multiple of 1/root");
    total += t.coeff * power(base, scaled.get_num());
  }
  return total;
}

}  // namespace

Rational evaluate_at(const SeriesRat& a, const Rational& base, long root) {
  if (base == 0) throw DivisionByZero("evaluation base must be nonzero");
  const Rational den = evaluate_poly(a.den(), base, root);
  if (den == 0) throw DivisionByZero("denominator vanishes at the evaluation point");
  return evaluate_poly(a.num(), base, root) / den;
}

namespace {

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view text) : text_(text) {}

  SeriesRat parse() {
    skip_space();
    SeriesRat value;
    if (peek() == '(') {
      ++pos_;
      GenPoly num = parse_sum();
      expect(')');
      skip_space();
      if (pos_ == text_.size()) {
        value = SeriesRat(std::move(num));
      } else {
        expect('/');
        expect('(');
        GenPoly den = parse_sum();
        expect(')');
        value = SeriesRat(std::move(num), std::move(den));
      }
    } else {
      value = SeriesRat(parse_sum());
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return value;
  }

 private:
  GenPoly parse_sum() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        continue;
      }
      break;
    }
    return GenPoly(std::move(terms));
  }

  Term parse_term() {
    skip_space();
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coeff = parse_unsigned_rational(true);
      has_coeff = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    Rational exponent = 0;
    if (peek() == 't') {
      ++pos_;
      exponent = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        exponent = parse_exponent();
      }
    } else if (!has_coeff) {
      fail("expected a term");
    }
    return {exponent, coeff};
  }

  Rational parse_exponent() {
    const bool paren = peek() == '(';
    if (paren) {
      ++pos_;
      skip_space();
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    Rational e = parse_unsigned_rational(false);
    if (paren) {
      skip_space();
      expect(')');
    }
    return negative ? Rational(-e) : e;
  }

  // digits [. digits] [/ digits]
  Rational parse_unsigned_rational(bool allow_decimal) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || (allow_decimal && peek() == '.')) ++pos_;
    if (peek() == '/' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("series literal '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string exponent_text(const Rational& e) {
  if (e == 1) return "t";
  if (is_integer(e)) return "t^" + to_string(e);
  return "t^(" + to_string(e) + ")";
}

}  // namespace

SeriesRat parse_series(std::string_view text) { return SeriesParser(text).parse(); }

std::string to_string(const GenPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.exponent == 0) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += exponent_text(t.exponent);
    } else {
      out += to_string(magnitude) + "*" + exponent_text(t.exponent);
    }
  }
  return out;
}

std::string to_string(const SeriesRat& a) {
  if (a.is_polynomial()) return to_string(a.num());
  return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const SeriesRat& a) { return os << to_string(a); }

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative:
      return "negative";
    case Sign::Zero:
      return "zero";
    case Sign::Positive:
      return "positive";
  }
  return "?";
}

}  // namespace tropos
