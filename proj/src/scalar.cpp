#include "tropos/scalar.hpp"

#include <cctype>

#include "tropos/errors.hpp"

namespace tropos {

const Rational& TropScalar::value() const {
  if (!finite_) throw InfiniteEntry("value() of -inf");
  return value_;
}

TropScalar trop_add(const TropScalar& a, const TropScalar& b) { return a < b ? b : a; }

TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropScalar::neg_inf();
  return Rational(a.value() + b.value());
}

TropScalar trop_div(const TropScalar& a, const TropScalar& b) {
  if (b.is_neg_inf()) throw InfiniteEntry("tropical division by -inf");
  if (a.is_neg_inf()) return a;
  return Rational(a.value() - b.value());
}

TropScalar trop_pow(const TropScalar& a, long k) {
  if (k == 0) return TropScalar::unit();
  if (a.is_neg_inf()) return a;
  return Rational(a.value() * k);
}

TropScalar parse_trop(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "-inf" || text == "-Infinity" || text == "-∞") return TropScalar::neg_inf();
  return parse_rational(text);
}

std::string to_string(const TropScalar& a) {
  return a.is_finite() ? to_string(a.value()) : std::string("-inf");
}

std::ostream& operator<<(std::ostream& os, const TropScalar& a) { return os << to_string(a); }

}  // namespace tropos
