#include "tropos/sampling.hpp"

#include <string>

#include "tropos/errors.hpp"
#include "tropos/positivity.hpp"

namespace tropos {

const char* to_string(LiftKind kind) {
  switch (kind) {
    case LiftKind::Canonical:
      return "canonical";
    case LiftKind::Hadamard:
      return "hadamard";
    case LiftKind::Random:
      return "random";
  }
  return "?";
}

LiftKind parse_lift_kind(std::string_view text) {
  if (text == "canonical") return LiftKind::Canonical;
  if (text == "hadamard") return LiftKind::Hadamard;
  if (text == "random") return LiftKind::Random;
  throw ParseError("unknown lift kind '" + std::string(text) + "'");
}

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::rational(long lo, long hi) {
  const long q = integer(1, max_den_);
  Rational r(integer(lo * q, hi * q), q);
  r.canonicalize();
  return r;
}

Rational Sampler::positive_rational(long hi) {
  const long q = integer(1, max_den_);
  Rational r(integer(1, hi * q), q);
  r.canonicalize();
  return r;
}

TropMatrix Sampler::matrix(std::size_t n, std::size_t m, double p_neg_inf, long lo, long hi) {
  TropMatrix a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!coin(p_neg_inf)) a(i, j) = rational(lo, hi);
  return a;
}

StaircaseDecomposition Sampler::staircase(std::size_t n, std::size_t m, bool strict, double p_zero) {
  StaircaseDecomposition d;
  for (std::size_t i = 0; i < n; ++i) d.u.push_back(rational(-4, 4));
  for (std::size_t j = 0; j < m; ++j) d.v.push_back(j == 0 ? Rational(0) : rational(-4, 4));
  d.lambda = Matrix<Rational>(n - 1, m - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < m; ++j)
      d.lambda(i, j) = (!strict && coin(p_zero)) ? Rational(0) : positive_rational(3);
  return d;
}

TropMatrix Sampler::monge(std::size_t n, std::size_t m, bool strict, double p_zero) {
  return staircase_reconstruct(staircase(n, m, strict, p_zero));
}

TropMatrix Sampler::tn_masked(std::size_t n, std::size_t m, double p_neg_inf) {
  const TropMatrix base = monge(n, m);
  for (int attempt = 0; attempt < 64; ++attempt) {
    TropMatrix a = base;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (coin(p_neg_inf)) a(i, j) = TropScalar::neg_inf();
    if (is_tn_trop(a).tn_trop) return a;
  }
  return base;
}

std::vector<JacobiFactor> Sampler::jacobi_factors(std::size_t n, std::size_t factors) {
  std::vector<JacobiFactor> fs;
  for (std::size_t k = 0; k < factors; ++k) {
    JacobiFactor f;
    const long kind = n < 2 ? 2 : integer(0, 2);
    f.kind = kind == 0 ? JacobiKind::Lower : (kind == 1 ? JacobiKind::Upper : JacobiKind::Diag);
    f.i = static_cast<std::size_t>(integer(0, static_cast<long>(f.kind == JacobiKind::Diag ? n - 1 : n - 2)));
    f.a = rational(-3, 3);
    fs.push_back(f);
  }
  return fs;
}

TropMatrix Sampler::jacobi_product(std::size_t n, std::size_t factors) {
  return multiply_factors(jacobi_factors(n, factors), n);
}

SeriesMatrix Sampler::random_lift(const TropMatrix& a) {
  SeriesMatrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = SeriesRat(positive_rational(4));
  return hadamard_lift(a, b);
}

SeriesMatrix make_lift(const TropMatrix& a, LiftKind kind, std::uint64_t seed) {
  switch (kind) {
    case LiftKind::Canonical:
      return canonical_lift(a);
    case LiftKind::Hadamard: {
      const std::size_t k = std::min(a.rows(), a.cols());
      const Rational c = k <= 2 ? Rational(1) : Rational(static_cast<long>((k - 1) * (k - 1)));
      return hadamard_lift(a, vandermonde_tp2c(a.rows(), a.cols(), c));
    }
    case LiftKind::Random: {
      Sampler s(seed);
      return s.random_lift(a);
    }
  }
  throw Error("unknown lift kind");
}

}  // namespace tropos
