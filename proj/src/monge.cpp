#include "tropos/monge.hpp"

#include <optional>
#include <string>

#include "tropos/errors.hpp"

namespace tropos {

BoolMatrix support_pattern(const TropMatrix& a) {
  BoolMatrix out(a.rows(), a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).is_finite() ? 1 : 0;
  return out;
}

bool is_double_echelon(const TropMatrix& a) {
  const BoolMatrix p = support_pattern(a);
  std::optional<std::pair<std::size_t, std::size_t>> previous;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::size_t first = p.cols();
    std::size_t last = 0;
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j)) {
        if (first == p.cols()) first = j;
        last = j;
      }
    if (first == p.cols()) continue;
    for (std::size_t j = first; j <= last; ++j)
      if (!p(i, j)) return false;
    if (previous && (first < previous->first || last < previous->second)) return false;
    previous = {first, last};
  }
  return true;
}

StaircaseDecomposition staircase_decompose(const TropMatrix& a) {
  if (!is_finite(a)) throw InfiniteEntry("staircase_decompose needs finite entries");
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (n == 0 || m == 0) throw DimensionError("staircase_decompose needs a nonempty matrix");
  StaircaseDecomposition d;
  d.u.resize(n);
  d.v.resize(m);
  for (std::size_t i = 0; i < n; ++i) d.u[i] = a(i, 0).value();
  for (std::size_t j = 0; j < m; ++j) d.v[j] = a(0, j).value() - a(0, 0).value();
  // S has zero first row and column, and S_{ij} = Σ_{k≤i, l≤j} λ_{kl}.
  auto s = [&](std::size_t i, std::size_t j) { return Rational(a(i, j).value() - d.u[i] - d.v[j]); };
  d.lambda = Matrix<Rational>(n - 1, m - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < m; ++j) {
      Rational l = s(i, j) + s(i - 1, j - 1) - s(i - 1, j) - s(i, j - 1);
      if (l < 0) {
        throw NotMonge("Monge inequality fails on rows " + std::to_string(i) + "," + std::to_string(i + 1) +
                       " and columns " + std::to_string(j) + "," + std::to_string(j + 1));
      }
      d.lambda(i - 1, j - 1) = std::move(l);
    }
  return d;
}

TropMatrix staircase_reconstruct(const StaircaseDecomposition& d) {
  const std::size_t n = d.u.size();
  const std::size_t m = d.v.size();
  if (n == 0 || m == 0 || d.lambda.rows() != n - 1 || d.lambda.cols() != m - 1) {
    throw DimensionError("staircase decomposition has inconsistent shapes");
  }
  for (const auto& l : d.lambda.entries())
    if (l < 0) throw NegativeCoefficient("staircase coefficient " + to_string(l) + " is negative");
  // Two-dimensional prefix sums of λ.
  Matrix<Rational> prefix(n, m);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < m; ++j)
      prefix(i, j) = d.lambda(i - 1, j - 1) + prefix(i - 1, j) + prefix(i, j - 1) - prefix(i - 1, j - 1);
  TropMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = Rational(d.u[i] + d.v[j] + prefix(i, j));
  return out;
}

}  // namespace tropos
