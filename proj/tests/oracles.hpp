#pragma once

// Independent reference implementations used only by the tests. Each one is
// written from the definition, sharing no code path with the library routine
// it checks.

#include <algorithm>
#include <numeric>
#include <vector>

#include "tropos/series_field.hpp"
#include "tropos/trop_core.hpp"

namespace tropos::oracle {

inline const TropScalar kBot = TropScalar::neg_inf();

// Laplace expansion along the first row.
inline SeriesRat laplace_det(const SeriesMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return SeriesRat(1);
  if (n == 1) return m(0, 0);
  SeriesRat total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    SeriesMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const SeriesRat term = m(0, j) * laplace_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// max over σ of Σ a_{i,σ(i)}, by std::next_permutation.
inline TropScalar permanent(const TropMatrix& a) {
  std::vector<std::size_t> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  TropScalar best = kBot;
  do {
    TropScalar w = TropScalar::unit();
    for (std::size_t i = 0; i < p.size(); ++i) w = trop_mul(w, a(i, p[i]));
    best = trop_add(best, w);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline TropMatrix maxplus_product(const TropMatrix& a, const TropMatrix& b) {
  TropMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) = trop_add(out(i, j), trop_mul(a(i, k), b(k, j)));
  return out;
}

inline TropMatrix maxplus_identity(std::size_t n) {
  TropMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = TropScalar::unit();
  return out;
}

inline SeriesMatrix matmul(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

// All k-subsets of {0..n-1} in lexicographic order, by bitmask filtering.
inline std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// max over elementary cycles of weight/length, by growing simple paths from
// their smallest vertex.
inline TropScalar max_cycle_mean(const TropMatrix& a) {
  const std::size_t n = a.rows();
  TropScalar best = kBot;
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v, const Rational& w) -> void {
    if (a(v, start).is_finite()) {
      const Rational mean = (w + a(v, start).value()) / Rational(static_cast<long>(path.size()));
      best = trop_add(best, TropScalar(mean));
    }
    for (std::size_t u = start + 1; u < n; ++u) {
      if (used[u] || !a(v, u).is_finite()) continue;
      used[u] = true;
      path.push_back(u);
      self(self, start, u, w + a(v, u).value());
      path.pop_back();
      used[u] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(dfs, s, s, Rational(0));
  }
  return best;
}

}  // namespace tropos::oracle
