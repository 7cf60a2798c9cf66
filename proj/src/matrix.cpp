#include "tropos/matrix.hpp"

#include <numeric>

namespace tropos {

TropMatrix trop_identity(std::size_t n) {
  TropMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = TropScalar::unit();
  return id;
}

TropMatrix max_plus_product(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("max-plus product shape mismatch");
  TropMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_neg_inf()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = trop_add(out(i, j), trop_mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

bool is_finite(const TropMatrix& a) {
  for (const auto& x : a.entries())
    if (x.is_neg_inf()) return false;
  return true;
}

IndexSet full_index_set(std::size_t n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return s;
}

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet current(k);
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (true) {
    out.push_back(current);
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::string to_string(const TropMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ",";
      s += to_string(a(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace tropos
