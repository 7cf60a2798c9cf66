#include "tropos/trop_core.hpp"

#include <optional>
#include <string>

#include "tropos/errors.hpp"

namespace tropos {
namespace {

void require_square(const TropMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + " needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  }
}

// Depth-first enumeration of S_n in lexicographic order, skipping branches
// through −∞ entries (those permutations weigh −∞ and never maximize unless
// everything does, in which case the maximizer list is empty anyway).
class PermutationSearch {
 public:
  explicit PermutationSearch(const TropMatrix& a) : a_(a), n_(a.rows()), used_(n_, false), image_(n_) {}

  PermanentResult run() {
    descend(0, Rational(0), 0);
    return std::move(result_);
  }

 private:
  void descend(std::size_t row, const Rational& partial, std::size_t inversions) {
    if (row == n_) {
      const TropScalar w(partial);
      if (result_.weight < w) {
        result_.weight = w;
        result_.maximizers.clear();
      }
      if (result_.weight == w) result_.maximizers.push_back({image_, inversions % 2 == 0});
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c] || a_(row, c).is_neg_inf()) continue;
      std::size_t added = 0;
      for (std::size_t r = 0; r < row; ++r)
        if (image_[r] > c) ++added;
      used_[c] = true;
      image_[row] = c;
      descend(row + 1, Rational(partial + a_(row, c).value()), inversions + added);
      used_[c] = false;
    }
  }

  const TropMatrix& a_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<std::size_t> image_;
  PermanentResult result_;
};

TropScalar diagonal_weight(const TropMatrix& a) {
  TropScalar w = TropScalar::unit();
  for (std::size_t i = 0; i < a.rows(); ++i) w = trop_mul(w, a(i, i));
  return w;
}

bool identity_only(const PermanentResult& r, std::size_t n) {
  if (r.maximizers.size() != 1) return false;
  const auto& img = r.maximizers.front().image;
  for (std::size_t i = 0; i < n; ++i)
    if (img[i] != i) return false;
  return true;
}

}  // namespace

PermanentResult permanent_bruteforce(const TropMatrix& a, std::size_t cap) {
  require_square(a, "permanent_bruteforce");
  if (a.rows() > cap) {
    throw CapExceeded("permanent enumeration of size " + std::to_string(a.rows()) + " exceeds cap " +
                      std::to_string(cap));
  }
  return PermutationSearch(a).run();
}

TropScalar permanent_assignment(const TropMatrix& a) {
  require_square(a, "permanent_assignment");
  const std::size_t n = a.rows();
  if (n == 0) return TropScalar::unit();

  // Hungarian method (shortest augmenting paths with potentials) minimizing
  // −A. Arrays are 1-based; column 0 is the virtual start column.
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const TropScalar& entry = a(i0 - 1, j - 1);
        if (entry.is_finite()) {
          Rational cur = -entry.value() - u[i0] - v[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = std::move(cur);
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = *minv[j];
          j1 = j;
        }
      }
      if (!delta) return TropScalar::neg_inf();
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += a(match[j] - 1, j - 1).value();
  return total;
}

const char* to_string(MinorTag tag) {
  switch (tag) {
    case MinorTag::TropPositive:
      return "TropPositive";
    case MinorTag::TropNegative:
      return "TropNegative";
    case MinorTag::SignSingular:
      return "SignSingular";
    case MinorTag::Bottom:
      return "Bottom";
  }
  return "?";
}

MinorClass classify_square(const TropMatrix& a, std::size_t cap) {
  const PermanentResult r = permanent_bruteforce(a, cap);
  MinorClass out;
  out.weight = r.weight;
  if (r.weight.is_neg_inf()) {
    out.tag = MinorTag::Bottom;
    return out;
  }
  bool any_even = false;
  bool any_odd = false;
  for (const auto& p : r.maximizers) (p.even ? any_even : any_odd) = true;
  out.tag = any_even && any_odd ? MinorTag::SignSingular : (any_even ? MinorTag::TropPositive : MinorTag::TropNegative);
  return out;
}

MinorClass classify_minor(const TropMatrix& a, const IndexSet& rows, const IndexSet& cols, std::size_t cap) {
  if (rows.size() != cols.size()) throw DimensionError("minor needs |I| = |J|");
  for (auto i : rows)
    if (i >= a.rows()) throw DimensionError("row index out of range");
  for (auto j : cols)
    if (j >= a.cols()) throw DimensionError("column index out of range");
  if (rows.empty()) return {MinorTag::TropPositive, TropScalar::unit()};
  return classify_square(a.submatrix(rows, cols), cap);
}

TropScalar max_cycle_mean(const TropMatrix& a) {
  require_square(a, "max_cycle_mean");
  const std::size_t n = a.rows();
  // walks[k][v]: best weight of a walk with exactly k arcs ending at v,
  // starting anywhere.
  std::vector<std::vector<TropScalar>> walks(n + 1, std::vector<TropScalar>(n));
  for (std::size_t v = 0; v < n; ++v) walks[0][v] = TropScalar::unit();
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (walks[k - 1][u].is_neg_inf()) continue;
      for (std::size_t v = 0; v < n; ++v) {
        walks[k][v] = trop_add(walks[k][v], trop_mul(walks[k - 1][u], a(u, v)));
      }
    }
  }
  TropScalar best = TropScalar::neg_inf();
  for (std::size_t v = 0; v < n; ++v) {
    if (walks[n][v].is_neg_inf()) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (walks[k][v].is_neg_inf()) continue;
      Rational mean = (walks[n][v].value() - walks[k][v].value()) / Rational(static_cast<long>(n - k));
      if (!worst || mean < *worst) worst = std::move(mean);
    }
    best = trop_add(best, TropScalar(*worst));
  }
  return best;
}

bool is_diag_dominant(const TropMatrix& a, bool strict, std::size_t /*cap*/) {
  require_square(a, "is_diag_dominant");
  const std::size_t n = a.rows();
  std::vector<bool> bad(n);
  bool any_bad = false;
  for (std::size_t i = 0; i < n; ++i) any_bad |= (bad[i] = a(i, i).is_neg_inf());
  // A principal submatrix through a −∞ diagonal entry has identity weight −∞:
  // never the unique optimum once |I| ≥ 2, and an optimum only if no finite
  // cycle passes through that index.
  if (any_bad) {
    if (strict) return n <= 1;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) reach[i][j] = i != j && a(i, j).is_finite();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (reach[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (bad[i] && reach[i][i]) return false;
  }
  // Every permutation splits into cycles, so the identity is (uniquely)
  // optimal on all principal submatrices iff every cycle of the row-normalized
  // off-diagonal part weighs ≤ 0 (< 0). Indices with −∞ diagonal lie on no
  // finite cycle at this point and are dropped.
  IndexSet good;
  for (std::size_t i = 0; i < n; ++i)
    if (!bad[i]) good.push_back(i);
  TropMatrix normalized(good.size(), good.size());
  for (std::size_t p = 0; p < good.size(); ++p)
    for (std::size_t q = 0; q < good.size(); ++q)
      if (p != q) normalized(p, q) = trop_div(a(good[p], good[q]), a(good[p], good[p]));
  const TropScalar mean = max_cycle_mean(normalized);
  return strict ? mean < TropScalar::unit() : mean <= TropScalar::unit();
}

bool is_diag_dominant_bruteforce(const TropMatrix& a, bool strict, std::size_t cap) {
  require_square(a, "is_diag_dominant_bruteforce");
  const std::size_t n = a.rows();
  if (n > cap) throw CapExceeded("principal submatrix enumeration exceeds cap");
  for (std::size_t size = 1; size <= n; ++size) {
    for (const auto& subset : k_subsets(n, size)) {
      const TropMatrix sub = a.submatrix(subset, subset);
      const PermanentResult r = permanent_bruteforce(sub, cap);
      if (strict) {
        if (size >= 2 && !identity_only(r, size)) return false;
      } else if (r.weight != diagonal_weight(sub)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace tropos
