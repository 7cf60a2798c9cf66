#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropos/errors.hpp"
#include "tropos/factorization.hpp"
#include "tropos/matrix.hpp"
#include "tropos/series_field.hpp"

namespace tropos {

struct NetworkNode {
  std::size_t id = 0;
  long col = 0;
  long row = 0;

  friend bool operator==(const NetworkNode&, const NetworkNode&) = default;
};

template <typename W>
struct NetworkEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  W weight;

  friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
};

// A directed network whose edges strictly increase the column, hence
// acyclic. sources[i] and targets[i] are node ids, numbered bottom to top.
// Planarity of user-supplied networks is trusted, not checked.
template <typename W>
struct PlanarNetwork {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge<W>> edges;
  std::vector<std::size_t> sources;
  std::vector<std::size_t> targets;

  friend bool operator==(const PlanarNetwork&, const PlanarNetwork&) = default;
};

using TropNetwork = PlanarNetwork<TropScalar>;
using SeriesNetwork = PlanarNetwork<SeriesRat>;

// The semiring in which path weights are accumulated.
template <typename W>
struct PathSemiring;

template <>
struct PathSemiring<TropScalar> {
  static TropScalar zero() { return TropScalar::neg_inf(); }
  static TropScalar one() { return TropScalar::unit(); }
  static TropScalar add(const TropScalar& a, const TropScalar& b) { return trop_add(a, b); }
  static TropScalar mul(const TropScalar& a, const TropScalar& b) { return trop_mul(a, b); }
};

template <>
struct PathSemiring<SeriesRat> {
  static SeriesRat zero() { return SeriesRat(); }
  static SeriesRat one() { return SeriesRat(1); }
  static SeriesRat add(const SeriesRat& a, const SeriesRat& b) { return a + b; }
  static SeriesRat mul(const SeriesRat& a, const SeriesRat& b) { return a * b; }
};

// Node index by id. Throws InvalidNetwork on duplicate ids, dangling
// references, edges that do not increase the column, or unequal numbers of
// sources and targets.
template <typename W>
std::unordered_map<std::size_t, std::size_t> validate_network(const PlanarNetwork<W>& g) {
  std::unordered_map<std::size_t, std::size_t> index;
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    if (!index.emplace(g.nodes[v].id, v).second) {
      throw InvalidNetwork("duplicate node id " + std::to_string(g.nodes[v].id));
    }
  auto lookup = [&](std::size_t id) {
    const auto it = index.find(id);
    if (it == index.end()) throw InvalidNetwork("unknown node id " + std::to_string(id));
    return it->second;
  };
  for (const auto& e : g.edges) {
    if (g.nodes[lookup(e.from)].col >= g.nodes[lookup(e.to)].col) {
      throw InvalidNetwork("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                           " does not move strictly rightwards");
    }
  }
  if (g.sources.size() != g.targets.size()) throw InvalidNetwork("sources and targets differ in number");
  for (auto s : g.sources) lookup(s);
  for (auto t : g.targets) lookup(t);
  return index;
}

// Entry (i, j) accumulates the weights of all source-i to target-j paths:
// the best one tropically, the sum over K.
template <typename W>
Matrix<W> weight_matrix(const PlanarNetwork<W>& g) {
  using S = PathSemiring<W>;
  const auto index = validate_network(g);
  const std::size_t v_count = g.nodes.size();
  std::vector<std::size_t> order(v_count);
  for (std::size_t v = 0; v < v_count; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.nodes[a].col < g.nodes[b].col; });
  std::vector<std::vector<const NetworkEdge<W>*>> out_edges(v_count);
  for (const auto& e : g.edges) out_edges[index.at(e.from)].push_back(&e);

  const std::size_t n = g.sources.size();
  Matrix<W> result(n, n, S::zero());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<W> acc(v_count, S::zero());
    acc[index.at(g.sources[i])] = S::one();
    for (const std::size_t v : order) {
      if (acc[v] == S::zero()) continue;
      for (const auto* e : out_edges[v]) {
        const std::size_t w = index.at(e->to);
        acc[w] = S::add(acc[w], S::mul(acc[v], e->weight));
      }
    }
    for (std::size_t j = 0; j < n; ++j) result(i, j) = acc[index.at(g.targets[j])];
  }
  return result;
}

inline TropMatrix weight_matrix_trop(const TropNetwork& g) { return weight_matrix(g); }
inline SeriesMatrix weight_matrix_series(const SeriesNetwork& g) { return weight_matrix(g); }

// One ladder stage per factor on n horizontal wires; node c·n + r sits at
// column c and row r+1. Horizontal edges weigh 0, except wire i of a
// Diag(i, a) stage, which weighs a. Lower(i, a) adds an edge from wire i+1 to
// wire i, Upper(i, a) one from wire i to wire i+1. An empty factor list gives
// a single stage of plain wires. Throws IndexError.
TropNetwork network_from_jacobi(const std::vector<JacobiFactor>& fs, std::size_t n);

// Replaces every weight w by t^w (−∞ by 0).
SeriesNetwork lift_network(const TropNetwork& g);

// g followed by h: h is shifted right past g and targets of g are joined to
// sources of h by unit-weight edges, so the weight matrices multiply.
template <typename W>
PlanarNetwork<W> concatenate(const PlanarNetwork<W>& g, const PlanarNetwork<W>& h) {
  if (g.targets.size() != h.sources.size()) throw InvalidNetwork("cannot join networks of different sizes");
  validate_network(g);
  validate_network(h);
  PlanarNetwork<W> out = g;
  std::size_t id_offset = 0;
  long max_col = 0;
  long min_col = 0;
  for (const auto& v : g.nodes) {
    id_offset = std::max(id_offset, v.id + 1);
    max_col = std::max(max_col, v.col);
  }
  if (!h.nodes.empty()) min_col = h.nodes.front().col;
  for (const auto& v : h.nodes) min_col = std::min(min_col, v.col);
  const long col_shift = max_col + 1 - min_col;
  for (const auto& v : h.nodes) out.nodes.push_back({v.id + id_offset, v.col + col_shift, v.row});
  for (const auto& e : h.edges) out.edges.push_back({e.from + id_offset, e.to + id_offset, e.weight});
  for (std::size_t i = 0; i < g.targets.size(); ++i)
    out.edges.push_back({g.targets[i], h.sources[i] + id_offset, PathSemiring<W>::one()});
  out.targets.clear();
  for (auto t : h.targets) out.targets.push_back(t + id_offset);
  return out;
}

}  // namespace tropos
