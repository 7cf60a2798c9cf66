#include "tropos/networks.hpp"

namespace tropos {

TropNetwork network_from_jacobi(const std::vector<JacobiFactor>& fs, std::size_t n) {
  // Validates every index before building anything.
  multiply_factors(fs, n);
  const std::size_t stage_count = std::max<std::size_t>(fs.size(), 1);

  TropNetwork g;
  auto id = [n](std::size_t c, std::size_t r) { return c * n + r; };
  for (std::size_t c = 0; c <= stage_count; ++c)
    for (std::size_t r = 0; r < n; ++r)
      g.nodes.push_back({id(c, r), static_cast<long>(c), static_cast<long>(r + 1)});
  for (std::size_t c = 0; c < stage_count; ++c) {
    const JacobiFactor* f = c < fs.size() ? &fs[c] : nullptr;
    for (std::size_t r = 0; r < n; ++r) {
      TropScalar w = TropScalar::unit();
      if (f && f->kind == JacobiKind::Diag && f->i == r) w = f->a;
      g.edges.push_back({id(c, r), id(c + 1, r), w});
    }
    if (f && f->kind == JacobiKind::Lower) g.edges.push_back({id(c, f->i + 1), id(c + 1, f->i), f->a});
    if (f && f->kind == JacobiKind::Upper) g.edges.push_back({id(c, f->i), id(c + 1, f->i + 1), f->a});
  }
  for (std::size_t r = 0; r < n; ++r) {
    g.sources.push_back(id(0, r));
    g.targets.push_back(id(stage_count, r));
  }
  return g;
}

SeriesNetwork lift_network(const TropNetwork& g) {
  SeriesNetwork out;
  out.nodes = g.nodes;
  out.sources = g.sources;
  out.targets = g.targets;
  for (const auto& e : g.edges)
    out.edges.push_back({e.from, e.to, e.weight.is_finite() ? SeriesRat::t_pow(e.weight.value()) : SeriesRat()});
  return out;
}

}  // namespace tropos
