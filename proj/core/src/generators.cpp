#include "minorforge/generators.hpp"

#include <numeric>
#include <stdexcept>

#include "minorforge/rng.hpp"

namespace minorforge {

Graph empty_graph(uint32_t n) { return Graph(n); }

Graph complete_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star_graph(uint32_t leaves) {
  Graph g(leaves + 1);
  for (uint32_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(uint32_t a, uint32_t b) {
  return complete_multipartite({a, b});
}

Graph complete_multipartite(const std::vector<uint32_t>& part_sizes) {
  uint32_t n = 0;
  for (uint32_t s : part_sizes) n += s;
  Graph g(n);
  std::vector<uint32_t> part_of(n);
  uint32_t v = 0;
  for (uint32_t p = 0; p < part_sizes.size(); ++p)
    for (uint32_t i = 0; i < part_sizes[p]; ++i) part_of[v++] = p;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t w = u + 1; w < n; ++w)
      if (part_of[u] != part_of[w]) g.add_edge(u, w);
  return g;
}

Graph grid_graph(uint32_t rows, uint32_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid: zero dimension");
  Graph g(rows * cols);
  auto id = [cols](uint32_t r, uint32_t c) { return r * cols + c; };
  for (uint32_t r = 0; r < rows; ++r)
    for (uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph disjoint_triangles(uint32_t k) {
  Graph g(3 * k);
  for (uint32_t i = 0; i < k; ++i) {
    g.add_edge(3 * i, 3 * i + 1);
    g.add_edge(3 * i, 3 * i + 2);
    g.add_edge(3 * i + 1, 3 * i + 2);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (uint32_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  uint32_t off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(off + u, off + v);
  return g;
}

Graph gnp(uint32_t n, double p, uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p outside [0, 1]");
  SplitMix64 rng(seed);
  Graph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

Graph random_regular(uint32_t t, uint32_t d, uint64_t seed) {
  if (d >= t) throw std::invalid_argument("random_regular: need d < t");
  if ((static_cast<uint64_t>(t) * d) % 2 != 0)
    throw std::invalid_argument("random_regular: t*d must be even");
  SplitMix64 rng(seed);

  std::vector<uint32_t> stubs(static_cast<size_t>(t) * d);
  for (uint32_t v = 0; v < t; ++v)
    for (uint32_t i = 0; i < d; ++i) stubs[static_cast<size_t>(v) * d + i] = v;

  const int max_rounds = 1000;
  for (int round = 0; round < max_rounds; ++round) {
    rng.shuffle(stubs);
    Graph g(t);
    bool clean = true;
    for (size_t i = 0; i + 1 < stubs.size() && clean; i += 2) {
      uint32_t u = stubs[i], v = stubs[i + 1];
      if (u == v || !g.add_edge(u, v)) clean = false;
    }
    if (clean) return g;
  }
  throw std::runtime_error("random_regular: pairing model failed to converge");
}

}  // namespace minorforge
