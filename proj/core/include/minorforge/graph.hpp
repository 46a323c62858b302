#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "minorforge/rational.hpp"

namespace minorforge {

// Simple undirected graph on dense vertex ids 0..n-1. Neighbor lists stay
// sorted; self-loops and parallel edges are rejected. Contraction merges
// into the smaller endpoint id and shifts every id above the removed vertex
// down by one, so sequences of operations replay deterministically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(uint32_t n) : adj_(n) {}

  uint32_t vertex_count() const { return static_cast<uint32_t>(adj_.size()); }
  uint64_t edge_count() const { return m_; }

  // Returns false when the edge already exists. Throws on loops and on
  // out-of-range endpoints.
  bool add_edge(uint32_t u, uint32_t v);
  bool has_edge(uint32_t u, uint32_t v) const;
  uint32_t degree(uint32_t v) const;
  const std::vector<uint32_t>& neighbors(uint32_t v) const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

  Rational average_degree() const;  // 2m/n; throws on the empty graph
  uint32_t min_degree() const;      // throws on the empty graph
  uint32_t max_degree() const;

  // Number of triangles through an existing edge, |N(u) ∩ N(v)|.
  uint32_t triangles_on_edge(uint32_t u, uint32_t v) const;

  std::vector<std::vector<uint32_t>> components() const;  // each sorted, ordered by minimum
  bool connected() const;  // empty graph counts as connected

  void contract_edge(uint32_t u, uint32_t v);  // throws unless uv is an edge
  void delete_edge(uint32_t u, uint32_t v);
  void delete_vertex(uint32_t v);

  // Subgraph induced on `keep` (must be sorted ascending, distinct, in
  // range); vertex i of the result is keep[i].
  Graph induced(const std::vector<uint32_t>& keep) const;

  bool is_complete() const;
  bool is_tree() const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  void check_vertex(uint32_t v) const;
  std::vector<std::vector<uint32_t>> adj_;
  uint64_t m_ = 0;
};

// Adjacency as one bitmask row per vertex (ceil(n/64) words each). Backs the
// hot loops: triangle counts during reduction and the neighborhood algebra in
// the probabilistic embedder.
class BitRows {
 public:
  explicit BitRows(const Graph& g);

  uint32_t n() const { return n_; }
  uint32_t words() const { return words_; }
  const uint64_t* row(uint32_t v) const { return data_.data() + static_cast<size_t>(v) * words_; }

  bool test(uint32_t v, uint32_t w) const {
    return (row(v)[w >> 6] >> (w & 63)) & 1u;
  }
  uint32_t common_count(uint32_t u, uint32_t v) const;

 private:
  uint32_t n_ = 0;
  uint32_t words_ = 0;
  std::vector<uint64_t> data_;
};

// Elimination order: position i lists a vertex with at most two neighbors
// among the vertices after it. Existence certifies 2-degeneracy.
using EliminationOrder = std::vector<uint32_t>;

// Greedy smallest-id peel; nullopt when h is not 2-degenerate.
std::optional<EliminationOrder> degeneracy_order_2(const Graph& h);

bool is_valid_elimination_order_2(const Graph& h, const EliminationOrder& order);

// Spanning connected subgraph with exactly |V| edges: a BFS tree from the
// smallest vertex plus the lexicographically least non-tree edge. Requires a
// connected input containing a cycle; throws on trees.
Graph tree_plus_edge_spanning(const Graph& component);

}  // namespace minorforge
