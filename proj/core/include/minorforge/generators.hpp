#pragma once

#include <cstdint>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

Graph empty_graph(uint32_t n);
Graph complete_graph(uint32_t n);
Graph path_graph(uint32_t n);
Graph cycle_graph(uint32_t n);  // n >= 3
Graph star_graph(uint32_t leaves);
Graph complete_bipartite(uint32_t a, uint32_t b);
Graph complete_multipartite(const std::vector<uint32_t>& part_sizes);
Graph grid_graph(uint32_t rows, uint32_t cols);
Graph disjoint_triangles(uint32_t k);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

// G(n, p): each pair independently with probability p, pairs visited in
// lexicographic order so a seed pins the graph exactly.
Graph gnp(uint32_t n, double p, uint64_t seed);

// Random d-regular graph by the pairing model: d stubs per vertex, a random
// perfect matching on stubs, resampled from scratch whenever it produces a
// loop or parallel edge. Requires d < t and even d*t.
Graph random_regular(uint32_t t, uint32_t d, uint64_t seed);

}  // namespace minorforge
