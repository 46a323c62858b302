#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor_model.hpp"

namespace minorforge {

// Thrown when a randomized embedder runs out of redraws. Distinct from
// std::invalid_argument so callers can tell bad luck from bad input.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Injective placement of a pattern into a host, where an edge may be
// realized directly or through one extra host vertex recorded in `division`.
struct VertexEmbedding {
  Graph pattern;
  Graph host;
  std::vector<uint32_t> map;  // pattern vertex -> host vertex
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> division;  // (u, v) with u < v -> midpoint
};

struct EmbeddingCheck {
  bool ok = true;
  std::string violation;
};

// Validates shape, ranges, injectivity, and that every pattern edge is
// realized directly or through its division vertex. Never throws.
EmbeddingCheck check_embedding(const VertexEmbedding& e);

// Branch sets from an embedding: a singleton per pattern vertex, with each
// division vertex absorbed into its lower endpoint's branch.
MinorModel model_from_embedding(const VertexEmbedding& e);

// Greedy BFS placement of a tree on l vertices into a host of minimum degree
// at least l-1. Children take the lowest-id unused neighbor of the parent's
// image; the degree bound keeps one available at every step.
VertexEmbedding embed_tree(const Graph& g, const Graph& tree);

// Places a 2-degenerate pattern by inserting vertices in reverse elimination
// order: with zero, one, or two already-placed neighbors, the new vertex
// takes the lowest unused host vertex, unused neighbor, or unused common
// neighbor respectively. Requires 2*delta(g) - n >= t - 2, which keeps a
// common neighbor available at every insertion.
VertexEmbedding embed_2degenerate(const Graph& g, const Graph& h, const EliminationOrder& order);

// Embeds h with every edge outside the spanning 2-degenerate subgraph
// h_prime subdivided exactly once, by running embed_2degenerate on the
// pattern augmented with one midpoint vertex per missing edge. Requires
// 2*delta(g) - n >= (q - q') + t - 2 for q = |E(h)|, q' = |E(h_prime)|.
VertexEmbedding embed_le1_subdivision_degen(const Graph& g, const Graph& h, const Graph& h_prime);

struct SpanningOverlap {
  Graph realized;             // spanning subgraph of the pattern that landed on host edges
  VertexEmbedding embedding;  // the injection; its pattern field holds `realized`
};

// One uniformly random injection of V(h) into V(g), n >= t. The expected
// number of realized pattern edges is q * d / (n-1) for host average degree
// d; single draws make no promise, the tests check the mean over seeds.
SpanningOverlap random_spanning_overlap(const Graph& g, const Graph& h, uint64_t seed);

// Randomized (<=1)-subdivision embedding. Redraws random injections until
// the realized subgraph has at least ceil(q*delta/(n-1)) edges, then routes
// each missed edge through the lowest unused common neighbor of its endpoint
// images, in lexicographic edge order; the entry inequality
// 2*delta + 4 + delta*q/(n-1) >= n + t + q guarantees the routing never runs
// dry. max_attempts = 0 means the default 64*ceil(n/t) redraws; exceeding it
// throws RetryExhausted.
VertexEmbedding embed_le1_subdivision_random(const Graph& g, const Graph& h, uint64_t seed,
                                             uint64_t max_attempts = 0);

}  // namespace minorforge
