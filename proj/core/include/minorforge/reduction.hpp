#pragma once

#include <cstdint>

#include "minorforge/graph.hpp"
#include "minorforge/rational.hpp"
#include "minorforge/trace.hpp"

namespace minorforge {

struct ReducedGraph {
  Graph graph;
  ReductionTrace trace;
};

// Applies single contractions and deletions greedily while the average degree
// stays at least `threshold`, stopping once no single operation keeps it
// there. The stopping rule forces the edge count to exactly
// ceil(threshold*n/2), puts every edge in at least floor(threshold/2)
// triangles, and puts the minimum degree above threshold/2. Inputs below the
// threshold are rejected.
ReducedGraph minor_minimal_avg_degree(const Graph& g, const Rational& threshold);

// Small dense piece of g. With d = average_degree(g), required to be at
// least 1: the open variant has at most ceil((d^2+1)/(d+1)) vertices and
// minimum degree at least floor(d/2); the closed variant keeps the center
// vertex too, for one more vertex and minimum degree floor(d/2)+1.
ReducedGraph dense_minor(const Graph& g, bool closed_neighborhood);

// Reduction inside the class of graphs with at least k vertices and at least
// k*n - k(k+1)/2 edges. The input must belong to the class; the output is a
// minor of it meeting the edge bound with equality, and is either complete on
// k vertices or has every vertex neighborhood inducing minimum degree >= k.
ReducedGraph minor_minimal_k_dense(const Graph& g, uint32_t k);

// Where dense_or_clique found its witness.
enum class DenseMinorKind {
  OpenNeighborhood,    // neighborhood of a low-degree vertex, before the contraction loop
  ClosedNeighborhood,  // closed neighborhood reached inside the contraction loop
  DenseNeighborhood,   // neighborhood of a low-degree vertex of the final edge-minimal graph
  EdgeMinimal,         // the final edge-minimal graph itself
  Clique,              // complete graph on exactly k vertices
};

struct DenseMinorOutcome {
  DenseMinorKind kind = DenseMinorKind::Clique;
  Graph witness;
  ReductionTrace trace;   // replays on the input graph to the witness
  uint32_t n = 0;         // witness vertex count
  uint32_t delta = 0;     // witness minimum degree
  uint32_t k = 0;
  Rational c1;
  Rational c2;
};

// Produces a minor of g that is either complete on k vertices or small with
// large minimum degree. Requires average_degree(g) >= 4k, c1 > 2, c2 > 1.
// Each kind trades vertex count against minimum degree:
//
//   OpenNeighborhood    n <= (c1/2+1)k    delta >= 2k
//   ClosedNeighborhood  n <= 2k+1         delta >= (1+1/c1)k
//   DenseNeighborhood   n <= c2*k         delta >= k
//   EdgeMinimal         n <= (4-c1/2)k    delta >= c2*k
//   Clique              witness is K_k
DenseMinorOutcome dense_or_clique(const Graph& g, uint32_t k, const Rational& c1,
                                  const Rational& c2);

// dense_or_clique with the constants that maximize the worst case of
// delta/n across the four non-clique kinds: c1 = 3.2929, c2 = 1.5341, giving
// min delta/n ~ 0.6518 and min (2*delta - n)/k ~ 0.4659.
DenseMinorOutcome ratio_minor(const Graph& g, uint32_t k);

// dense_or_clique with the constants that maximize the worst case of
// (2*delta - n)/k: c1 = 3.4641, c2 = 1.4227, giving min (2*delta - n)/k
// ~ 0.5773 and min delta/n ~ 0.6273.
DenseMinorOutcome function_minor(const Graph& g, uint32_t k);

// Re-checks the (n, delta) guarantee for the outcome's kind against the
// recorded witness; throws std::logic_error on any mismatch.
void check_outcome_invariants(const DenseMinorOutcome& outcome);

}  // namespace minorforge
