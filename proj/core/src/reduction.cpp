#include "minorforge/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minorforge/check.hpp"

namespace minorforge {

namespace {

// Both reduction classes depend on the graph only through (n, m), so the
// greedy engine takes the membership test in that shape. Candidate edge
// counts can go negative after subtracting triangles, hence int64.
using ClassTest = std::function<bool(uint32_t n, int64_t m)>;

uint32_t argmin_degree(const Graph& g) {
  uint32_t best = 0;
  for (uint32_t v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

// Lexicographically smallest edge with the fewest triangles.
struct EdgePick {
  uint32_t u = 0;
  uint32_t v = 0;
  uint32_t triangles = 0;
};

EdgePick min_triangle_edge(const Graph& g) {
  EdgePick pick;
  bool have = false;
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (v <= u) continue;
      const uint32_t t = g.triangles_on_edge(u, v);
      if (!have || t < pick.triangles) {
        pick = {u, v, t};
        have = true;
      }
    }
  }
  ensure(have, "min_triangle_edge needs at least one edge");
  return pick;
}

// Repeats single minor operations while they keep membership, preferring the
// contraction that loses fewest edges, then edge deletion, then removal of a
// low-degree vertex. The result is minimal in the sense that no further
// single operation stays in the class.
void reduce_to_minimal(Surgeon& s, const ClassTest& member) {
  for (;;) {
    const Graph& g = s.graph();
    const uint32_t n = g.vertex_count();
    const int64_t m = static_cast<int64_t>(g.edge_count());

    bool have_edge = false;
    EdgePick best;
    for (uint32_t u = 0; u < n; ++u) {
      for (uint32_t v : g.neighbors(u)) {
        if (v <= u) continue;
        const uint32_t t = g.triangles_on_edge(u, v);
        if (have_edge && t >= best.triangles) continue;
        if (member(n - 1, m - 1 - static_cast<int64_t>(t))) {
          best = {u, v, t};
          have_edge = true;
        }
      }
    }
    if (have_edge) {
      s.contract_edge(best.u, best.v);
      continue;
    }

    // Every edge deletion moves (n, m) to (n, m-1); take the first edge.
    if (m >= 1 && member(n, m - 1)) {
      bool deleted = false;
      for (uint32_t u = 0; u < n && !deleted; ++u) {
        for (uint32_t v : g.neighbors(u)) {
          if (v <= u) continue;
          s.delete_edge(u, v);
          deleted = true;
          break;
        }
      }
      continue;
    }

    bool have_vertex = false;
    uint32_t doomed = 0;
    for (uint32_t v = 0; v < n; ++v) {
      if (have_vertex && g.degree(v) >= g.degree(doomed)) continue;
      if (member(n - 1, m - static_cast<int64_t>(g.degree(v)))) {
        doomed = v;
        have_vertex = true;
      }
    }
    if (have_vertex) {
      s.delete_vertex(doomed);
      continue;
    }
    break;
  }
}

ClassTest avg_degree_test(const Rational& threshold) {
  return [threshold](uint32_t n, int64_t m) {
    return n >= 1 && m >= 0 &&
           Rational(2 * m) >= threshold * Rational(static_cast<int64_t>(n));
  };
}

ClassTest k_dense_test(int64_t k) {
  const int64_t base = k * (k + 1) / 2;
  return [k, base](uint32_t n, int64_t m) {
    return static_cast<int64_t>(n) >= k && m >= k * static_cast<int64_t>(n) - base;
  };
}

void reduce_avg_degree(Surgeon& s, const Rational& threshold) {
  reduce_to_minimal(s, avg_degree_test(threshold));

  const Graph& r = s.graph();
  const int64_t n = r.vertex_count();
  const int64_t m = static_cast<int64_t>(r.edge_count());
  const int64_t want =
      std::max<int64_t>(0, (threshold * Rational(n) / Rational(2)).ceil_ll());
  ensure(m == want, "average-degree reduction stops at the minimum edge count");
  const int64_t half = (threshold / Rational(2)).floor_ll();
  for (const auto& [u, v] : r.edges()) {
    ensure(static_cast<int64_t>(r.triangles_on_edge(u, v)) >= half,
           "average-degree reduction puts every edge in enough triangles");
  }
  if (threshold > Rational(0)) {
    ensure(Rational(2 * static_cast<int64_t>(r.min_degree())) > threshold,
           "average-degree reduction keeps the minimum degree above half the threshold");
  }
}

void reduce_k_dense(Surgeon& s, int64_t k) {
  reduce_to_minimal(s, k_dense_test(k));

  const Graph& r = s.graph();
  const int64_t n = r.vertex_count();
  const int64_t m = static_cast<int64_t>(r.edge_count());
  ensure(m == k * n - k * (k + 1) / 2, "k-dense reduction stops at the exact edge count");
  if (r.is_complete()) {
    ensure(n == k, "complete k-dense reduction is K_k");
  } else {
    ensure(static_cast<int64_t>(r.min_degree()) >= k + 1,
           "incomplete k-dense reduction has minimum degree above k");
    for (uint32_t v = 0; v < r.vertex_count(); ++v) {
      ensure(static_cast<int64_t>(r.induced(r.neighbors(v)).min_degree()) >= k,
             "k-dense reduction: neighborhoods induce minimum degree k");
    }
  }
}

// Deletes edges until m <= k*n, never touching an edge with an endpoint of
// degree < 2. While m > k*n >= n some edge has both endpoints on cycles, so
// a protected edge always exists and no vertex is ever isolated here.
void trim_to_k_per_vertex(Surgeon& s, int64_t k) {
  while (static_cast<int64_t>(s.graph().edge_count()) >
         k * static_cast<int64_t>(s.graph().vertex_count())) {
    const Graph& g = s.graph();
    bool found = false;
    uint32_t eu = 0;
    uint32_t ev = 0;
    for (uint32_t u = 0; u < g.vertex_count() && !found; ++u) {
      if (g.degree(u) < 2) continue;
      for (uint32_t v : g.neighbors(u)) {
        if (v <= u) continue;
        if (g.degree(v) < 2) continue;
        eu = u;
        ev = v;
        found = true;
        break;
      }
    }
    ensure(found, "edge trimming finds an edge with both endpoints of degree 2");
    s.delete_edge(eu, ev);
  }
}

std::vector<uint32_t> closed_neighborhood(const Graph& g, uint32_t v) {
  std::vector<uint32_t> keep = g.neighbors(v);
  keep.insert(std::lower_bound(keep.begin(), keep.end(), v), v);
  return keep;
}

DenseMinorOutcome finish(Surgeon&& s, DenseMinorKind kind, uint32_t k, const Rational& c1,
                         const Rational& c2) {
  DenseMinorOutcome out;
  out.kind = kind;
  out.witness = s.graph();
  out.trace = s.trace();
  out.n = out.witness.vertex_count();
  out.delta = out.witness.min_degree();
  out.k = k;
  out.c1 = c1;
  out.c2 = c2;
  check_outcome_invariants(out);
  return out;
}

}  // namespace

ReducedGraph minor_minimal_avg_degree(const Graph& g, const Rational& threshold) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("minor_minimal_avg_degree: empty graph");
  }
  if (g.average_degree() < threshold) {
    throw std::invalid_argument("minor_minimal_avg_degree: average degree below threshold");
  }
  Surgeon s(g);
  reduce_avg_degree(s, threshold);
  return {s.graph(), s.trace()};
}

ReducedGraph dense_minor(const Graph& g, bool closed_neighborhood_variant) {
  if (g.vertex_count() == 0) throw std::invalid_argument("dense_minor: empty graph");
  const Rational d = g.average_degree();
  if (d < Rational(1)) throw std::invalid_argument("dense_minor: average degree below 1");

  Surgeon s(g);
  reduce_avg_degree(s, d);
  const Graph& r = s.graph();
  const uint32_t v = argmin_degree(r);
  if (closed_neighborhood_variant) {
    s.keep_only(closed_neighborhood(r, v));
  } else {
    s.keep_only(r.neighbors(v));
  }

  const Graph& w = s.graph();
  const int64_t extra = closed_neighborhood_variant ? 1 : 0;
  const int64_t cap = ((d * d + Rational(1)) / (d + Rational(1))).ceil_ll() + extra;
  ensure(static_cast<int64_t>(w.vertex_count()) <= cap,
         "dense_minor witness stays under the vertex cap");
  ensure(static_cast<int64_t>(w.min_degree()) >= (d / Rational(2)).floor_ll() + extra,
         "dense_minor witness keeps its minimum degree");
  return {w, s.trace()};
}

ReducedGraph minor_minimal_k_dense(const Graph& g, uint32_t k) {
  if (k == 0) throw std::invalid_argument("minor_minimal_k_dense: k must be positive");
  const int64_t kk = k;
  if (!k_dense_test(kk)(g.vertex_count(), static_cast<int64_t>(g.edge_count()))) {
    throw std::invalid_argument("minor_minimal_k_dense: input outside the class");
  }
  Surgeon s(g);
  reduce_k_dense(s, kk);
  return {s.graph(), s.trace()};
}

DenseMinorOutcome dense_or_clique(const Graph& g, uint32_t k, const Rational& c1,
                                  const Rational& c2) {
  if (k == 0) throw std::invalid_argument("dense_or_clique: k must be positive");
  if (c1 <= Rational(2)) throw std::invalid_argument("dense_or_clique: c1 must exceed 2");
  if (c2 <= Rational(1)) throw std::invalid_argument("dense_or_clique: c2 must exceed 1");
  if (g.vertex_count() == 0) throw std::invalid_argument("dense_or_clique: empty graph");
  const int64_t kk = k;
  const Rational rk(kk);
  if (g.average_degree() < Rational(4) * rk) {
    throw std::invalid_argument("dense_or_clique: average degree below 4k");
  }

  Surgeon s(g);
  reduce_k_dense(s, 2 * kk);

  if (s.graph().is_complete()) {
    // K_2k; peel vertices until K_k remains.
    while (s.graph().vertex_count() > k) {
      s.delete_vertex(s.graph().vertex_count() - 1);
    }
    return finish(std::move(s), DenseMinorKind::Clique, k, c1, c2);
  }

  {
    const Graph& r = s.graph();
    const uint32_t v = argmin_degree(r);
    ensure(static_cast<int64_t>(r.degree(v)) <= 4 * kk - 1,
           "low-degree vertex sits under the average");
    s.keep_only(r.neighbors(v));
  }

  const uint32_t n0 = s.graph().vertex_count();
  ensure(static_cast<int64_t>(s.graph().min_degree()) >= 2 * kk,
         "neighborhood starts with minimum degree 2k");
  if (Rational(static_cast<int64_t>(n0)) <= (c1 / Rational(2) + Rational(1)) * rk) {
    return finish(std::move(s), DenseMinorKind::OpenNeighborhood, k, c1, c2);
  }

  trim_to_k_per_vertex(s, kk);
  const int64_t steps = (c1 * rk / Rational(2)).floor_ll();
  ensure(steps >= 1, "contraction loop runs at least once");
  const Rational degree_floor = (Rational(1) + Rational(1) / c1) * rk;

  for (int64_t i = 0; i < steps; ++i) {
    {
      const Graph& cur = s.graph();
      const Rational m(static_cast<int64_t>(cur.edge_count()));
      const Rational n(static_cast<int64_t>(cur.vertex_count()));
      ensure(m <= rk * n, "contraction loop: edge count at most k*n");
      ensure(m >= rk * n - Rational(i) * rk / c1,
             "contraction loop: edge count above the sloped floor");
      ensure(cur.edge_count() >= 1, "contraction loop has an edge to inspect");
    }

    const EdgePick pick = min_triangle_edge(s.graph());
    if (Rational(static_cast<int64_t>(pick.triangles)) >= degree_floor - Rational(1)) {
      // Every edge lies in that many triangles, so any closed neighborhood
      // is dense; take one around a vertex of minimum degree.
      const Graph& cur = s.graph();
      const uint32_t v = argmin_degree(cur);
      ensure(static_cast<int64_t>(cur.degree(v)) <= 2 * kk,
             "closed-neighborhood center has degree at most 2k");
      s.keep_only(closed_neighborhood(cur, v));
      return finish(std::move(s), DenseMinorKind::ClosedNeighborhood, k, c1, c2);
    }

    const uint32_t merged = std::min(pick.u, pick.v);
    s.contract_edge(pick.u, pick.v);
    // Contracting an isolated pair leaves an isolated vertex; drop it so
    // minimum-degree choices stay meaningful.
    if (s.graph().degree(merged) == 0) {
      s.delete_vertex(merged);
    }
    trim_to_k_per_vertex(s, kk);
  }

  {
    const Graph& f = s.graph();
    ensure(k_dense_test(kk)(f.vertex_count(), static_cast<int64_t>(f.edge_count())),
           "contraction loop lands in the k-dense class");
  }
  reduce_k_dense(s, kk);

  if (s.graph().is_complete()) {
    return finish(std::move(s), DenseMinorKind::Clique, k, c1, c2);
  }

  const uint32_t v = argmin_degree(s.graph());
  if (Rational(static_cast<int64_t>(s.graph().degree(v))) <= c2 * rk) {
    s.keep_only(s.graph().neighbors(v));
    return finish(std::move(s), DenseMinorKind::DenseNeighborhood, k, c1, c2);
  }
  return finish(std::move(s), DenseMinorKind::EdgeMinimal, k, c1, c2);
}

DenseMinorOutcome ratio_minor(const Graph& g, uint32_t k) {
  return dense_or_clique(g, k, Rational(32929, 10000), Rational(15341, 10000));
}

DenseMinorOutcome function_minor(const Graph& g, uint32_t k) {
  return dense_or_clique(g, k, Rational(34641, 10000), Rational(14227, 10000));
}

void check_outcome_invariants(const DenseMinorOutcome& outcome) {
  ensure(outcome.witness.vertex_count() == outcome.n,
         "outcome records the witness vertex count");
  ensure(outcome.n >= 1, "outcome witness is nonempty");
  ensure(outcome.witness.min_degree() == outcome.delta,
         "outcome records the witness minimum degree");
  const Rational n(static_cast<int64_t>(outcome.n));
  const Rational delta(static_cast<int64_t>(outcome.delta));
  const Rational k(static_cast<int64_t>(outcome.k));
  const Rational& c1 = outcome.c1;
  const Rational& c2 = outcome.c2;
  switch (outcome.kind) {
    case DenseMinorKind::OpenNeighborhood:
      ensure(n <= (c1 / Rational(2) + Rational(1)) * k, "open neighborhood: vertex bound");
      ensure(delta >= Rational(2) * k, "open neighborhood: degree bound");
      break;
    case DenseMinorKind::ClosedNeighborhood:
      ensure(n <= Rational(2) * k + Rational(1), "closed neighborhood: vertex bound");
      ensure(delta >= (Rational(1) + Rational(1) / c1) * k, "closed neighborhood: degree bound");
      break;
    case DenseMinorKind::DenseNeighborhood:
      ensure(n <= c2 * k, "dense neighborhood: vertex bound");
      ensure(delta >= k, "dense neighborhood: degree bound");
      break;
    case DenseMinorKind::EdgeMinimal:
      ensure(n <= (Rational(4) - c1 / Rational(2)) * k, "edge-minimal: vertex bound");
      ensure(delta >= c2 * k, "edge-minimal: degree bound");
      break;
    case DenseMinorKind::Clique:
      ensure(outcome.witness.is_complete(), "clique outcome is complete");
      ensure(outcome.n == outcome.k, "clique outcome has exactly k vertices");
      break;
  }
}

}  // namespace minorforge
