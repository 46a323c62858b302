#include "minorforge/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/check.hpp"
#include "minorforge/embedding.hpp"
#include "minorforge/generators.hpp"
#include "minorforge/io.hpp"
#include "minorforge/reduction.hpp"
#include "minorforge/trace.hpp"

namespace minorforge {

std::string DriverReport::to_text() const {
  std::ostringstream os;
  os << "driver: " << driver << '\n';
  os << "threshold: " << threshold << '\n';
  os << "average-degree: " << average_degree << '\n';
  os << "hypothesis: " << (hypothesis_met ? "met" : "not met") << '\n';
  switch (outcome) {
    case DriverOutcome::Model:
      os << "outcome: model\n";
      break;
    case DriverOutcome::HypothesisNotMet:
      os << "outcome: hypothesis-not-met\n";
      break;
    case DriverOutcome::RandomizedFailure:
      os << "outcome: randomized-failure\n";
      break;
  }
  if (!failure.empty()) os << "failure: " << failure << '\n';
  for (const auto& s : steps) os << "step: " << s << '\n';
  if (model.has_value()) {
    os << "model:\n";
    write_branch_sets(os, model->branch_sets);
  }
  return os.str();
}

int DriverReport::exit_code() const {
  switch (outcome) {
    case DriverOutcome::Model:
      return 0;
    case DriverOutcome::HypothesisNotMet:
      return 1;
    case DriverOutcome::RandomizedFailure:
      return 2;
  }
  return 2;
}

namespace {

const Rational kTreeCoeff(6929, 1000);
const Rational kPMainCoeff(6291, 1000);
const Rational kSigma(5773, 10000);

Rational avg_or_zero(const Graph& g) {
  return g.vertex_count() == 0 ? Rational(0) : g.average_degree();
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " m=" << g.edge_count();
  if (g.vertex_count() > 0) os << " avg=" << g.average_degree();
  return os.str();
}

const char* kind_name(DenseMinorKind kind) {
  switch (kind) {
    case DenseMinorKind::OpenNeighborhood:
      return "open-neighborhood";
    case DenseMinorKind::ClosedNeighborhood:
      return "closed-neighborhood";
    case DenseMinorKind::DenseNeighborhood:
      return "dense-neighborhood";
    case DenseMinorKind::EdgeMinimal:
      return "edge-minimal";
    case DenseMinorKind::Clique:
      return "clique";
  }
  return "?";
}

void note_outcome(std::vector<std::string>& steps, const DenseMinorOutcome& out) {
  std::ostringstream os;
  os << "dense witness k=" << out.k << ": " << kind_name(out.kind) << ", n=" << out.n
     << " delta=" << out.delta;
  steps.push_back(os.str());
}

MinorModel lift_through(const MinorModel& reduced, const ReductionTrace& trace,
                        const Graph& original) {
  const ReplayResult rr = replay(trace, original);
  MinorModel lifted = lift_model(reduced, rr.origins, original);
  ensure(validate_model(lifted).ok, "model survives the lift to the original host");
  return lifted;
}

// Finds a K4 model in any host of average degree >= 4. After trimming, every
// edge lies in at least two triangles and the minimum degree is 3 or 4, so
// the neighborhood of a minimum-degree vertex contains a triangle or is a
// 4-cycle; either closes a K4 together with the vertex itself.
MinorModel k4_minor(const Graph& g, std::vector<std::string>& steps) {
  const ReducedGraph red = minor_minimal_avg_degree(g, Rational(4));
  const Graph& r = red.graph;
  steps.push_back("trim at average degree 4: " + describe(r));

  uint32_t v = 0;
  for (uint32_t u = 1; u < r.vertex_count(); ++u) {
    if (r.degree(u) < r.degree(v)) v = u;
  }
  const std::vector<uint32_t> nv = r.neighbors(v);
  ensure(nv.size() == 3 || nv.size() == 4, "trimmed host has minimum degree 3 or 4");
  const Graph local = r.induced(nv);
  const uint32_t ln = local.vertex_count();

  std::optional<std::array<uint32_t, 3>> tri;
  for (uint32_t a = 0; a < ln && !tri; ++a) {
    for (uint32_t b = a + 1; b < ln && !tri; ++b) {
      for (uint32_t c = b + 1; c < ln && !tri; ++c) {
        if (local.has_edge(a, b) && local.has_edge(a, c) && local.has_edge(b, c)) tri = {a, b, c};
      }
    }
  }

  std::vector<std::vector<uint32_t>> branches;
  if (tri.has_value()) {
    branches = {{v}, {nv[(*tri)[0]]}, {nv[(*tri)[1]]}, {nv[(*tri)[2]]}};
  } else {
    ensure(ln == 4, "triangle-free neighborhood is a 4-cycle");
    const std::vector<uint32_t> nb = local.neighbors(0);
    ensure(nb.size() == 2, "4-cycle vertices have two neighbors");
    const uint32_t b = nb[0];
    const uint32_t d = nb[1];
    const uint32_t c = 6 - b - d;
    std::vector<uint32_t> rim = {nv[0], nv[d]};
    std::sort(rim.begin(), rim.end());
    branches = {{v}, std::move(rim), {nv[b]}, {nv[c]}};
  }

  const MinorModel on_trimmed{complete_graph(4), r, std::move(branches)};
  ensure(validate_model(on_trimmed).ok, "K4 branch sets validate on the trimmed host");
  return lift_through(on_trimmed, red.trace, g);
}

// Patterns on at most four vertices ride on the K4 model (or on any single
// host vertex when t == 1).
MinorModel small_pattern_minor(const Graph& g, const Graph& h, std::vector<std::string>& steps) {
  const uint32_t t = h.vertex_count();
  ensure(t >= 1 && t <= 4, "small-pattern route covers one to four vertices");
  if (t == 1) {
    ensure(g.vertex_count() > 0, "host is nonempty");
    steps.push_back("single-vertex pattern: host vertex 0 is the model");
    MinorModel m{h, g, {{0}}};
    ensure(validate_model(m).ok, "single-vertex model validates");
    return m;
  }
  MinorModel k4 = k4_minor(g, steps);
  steps.push_back("pattern has at most 4 vertices: reuse the K4 branch sets");
  MinorModel m{h, g,
               std::vector<std::vector<uint32_t>>(k4.branch_sets.begin(),
                                                  k4.branch_sets.begin() + t)};
  ensure(validate_model(m).ok, "small pattern inherits the K4 branch sets");
  return m;
}

// Core of the 2-degenerate driver, shared with the subdivision driver. The
// caller has already checked avg(g) >= 6.929 * t.
MinorModel degen_core(const Graph& g, const Graph& h, const EliminationOrder& order,
                      std::vector<std::string>& steps) {
  const uint32_t t = h.vertex_count();
  ensure(t >= 1, "degenerate core needs a nonempty pattern");
  if (t <= 4) return small_pattern_minor(g, h, steps);

  const long long k = ((Rational(static_cast<long long>(t)) - 2) / kSigma).ceil_ll() + 1;
  ensure(avg_or_zero(g) >= Rational(4 * k), "host average covers the dense-witness request");
  const DenseMinorOutcome out = function_minor(g, static_cast<uint32_t>(k));
  check_outcome_invariants(out);
  note_outcome(steps, out);

  if (out.kind == DenseMinorKind::Clique) {
    ensure(out.k >= t, "clique outcome is at least the pattern order");
    steps.push_back("clique outcome subsumes the pattern");
    return lift_through(subsume_into_complete(h, out.witness), out.trace, g);
  }

  ensure(2 * static_cast<int64_t>(out.delta) - static_cast<int64_t>(out.n) >=
             static_cast<int64_t>(t) - 2,
         "witness degree surplus covers every greedy insertion");
  const VertexEmbedding e = embed_2degenerate(out.witness, h, order);
  return lift_through(model_from_embedding(e), out.trace, g);
}

std::optional<uint32_t> lowest_isolated(const Graph& h) {
  for (uint32_t v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) return v;
  }
  return std::nullopt;
}

long long isolated_count(const Graph& h) {
  long long c = 0;
  for (uint32_t v = 0; v < h.vertex_count(); ++v) c += h.degree(v) == 0 ? 1 : 0;
  return c;
}

std::optional<std::vector<uint32_t>> first_tree_component(const Graph& h) {
  for (const auto& comp : h.components()) {
    if (h.induced(comp).is_tree()) return comp;
  }
  return std::nullopt;
}

// One spanning tree plus one extra edge per component, on the pattern's own
// vertex ids. Every component must contain a cycle.
Graph spanning_tree_plus_edge_union(const Graph& h) {
  Graph out(h.vertex_count());
  for (const auto& comp : h.components()) {
    const Graph piece = tree_plus_edge_spanning(h.induced(comp));
    for (const auto& [a, b] : piece.edges()) out.add_edge(comp[a], comp[b]);
  }
  return out;
}

// Places the lowest isolated pattern vertex on a minimum-degree host vertex
// and recurses on the rest via `recurse(child_host, child_pattern)`.
template <typename Recurse>
MinorModel place_isolated(const Graph& g0, const Graph& h, uint32_t v, std::vector<std::string>& steps,
                          Recurse&& recurse) {
  uint32_t w = 0;
  for (uint32_t u = 1; u < g0.vertex_count(); ++u) {
    if (g0.degree(u) < g0.degree(w)) w = u;
  }
  std::vector<uint32_t> keep;
  keep.reserve(g0.vertex_count() - 1);
  for (uint32_t u = 0; u < g0.vertex_count(); ++u) {
    if (u != w) keep.push_back(u);
  }
  {
    std::ostringstream os;
    os << "isolated pattern vertex " << v << " takes host vertex " << w << " (degree "
       << g0.degree(w) << ")";
    steps.push_back(os.str());
  }
  Graph child_pattern = h;
  child_pattern.delete_vertex(v);
  const MinorModel child = recurse(g0.induced(keep), child_pattern);

  std::vector<std::vector<uint32_t>> branches(h.vertex_count());
  branches[v] = {w};
  for (uint32_t j = 0; j < child_pattern.vertex_count(); ++j) {
    std::vector<uint32_t> lifted;
    lifted.reserve(child.branch_sets[j].size());
    for (uint32_t x : child.branch_sets[j]) lifted.push_back(keep[x]);
    branches[j < v ? j : j + 1] = std::move(lifted);
  }
  MinorModel out{h, g0, std::move(branches)};
  ensure(validate_model(out).ok, "model survives reinserting the isolated vertex");
  return out;
}

// Embeds a tree component greedily as single-vertex branches, removes its
// image, and recurses on the remainder. `child_check(child_host,
// child_pattern)` asserts the driver's average-degree floor before the
// recursive call.
template <typename Recurse, typename ChildCheck>
MinorModel place_tree(const Graph& g0, const Graph& h, const std::vector<uint32_t>& tv,
                      std::vector<std::string>& steps, ChildCheck&& child_check,
                      Recurse&& recurse) {
  const uint32_t t = h.vertex_count();
  const uint32_t ell = static_cast<uint32_t>(tv.size());
  const Graph tree = h.induced(tv);
  ensure(g0.vertex_count() > 0 && g0.min_degree() + 1 >= ell,
         "host minimum degree admits the greedy tree embedding");
  const VertexEmbedding e = embed_tree(g0, tree);
  {
    std::ostringstream os;
    os << "tree component on " << ell << " pattern vertices embedded as single-vertex branches";
    steps.push_back(os.str());
  }

  std::vector<char> image(g0.vertex_count(), 0);
  for (uint32_t x : e.map) image[x] = 1;
  std::vector<uint32_t> keep;
  keep.reserve(g0.vertex_count() - ell);
  for (uint32_t u = 0; u < g0.vertex_count(); ++u) {
    if (!image[u]) keep.push_back(u);
  }
  std::vector<char> in_tv(t, 0);
  for (uint32_t x : tv) in_tv[x] = 1;
  std::vector<uint32_t> rest;
  rest.reserve(t - ell);
  for (uint32_t x = 0; x < t; ++x) {
    if (!in_tv[x]) rest.push_back(x);
  }

  std::vector<std::vector<uint32_t>> branches(t);
  for (uint32_t j = 0; j < ell; ++j) branches[tv[j]] = {e.map[j]};

  if (!rest.empty()) {
    const Graph child_host = g0.induced(keep);
    const Graph child_pattern = h.induced(rest);
    child_check(child_host, child_pattern);
    const MinorModel child = recurse(child_host, child_pattern);
    for (size_t j = 0; j < rest.size(); ++j) {
      std::vector<uint32_t> lifted;
      lifted.reserve(child.branch_sets[j].size());
      for (uint32_t x : child.branch_sets[j]) lifted.push_back(keep[x]);
      branches[rest[j]] = std::move(lifted);
    }
  }
  MinorModel out{h, g0, std::move(branches)};
  ensure(validate_model(out).ok, "model survives reattaching the tree component");
  return out;
}

// Dense-witness fallback shared by the recursive drivers once every pattern
// component contains a cycle: request a witness of size k, subsume cliques,
// otherwise embed the pattern as a (<=1)-subdivision of its per-component
// tree-plus-edge subgraph.
MinorModel cyclic_fallback(const Graph& g0, const Graph& h, uint32_t k,
                           std::vector<std::string>& steps) {
  const uint32_t t = h.vertex_count();
  const long long q = static_cast<long long>(h.edge_count());
  ensure(avg_or_zero(g0) >= Rational(4LL * k), "trimmed average covers the dense-witness request");
  const DenseMinorOutcome out = function_minor(g0, k);
  check_outcome_invariants(out);
  note_outcome(steps, out);

  if (out.kind == DenseMinorKind::Clique) {
    ensure(out.k >= t, "clique outcome is at least the pattern order");
    steps.push_back("clique outcome subsumes the pattern");
    return lift_through(subsume_into_complete(h, out.witness), out.trace, g0);
  }

  ensure(2 * static_cast<int64_t>(out.delta) - static_cast<int64_t>(out.n) >= q - 2,
         "witness degree surplus covers the subdivision embedding");
  const Graph hprime = spanning_tree_plus_edge_union(h);
  const VertexEmbedding e = embed_le1_subdivision_degen(out.witness, h, hprime);
  return lift_through(model_from_embedding(e), out.trace, g0);
}

MinorModel linear_core(const Graph& g, const Graph& h, const MaderConstants& cs, uint64_t seed,
                       std::vector<std::string>& steps);

// Recursive core behind find_minor_new: threshold i + 6.929*q.
MinorModel new_core(const Graph& g, const Graph& h, std::vector<std::string>& steps) {
  const uint32_t t = h.vertex_count();
  if (t == 0) return MinorModel{h, g, {}};
  const long long q = static_cast<long long>(h.edge_count());
  const Rational tau = Rational(isolated_count(h)) + kTreeCoeff * Rational(q);
  ensure(avg_or_zero(g) >= tau, "recursive call keeps the average-degree floor");

  const ReducedGraph red = minor_minimal_avg_degree(g, tau);
  const Graph& g0 = red.graph;
  steps.push_back("trim at the threshold: " + describe(g0));

  const auto shrinkage = [&](const Graph& ch, const Graph& cp) {
    ensure(static_cast<uint64_t>(ch.vertex_count()) + cp.vertex_count() <
               static_cast<uint64_t>(g.vertex_count()) + t,
           "recursion shrinks the instance");
  };

  MinorModel m0;
  if (const auto v = lowest_isolated(h)) {
    m0 = place_isolated(g0, h, *v, steps, [&](const Graph& ch, const Graph& cp) {
      shrinkage(ch, cp);
      return new_core(ch, cp, steps);
    });
  } else if (const auto tv = first_tree_component(h)) {
    const long long ell = static_cast<long long>(tv->size());
    m0 = place_tree(
        g0, h, *tv, steps,
        [&](const Graph& ch, const Graph& cp) {
          shrinkage(ch, cp);
          ensure(avg_or_zero(ch) >= kTreeCoeff * Rational(q - ell + 1),
                 "pruned host keeps the child threshold");
        },
        [&](const Graph& ch, const Graph& cp) { return new_core(ch, cp, steps); });
  } else {
    ensure(q >= t && q >= 3, "cyclic components carry at least as many edges as vertices");
    const long long k = ((Rational(q) - 2) / kSigma).ceil_ll() + 1;
    m0 = cyclic_fallback(g0, h, static_cast<uint32_t>(k), steps);
  }
  return lift_through(m0, red.trace, g);
}

// Recursive core behind find_minor_pmain: threshold t + 6.291*q.
MinorModel pmain_core(const Graph& g, const Graph& h, uint64_t seed,
                      std::vector<std::string>& steps) {
  const uint32_t t = h.vertex_count();
  if (t == 0) return MinorModel{h, g, {}};
  const long long q = static_cast<long long>(h.edge_count());
  const Rational tau = Rational(static_cast<long long>(t)) + kPMainCoeff * Rational(q);
  ensure(avg_or_zero(g) >= tau, "recursive call keeps the average-degree floor");

  const ReducedGraph red = minor_minimal_avg_degree(g, tau);
  const Graph& g0 = red.graph;
  steps.push_back("trim at the threshold: " + describe(g0));

  const auto shrinkage = [&](const Graph& ch, const Graph& cp) {
    ensure(static_cast<uint64_t>(ch.vertex_count()) + cp.vertex_count() <
               static_cast<uint64_t>(g.vertex_count()) + t,
           "recursion shrinks the instance");
  };

  MinorModel m0;
  if (const auto v = lowest_isolated(h)) {
    m0 = place_isolated(g0, h, *v, steps, [&](const Graph& ch, const Graph& cp) {
      shrinkage(ch, cp);
      return pmain_core(ch, cp, seed, steps);
    });
  } else if (const auto tv = first_tree_component(h)) {
    const long long ell = static_cast<long long>(tv->size());
    m0 = place_tree(
        g0, h, *tv, steps,
        [&](const Graph& ch, const Graph& cp) {
          shrinkage(ch, cp);
          ensure(avg_or_zero(ch) >=
                     Rational(static_cast<long long>(t) - ell) +
                         kPMainCoeff * Rational(q - ell + 1),
                 "pruned host keeps the child threshold");
        },
        [&](const Graph& ch, const Graph& cp) { return pmain_core(ch, cp, seed, steps); });
  } else if (Rational(3807, 1000) * Rational(q) >=
             Rational(59687, 10000) * Rational(static_cast<long long>(t))) {
    steps.push_back("edge-heavy pattern: delegate to the linear driver");
    const MaderConstants lin = with_bounds(Rational(3484, 1000), Rational(1426, 1000),
                                           Rational(69687, 10000), Rational(621, 250));
    m0 = linear_core(g0, h, lin, seed, steps);
  } else {
    ensure(q >= 3, "cyclic components carry a cycle");
    const Rational body =
        (Rational(static_cast<long long>(t)) + kPMainCoeff * (Rational(q) - 2)) / 4;
    const long long k = body.ceil_ll() + 1;
    m0 = cyclic_fallback(g0, h, static_cast<uint32_t>(k), steps);
  }
  return lift_through(m0, red.trace, g);
}

MinorModel linear_core(const Graph& g, const Graph& h, const MaderConstants& cs, uint64_t seed,
                       std::vector<std::string>& steps) {
  const uint32_t t = h.vertex_count();
  ensure(t >= 1, "linear core needs a nonempty pattern");
  const long long q = static_cast<long long>(h.edge_count());
  const Rational tau =
      cs.alpha * Rational(static_cast<long long>(t)) + cs.beta * Rational(q);
  ensure(avg_or_zero(g) >= tau, "linear core entry keeps the threshold");

  const long long k = (tau / 4).floor_ll();
  ensure(k >= static_cast<long long>(t), "witness request covers the pattern order");
  const DenseMinorOutcome out = dense_or_clique(g, static_cast<uint32_t>(k), cs.c1, cs.c2);
  check_outcome_invariants(out);
  note_outcome(steps, out);

  if (out.kind == DenseMinorKind::Clique) {
    steps.push_back("clique outcome subsumes the pattern");
    return lift_through(subsume_into_complete(h, out.witness), out.trace, g);
  }

  const auto idx = static_cast<size_t>(out.kind);
  ensure(idx < 4, "non-clique outcomes carry witness bounds");
  const Rational a = cs.a[idx];
  const Rational b = cs.b[idx];
  ensure((b * 2 - a) * Rational(k) + 3 >=
             Rational(static_cast<long long>(t)) + (Rational(1) - b / a) * Rational(q),
         "witness guarantee dominates the insertion demand");

  const long long n = static_cast<long long>(out.n);
  const long long delta = static_cast<long long>(out.delta);
  ensure(n >= 2, "dense witness has at least two vertices");
  ensure(Rational(2 * delta + 4) + Rational(delta * q, n - 1) >=
             Rational(n + static_cast<long long>(t) + q),
         "witness degree surplus admits the randomized embedding");
  const VertexEmbedding e = embed_le1_subdivision_random(out.witness, h, seed);
  return lift_through(model_from_embedding(e), out.trace, g);
}

DriverReport make_report(std::string driver, const Graph& g, Rational threshold) {
  DriverReport r;
  r.driver = std::move(driver);
  r.threshold = std::move(threshold);
  r.average_degree = avg_or_zero(g);
  return r;
}

void attach_model(DriverReport& r, MinorModel m) {
  ensure(validate_model(m).ok, "driver result validates");
  r.model = std::move(m);
  r.outcome = DriverOutcome::Model;
  r.failure.clear();
}

// Empty patterns succeed vacuously under every driver.
bool close_trivial(DriverReport& r, const Graph& g, const Graph& h) {
  if (h.vertex_count() != 0) return false;
  r.hypothesis_met = true;
  attach_model(r, MinorModel{h, g, {}});
  return true;
}

bool gate_hypothesis(DriverReport& r) {
  if (r.average_degree < r.threshold) {
    r.outcome = DriverOutcome::HypothesisNotMet;
    r.failure = "host average degree below the driver threshold";
    return false;
  }
  r.hypothesis_met = true;
  return true;
}

}  // namespace

DriverReport find_minor_2degen(const Graph& g, const Graph& h) {
  const auto order = degeneracy_order_2(h);
  if (!order.has_value()) {
    throw std::invalid_argument("find_minor_2degen: pattern is not 2-degenerate");
  }
  const long long t = h.vertex_count();
  DriverReport r = make_report("2degen", g, kTreeCoeff * Rational(t));
  if (close_trivial(r, g, h)) return r;
  if (!gate_hypothesis(r)) return r;
  attach_model(r, degen_core(g, h, *order, r.steps));
  return r;
}

DriverReport find_minor_basic(const Graph& g, const Graph& h) {
  const uint32_t t = h.vertex_count();
  const auto edge_order = h.edges();
  const long long q = static_cast<long long>(edge_order.size());
  DriverReport r = make_report("basic", g, kTreeCoeff * Rational(t + q));
  if (close_trivial(r, g, h)) return r;
  if (!gate_hypothesis(r)) return r;

  Graph subdivided(t + static_cast<uint32_t>(q));
  for (size_t j = 0; j < edge_order.size(); ++j) {
    const uint32_t mid = t + static_cast<uint32_t>(j);
    subdivided.add_edge(edge_order[j].first, mid);
    subdivided.add_edge(mid, edge_order[j].second);
  }
  if (q > 0) {
    std::ostringstream os;
    os << "subdivide every pattern edge: " << t + q << " vertices";
    r.steps.push_back(os.str());
  }
  const auto order = degeneracy_order_2(subdivided);
  ensure(order.has_value(), "a 1-subdivision is 2-degenerate");

  MinorModel wide = degen_core(g, subdivided, *order, r.steps);
  auto branches = std::move(wide.branch_sets);
  for (size_t j = 0; j < edge_order.size(); ++j) {
    auto& dst = branches[edge_order[j].first];
    const auto& mid = branches[t + j];
    dst.insert(dst.end(), mid.begin(), mid.end());
  }
  branches.resize(t);
  for (auto& bset : branches) std::sort(bset.begin(), bset.end());
  if (q > 0) r.steps.push_back("absorb each division branch into its lower endpoint");
  attach_model(r, MinorModel{h, g, std::move(branches)});
  return r;
}

DriverReport find_minor_new(const Graph& g, const Graph& h) {
  const long long q = static_cast<long long>(h.edge_count());
  DriverReport r =
      make_report("new", g, Rational(isolated_count(h)) + kTreeCoeff * Rational(q));
  if (close_trivial(r, g, h)) return r;
  if (!gate_hypothesis(r)) return r;
  attach_model(r, new_core(g, h, r.steps));
  return r;
}

DriverReport find_minor_linear(const Graph& g, const Graph& h, const MaderConstants& constants,
                               uint64_t seed) {
  const MaderConstants cs =
      with_bounds(constants.c1, constants.c2, constants.alpha, constants.beta);
  const long long t = h.vertex_count();
  const long long q = static_cast<long long>(h.edge_count());
  DriverReport r = make_report("linear", g, cs.alpha * Rational(t) + cs.beta * Rational(q));
  if (close_trivial(r, g, h)) return r;
  if (!gate_hypothesis(r)) return r;
  try {
    attach_model(r, linear_core(g, h, cs, seed, r.steps));
  } catch (const RetryExhausted& e) {
    r.outcome = DriverOutcome::RandomizedFailure;
    r.failure = e.what();
  }
  return r;
}

DriverReport find_minor_pmain(const Graph& g, const Graph& h, uint64_t seed) {
  const long long t = h.vertex_count();
  const long long q = static_cast<long long>(h.edge_count());
  DriverReport r = make_report("pmain", g, Rational(t) + kPMainCoeff * Rational(q));
  if (close_trivial(r, g, h)) return r;
  if (!gate_hypothesis(r)) return r;
  try {
    attach_model(r, pmain_core(g, h, seed, r.steps));
  } catch (const RetryExhausted& e) {
    r.outcome = DriverOutcome::RandomizedFailure;
    r.failure = e.what();
  }
  return r;
}

DriverReport find_minor_general(const Graph& g, const Graph& h, uint64_t seed) {
  if (h.vertex_count() == 0 || h.average_degree() <= Rational(1)) {
    throw std::invalid_argument("find_minor_general: pattern average degree must exceed 1");
  }
  const uint32_t t = h.vertex_count();
  const double d = h.average_degree().to_double();
  const HeartParams params =
      make_heart_params(Rational(6518, 10000), Rational(1, 100000), d);

  const double tau = 3.895 * std::sqrt(std::log(d)) * static_cast<double>(t);
  DriverReport r = make_report("general", g, Rational::from_double(tau));
  {
    std::ostringstream os;
    os << "threshold evaluated in floating point: 3.895*sqrt(ln " << d << ")*" << t << " = "
       << tau;
    r.steps.push_back(os.str());
  }
  if (!gate_hypothesis(r)) return r;

  const long long k =
      (Rational(100001, 100000) * Rational(static_cast<long long>(params.ell)) *
       Rational(static_cast<long long>(t)))
          .ceil_ll();
  {
    std::ostringstream os;
    os << "derived parameters: b=" << params.b << " ell=" << params.ell << " witness k=" << k;
    r.steps.push_back(os.str());
  }
  if (r.average_degree < Rational(4 * k)) {
    r.outcome = DriverOutcome::HypothesisNotMet;
    std::ostringstream os;
    os << "host average degree meets the stated threshold but not the witness request 4k = "
       << 4 * k << "; the guarantee only bites for larger patterns";
    r.failure = os.str();
    return r;
  }

  const DenseMinorOutcome out = ratio_minor(g, static_cast<uint32_t>(k));
  check_outcome_invariants(out);
  note_outcome(r.steps, out);

  if (out.kind == DenseMinorKind::Clique) {
    ensure(out.k >= t, "clique outcome is at least the pattern order");
    r.steps.push_back("clique outcome subsumes the pattern");
    attach_model(r, lift_through(subsume_into_complete(h, out.witness), out.trace, g));
    return r;
  }

  if (Rational(static_cast<long long>(out.delta)) <
      params.lambda * Rational(static_cast<long long>(out.n))) {
    r.outcome = DriverOutcome::RandomizedFailure;
    r.failure = "witness minimum degree falls below lambda * n; the dense embedder cannot start";
    return r;
  }

  const HeartResult hr = heart_embed(out.witness, h, params, seed, false);
  r.steps.insert(r.steps.end(), hr.log.begin(), hr.log.end());
  if (hr.model.has_value()) {
    attach_model(r, lift_through(*hr.model, out.trace, g));
    return r;
  }
  ensure(!hr.violated.empty(), "failed dense embedding names a violated property");
  r.outcome = DriverOutcome::RandomizedFailure;
  std::ostringstream os;
  os << "properties violated:";
  for (const auto& p : hr.violated) os << ' ' << p;
  r.failure = os.str();
  return r;
}

DriverReport drive_heart(const Graph& g, const Graph& h, const HeartParams& params, uint64_t seed,
                         bool enforce_assumptions) {
  DriverReport r = make_report(
      "heart", g, params.lambda * Rational(static_cast<long long>(g.vertex_count())));
  r.hypothesis_met = true;
  const HeartResult hr = heart_embed(g, h, params, seed, enforce_assumptions);
  r.steps = hr.log;
  if (hr.model.has_value()) {
    attach_model(r, *hr.model);
    return r;
  }
  ensure(!hr.violated.empty(), "failed dense embedding names a violated property");
  r.outcome = DriverOutcome::RandomizedFailure;
  std::ostringstream os;
  os << "properties violated:";
  for (const auto& p : hr.violated) os << ' ' << p;
  r.failure = os.str();
  return r;
}

}  // namespace minorforge
