#include "minorforge/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/check.hpp"
#include "minorforge/rational.hpp"
#include "minorforge/rng.hpp"

namespace minorforge {

namespace {

std::string edge_str(uint32_t u, uint32_t v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// Lowest unused vertex in the sorted intersection of two neighbor lists.
std::optional<uint32_t> lowest_unused_common(const std::vector<uint32_t>& a,
                                             const std::vector<uint32_t>& b,
                                             const std::vector<char>& used) {
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      if (!used[a[i]]) return a[i];
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

std::optional<uint32_t> lowest_unused(const std::vector<uint32_t>& candidates,
                                      const std::vector<char>& used) {
  for (uint32_t v : candidates) {
    if (!used[v]) return v;
  }
  return std::nullopt;
}

}  // namespace

EmbeddingCheck check_embedding(const VertexEmbedding& e) {
  const uint32_t t = e.pattern.vertex_count();
  const uint32_t n = e.host.vertex_count();
  if (e.map.size() != t) {
    return {false, "shape: " + std::to_string(e.map.size()) + " mapped vertices for " +
                       std::to_string(t) + " pattern vertices"};
  }
  for (uint32_t i = 0; i < t; ++i) {
    if (e.map[i] >= n) {
      return {false, "vertex-range: pattern vertex " + std::to_string(i) + " maps to " +
                         std::to_string(e.map[i]) + " but host has " + std::to_string(n) +
                         " vertices"};
    }
  }
  std::vector<int64_t> owner(n, -1);
  for (uint32_t i = 0; i < t; ++i) {
    if (owner[e.map[i]] >= 0) {
      return {false, "injectivity: pattern vertices " + std::to_string(owner[e.map[i]]) +
                         " and " + std::to_string(i) + " both map to host vertex " +
                         std::to_string(e.map[i])};
    }
    owner[e.map[i]] = i;
  }
  for (const auto& [edge, x] : e.division) {
    const auto [u, v] = edge;
    if (u >= t || v >= t || !e.pattern.has_edge(u, v)) {
      return {false, "division: " + edge_str(u, v) + " is not a pattern edge"};
    }
    if (x >= n) {
      return {false, "vertex-range: division vertex for " + edge_str(u, v) + " is out of range"};
    }
    if (owner[x] >= 0) {
      return {false, "division: host vertex " + std::to_string(x) + " used twice"};
    }
    owner[x] = t;  // reserve; any later reuse is a violation
  }
  for (const auto& [u, v] : e.pattern.edges()) {
    const auto it = e.division.find({u, v});
    if (it != e.division.end()) {
      if (!e.host.has_edge(e.map[u], it->second) || !e.host.has_edge(it->second, e.map[v])) {
        return {false, "realization: pattern edge " + edge_str(u, v) +
                           " is not connected through its division vertex"};
      }
    } else if (!e.host.has_edge(e.map[u], e.map[v])) {
      return {false, "realization: pattern edge " + edge_str(u, v) + " has no host edge"};
    }
  }
  return {};
}

MinorModel model_from_embedding(const VertexEmbedding& e) {
  MinorModel model;
  model.pattern = e.pattern;
  model.host = e.host;
  model.branch_sets.resize(e.pattern.vertex_count());
  for (uint32_t i = 0; i < e.pattern.vertex_count(); ++i) {
    model.branch_sets[i] = {e.map[i]};
  }
  for (const auto& [edge, x] : e.division) {
    auto& branch = model.branch_sets[edge.first];
    branch.insert(std::lower_bound(branch.begin(), branch.end(), x), x);
  }
  return model;
}

VertexEmbedding embed_tree(const Graph& g, const Graph& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("embed_tree: pattern is not a tree");
  if (g.vertex_count() == 0) throw std::invalid_argument("embed_tree: empty host");
  const uint32_t l = tree.vertex_count();
  if (g.min_degree() + 1 < l) {
    throw std::invalid_argument("embed_tree: host minimum degree below pattern size minus 1");
  }

  // BFS order from vertex 0 with parents.
  std::vector<uint32_t> order;
  order.reserve(l);
  std::vector<uint32_t> parent(l, 0);
  std::vector<char> seen(l, 0);
  order.push_back(0);
  seen[0] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    for (uint32_t w : tree.neighbors(order[head])) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = order[head];
      order.push_back(w);
    }
  }
  ensure(order.size() == l, "tree BFS reaches every vertex");

  VertexEmbedding out{tree, g, std::vector<uint32_t>(l, 0), {}};
  std::vector<char> used(g.vertex_count(), 0);
  used[0] = 1;
  for (size_t i = 1; i < order.size(); ++i) {
    const uint32_t w = order[i];
    const auto pick = lowest_unused(g.neighbors(out.map[parent[w]]), used);
    ensure(pick.has_value(), "tree placement finds an unused neighbor");
    out.map[w] = *pick;
    used[*pick] = 1;
  }
  return out;
}

VertexEmbedding embed_2degenerate(const Graph& g, const Graph& h, const EliminationOrder& order) {
  if (g.vertex_count() == 0) throw std::invalid_argument("embed_2degenerate: empty host");
  if (!is_valid_elimination_order_2(h, order)) {
    throw std::invalid_argument("embed_2degenerate: not a valid 2-elimination order");
  }
  const int64_t t = h.vertex_count();
  const int64_t n = g.vertex_count();
  const int64_t delta = g.min_degree();
  if (2 * delta - n < t - 2) {
    throw std::invalid_argument("embed_2degenerate: host fails 2*delta - n >= t - 2");
  }

  VertexEmbedding out{h, g, std::vector<uint32_t>(h.vertex_count(), 0), {}};
  std::vector<char> placed(h.vertex_count(), 0);
  std::vector<char> used(g.vertex_count(), 0);
  for (int64_t i = t - 1; i >= 0; --i) {
    const uint32_t v = order[static_cast<size_t>(i)];
    std::vector<uint32_t> anchors;
    for (uint32_t u : h.neighbors(v)) {
      if (placed[u]) anchors.push_back(out.map[u]);
    }
    ensure(anchors.size() <= 2, "elimination order leaves at most two placed neighbors");

    std::optional<uint32_t> pick;
    if (anchors.empty()) {
      for (uint32_t w = 0; w < g.vertex_count(); ++w) {
        if (!used[w]) {
          pick = w;
          break;
        }
      }
    } else if (anchors.size() == 1) {
      pick = lowest_unused(g.neighbors(anchors[0]), used);
    } else {
      pick = lowest_unused_common(g.neighbors(anchors[0]), g.neighbors(anchors[1]), used);
    }
    ensure(pick.has_value(), "degenerate insertion finds an unused host vertex");
    out.map[v] = *pick;
    used[*pick] = 1;
    placed[v] = 1;
  }
  return out;
}

VertexEmbedding embed_le1_subdivision_degen(const Graph& g, const Graph& h,
                                            const Graph& h_prime) {
  const uint32_t t = h.vertex_count();
  if (h_prime.vertex_count() != t) {
    throw std::invalid_argument("embed_le1_subdivision_degen: subgraph must span the pattern");
  }
  for (const auto& [u, v] : h_prime.edges()) {
    if (!h.has_edge(u, v)) {
      throw std::invalid_argument(
          "embed_le1_subdivision_degen: h_prime is not a subgraph of the pattern");
    }
  }
  if (!degeneracy_order_2(h_prime)) {
    throw std::invalid_argument(
        "embed_le1_subdivision_degen: spanning subgraph is not 2-degenerate");
  }

  std::vector<std::pair<uint32_t, uint32_t>> missing;
  for (const auto& [u, v] : h.edges()) {
    if (!h_prime.has_edge(u, v)) missing.emplace_back(u, v);
  }
  Graph aux(t + static_cast<uint32_t>(missing.size()));
  for (const auto& [u, v] : h_prime.edges()) aux.add_edge(u, v);
  for (size_t j = 0; j < missing.size(); ++j) {
    aux.add_edge(missing[j].first, t + static_cast<uint32_t>(j));
    aux.add_edge(t + static_cast<uint32_t>(j), missing[j].second);
  }
  const auto aux_order = degeneracy_order_2(aux);
  ensure(aux_order.has_value(), "midpoint-augmented pattern stays 2-degenerate");

  if (g.vertex_count() == 0) {
    throw std::invalid_argument("embed_le1_subdivision_degen: empty host");
  }
  const int64_t n = g.vertex_count();
  const int64_t delta = g.min_degree();
  if (2 * delta - n < static_cast<int64_t>(aux.vertex_count()) - 2) {
    throw std::invalid_argument(
        "embed_le1_subdivision_degen: host fails 2*delta - n >= (q - q') + t - 2");
  }

  const VertexEmbedding wide = embed_2degenerate(g, aux, *aux_order);
  VertexEmbedding out{h, g, std::vector<uint32_t>(wide.map.begin(), wide.map.begin() + t), {}};
  for (size_t j = 0; j < missing.size(); ++j) {
    out.division[missing[j]] = wide.map[t + j];
  }
  return out;
}

SpanningOverlap random_spanning_overlap(const Graph& g, const Graph& h, uint64_t seed) {
  const uint32_t t = h.vertex_count();
  const uint32_t n = g.vertex_count();
  if (n < t) throw std::invalid_argument("random_spanning_overlap: host smaller than pattern");

  SplitMix64 rng(seed);
  std::vector<uint32_t> map = rng.sample_prefix(n, t);
  Graph realized(t);
  for (const auto& [u, v] : h.edges()) {
    if (g.has_edge(map[u], map[v])) realized.add_edge(u, v);
  }
  SpanningOverlap out;
  out.embedding = {realized, g, std::move(map), {}};
  out.realized = out.embedding.pattern;
  return out;
}

VertexEmbedding embed_le1_subdivision_random(const Graph& g, const Graph& h, uint64_t seed,
                                             uint64_t max_attempts) {
  const uint32_t t = h.vertex_count();
  const int64_t q = static_cast<int64_t>(h.edge_count());
  const uint32_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("embed_le1_subdivision_random: empty host");
  if (n < t) throw std::invalid_argument("embed_le1_subdivision_random: host smaller than pattern");

  const int64_t delta = g.min_degree();
  Rational lhs(2 * delta + 4);
  if (q > 0) lhs = lhs + Rational(delta * q, static_cast<int64_t>(n) - 1);
  if (lhs < Rational(static_cast<int64_t>(n) + t + q)) {
    throw std::invalid_argument(
        "embed_le1_subdivision_random: host fails 2*delta + 4 + delta*q/(n-1) >= n + t + q");
  }
  if (t == 0) return {h, g, {}, {}};

  const int64_t need = q == 0 ? 0 : Rational(delta * q, static_cast<int64_t>(n) - 1).ceil_ll();
  const uint64_t attempts = max_attempts ? max_attempts : 64 * ((n + t - 1) / t);

  SplitMix64 rng(seed);
  for (uint64_t attempt = 0; attempt < attempts; ++attempt) {
    SpanningOverlap overlap = random_spanning_overlap(g, h, rng.next());
    if (static_cast<int64_t>(overlap.realized.edge_count()) < need) continue;

    VertexEmbedding out{h, g, overlap.embedding.map, {}};
    std::vector<char> used(n, 0);
    for (uint32_t x : out.map) used[x] = 1;
    for (const auto& [u, v] : h.edges()) {
      if (overlap.realized.has_edge(u, v)) continue;
      const auto pick =
          lowest_unused_common(g.neighbors(out.map[u]), g.neighbors(out.map[v]), used);
      ensure(pick.has_value(), "subdivision routing finds an unused common neighbor");
      out.division[{u, v}] = *pick;
      used[*pick] = 1;
    }
    return out;
  }
  throw RetryExhausted("embed_le1_subdivision_random: no draw reached the overlap threshold");
}

}  // namespace minorforge
