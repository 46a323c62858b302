#include "minorforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace minorforge {

void Graph::check_vertex(uint32_t v) const {
  if (v >= adj_.size()) throw std::invalid_argument("graph: vertex out of range");
}

bool Graph::add_edge(uint32_t u, uint32_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: self-loop");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
  return true;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

uint32_t Graph::degree(uint32_t v) const {
  check_vertex(v);
  return static_cast<uint32_t>(adj_[v].size());
}

const std::vector<uint32_t>& Graph::neighbors(uint32_t v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(m_);
  for (uint32_t u = 0; u < adj_.size(); ++u)
    for (uint32_t v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Rational Graph::average_degree() const {
  if (adj_.empty()) throw std::invalid_argument("graph: average degree of empty graph");
  return Rational(static_cast<long long>(2 * m_), static_cast<long long>(adj_.size()));
}

uint32_t Graph::min_degree() const {
  if (adj_.empty()) throw std::invalid_argument("graph: min degree of empty graph");
  size_t best = adj_[0].size();
  for (const auto& a : adj_) best = std::min(best, a.size());
  return static_cast<uint32_t>(best);
}

uint32_t Graph::max_degree() const {
  if (adj_.empty()) throw std::invalid_argument("graph: max degree of empty graph");
  size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return static_cast<uint32_t>(best);
}

uint32_t Graph::triangles_on_edge(uint32_t u, uint32_t v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("graph: triangle count of non-edge");
  const auto& au = adj_[u];
  const auto& av = adj_[v];
  uint32_t count = 0;
  auto it = au.begin();
  auto jt = av.begin();
  while (it != au.end() && jt != av.end()) {
    if (*it < *jt)
      ++it;
    else if (*jt < *it)
      ++jt;
    else {
      ++count;
      ++it;
      ++jt;
    }
  }
  return count;
}

std::vector<std::vector<uint32_t>> Graph::components() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<char> seen(adj_.size(), 0);
  for (uint32_t s = 0; s < adj_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> comp;
    std::queue<uint32_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      uint32_t v = q.front();
      q.pop();
      comp.push_back(v);
      for (uint32_t w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return components().size() <= 1; }

namespace {

// Renumber every id above `removed` down by one, in place.
void shift_down(std::vector<std::vector<uint32_t>>& adj, uint32_t removed) {
  for (auto& list : adj)
    for (auto& w : list)
      if (w > removed) --w;
}

}  // namespace

void Graph::contract_edge(uint32_t u, uint32_t v) {
  if (!has_edge(u, v)) throw std::invalid_argument("graph: contracting a non-edge");
  if (u > v) std::swap(u, v);
  uint64_t merged_loss = 1 + triangles_on_edge(u, v);

  // Reroute v's other neighbors to u.
  for (uint32_t w : adj_[v]) {
    if (w == u) continue;
    auto& aw = adj_[w];
    aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
    auto it = std::lower_bound(aw.begin(), aw.end(), u);
    if (it == aw.end() || *it != u) {
      aw.insert(it, u);
      adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), w), w);
    }
  }
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  adj_.erase(adj_.begin() + v);
  shift_down(adj_, v);
  m_ -= merged_loss;
}

void Graph::delete_edge(uint32_t u, uint32_t v) {
  if (!has_edge(u, v)) throw std::invalid_argument("graph: deleting a non-edge");
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --m_;
}

void Graph::delete_vertex(uint32_t v) {
  check_vertex(v);
  m_ -= adj_[v].size();
  for (uint32_t w : adj_[v]) {
    auto& aw = adj_[w];
    aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
  }
  adj_.erase(adj_.begin() + v);
  shift_down(adj_, v);
}

Graph Graph::induced(const std::vector<uint32_t>& keep) const {
  std::vector<uint32_t> pos(adj_.size(), UINT32_MAX);
  for (uint32_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("graph: induced set must be sorted and distinct");
    pos[keep[i]] = i;
  }
  Graph out(static_cast<uint32_t>(keep.size()));
  for (uint32_t i = 0; i < keep.size(); ++i)
    for (uint32_t w : adj_[keep[i]])
      if (pos[w] != UINT32_MAX && pos[w] > i) out.add_edge(i, pos[w]);
  return out;
}

bool Graph::is_complete() const {
  uint64_t n = adj_.size();
  return m_ == n * (n - 1) / 2;
}

bool Graph::is_tree() const {
  return !adj_.empty() && m_ + 1 == adj_.size() && connected();
}

BitRows::BitRows(const Graph& g) : n_(g.vertex_count()), words_((n_ + 63) / 64) {
  data_.assign(static_cast<size_t>(n_) * words_, 0);
  for (uint32_t v = 0; v < n_; ++v) {
    uint64_t* r = data_.data() + static_cast<size_t>(v) * words_;
    for (uint32_t w : g.neighbors(v)) r[w >> 6] |= 1ULL << (w & 63);
  }
}

uint32_t BitRows::common_count(uint32_t u, uint32_t v) const {
  const uint64_t* a = row(u);
  const uint64_t* b = row(v);
  uint32_t total = 0;
  for (uint32_t i = 0; i < words_; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::optional<EliminationOrder> degeneracy_order_2(const Graph& h) {
  uint32_t n = h.vertex_count();
  std::vector<uint32_t> deg(n);
  for (uint32_t v = 0; v < n; ++v) deg[v] = h.degree(v);
  std::vector<char> gone(n, 0);
  EliminationOrder order;
  order.reserve(n);
  for (uint32_t step = 0; step < n; ++step) {
    uint32_t pick = n;
    for (uint32_t v = 0; v < n; ++v)
      if (!gone[v] && deg[v] <= 2) {
        pick = v;
        break;
      }
    if (pick == n) return std::nullopt;
    gone[pick] = 1;
    order.push_back(pick);
    for (uint32_t w : h.neighbors(pick))
      if (!gone[w]) --deg[w];
  }
  return order;
}

bool is_valid_elimination_order_2(const Graph& h, const EliminationOrder& order) {
  uint32_t n = h.vertex_count();
  if (order.size() != n) return false;
  std::vector<uint32_t> pos(n, UINT32_MAX);
  for (uint32_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != UINT32_MAX) return false;
    pos[order[i]] = i;
  }
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t later = 0;
    for (uint32_t w : h.neighbors(order[i]))
      if (pos[w] > i) ++later;
    if (later > 2) return false;
  }
  return true;
}

Graph tree_plus_edge_spanning(const Graph& component) {
  uint32_t n = component.vertex_count();
  if (n == 0 || !component.connected())
    throw std::invalid_argument("tree_plus_edge: input must be connected and nonempty");
  if (component.edge_count() < n)
    throw std::invalid_argument("tree_plus_edge: input has no cycle");

  Graph out(n);
  std::vector<char> seen(n, 0);
  std::queue<uint32_t> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    uint32_t v = q.front();
    q.pop();
    for (uint32_t w : component.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        out.add_edge(v, w);
        q.push(w);
      }
  }
  for (auto [u, v] : component.edges()) {
    if (!out.has_edge(u, v)) {
      out.add_edge(u, v);
      break;
    }
  }
  return out;
}

}  // namespace minorforge
