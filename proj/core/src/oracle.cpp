#include "minorforge/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/check.hpp"
#include "minorforge/generators.hpp"

namespace minorforge {

namespace {

constexpr uint32_t kHostCap = 64;
constexpr uint32_t kPatternCap = 32;

uint64_t bit(uint32_t v) { return uint64_t{1} << v; }

struct Component {
  uint64_t mask = 0;
  uint64_t nbr = 0;  // union of host neighborhoods of the members
};

struct Branch {
  uint64_t mask = 0;
  uint64_t nbr = 0;
  std::vector<Component> comps;
};

struct Searcher {
  const Graph& host;
  const Graph& pattern;
  uint32_t n;
  uint32_t t;
  uint64_t max_expansions;

  std::vector<uint64_t> adj;         // host adjacency masks
  std::vector<uint64_t> suffix_set;  // [v] = {v..n-1}
  std::vector<uint64_t> suffix_nbr;  // [v] = N({v..n-1})

  // Pattern relabeled by decreasing degree (id ascending on ties);
  // order[label] is the original pattern vertex.
  std::vector<uint32_t> order;
  std::vector<std::pair<uint32_t, uint32_t>> pedges;            // by label
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> pnbr; // label -> (label, edge id)

  std::vector<int> twin_class;   // -1 when the host vertex has no twin
  std::vector<int> class_floor;  // lowest label the next class member may take

  std::vector<Branch> branches;
  std::vector<char> realized;
  uint32_t unrealized = 0;
  uint32_t empty_branches = 0;
  uint64_t expansions = 0;
  bool budget_hit = false;
  std::optional<MinorModel> found;

  Searcher(const Graph& g, const Graph& h, uint64_t cap)
      : host(g), pattern(h), n(g.vertex_count()), t(h.vertex_count()),
        max_expansions(cap) {
    adj.assign(n, 0);
    for (uint32_t v = 0; v < n; ++v)
      for (uint32_t w : g.neighbors(v)) adj[v] |= bit(w);
    suffix_set.assign(n + 1, 0);
    suffix_nbr.assign(n + 1, 0);
    for (uint32_t v = n; v-- > 0;) {
      suffix_set[v] = suffix_set[v + 1] | bit(v);
      suffix_nbr[v] = suffix_nbr[v + 1] | adj[v];
    }

    order.resize(t);
    for (uint32_t i = 0; i < t; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
      if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
      return a < b;
    });
    std::vector<uint32_t> rank(t);
    for (uint32_t i = 0; i < t; ++i) rank[order[i]] = i;

    pnbr.assign(t, {});
    for (const auto& [a, b] : h.edges()) {
      const uint32_t i = rank[a], j = rank[b];
      const uint32_t e = static_cast<uint32_t>(pedges.size());
      pedges.emplace_back(std::min(i, j), std::max(i, j));
      pnbr[i].emplace_back(j, e);
      pnbr[j].emplace_back(i, e);
    }
    realized.assign(pedges.size(), 0);
    unrealized = static_cast<uint32_t>(pedges.size());

    branches.assign(t, {});
    empty_branches = t;

    build_twin_classes();
  }

  // Host vertices with identical open neighborhoods (necessarily nonadjacent)
  // or identical closed neighborhoods (necessarily adjacent) are
  // interchangeable: any transposition inside such a class is an automorphism.
  // Restricting each class to non-decreasing labels in id order keeps exactly
  // one representative per orbit.
  void build_twin_classes() {
    twin_class.assign(n, -1);
    int next = 0;
    std::map<uint64_t, std::vector<uint32_t>> by_open;
    for (uint32_t v = 0; v < n; ++v) by_open[adj[v]].push_back(v);
    for (const auto& [mask, vs] : by_open)
      if (vs.size() >= 2) {
        for (uint32_t v : vs) twin_class[v] = next;
        ++next;
      }
    std::map<uint64_t, std::vector<uint32_t>> by_closed;
    for (uint32_t v = 0; v < n; ++v)
      if (twin_class[v] < 0) by_closed[adj[v] | bit(v)].push_back(v);
    for (const auto& [mask, vs] : by_closed)
      if (vs.size() >= 2) {
        for (uint32_t v : vs) twin_class[v] = next;
        ++next;
      }
    class_floor.assign(next, 0);
  }

  bool all_connected() const {
    for (const Branch& b : branches)
      if (b.comps.size() > 1) return false;
    return true;
  }

  bool success_state() const {
    return empty_branches == 0 && unrealized == 0 && all_connected();
  }

  bool dead_end(uint32_t v) const {
    if (empty_branches > n - v) return true;

    // A branch in several pieces can only be rejoined through unassigned
    // vertices; a piece with no unassigned neighbor is stuck forever.
    const uint64_t future = suffix_set[v];
    for (const Branch& b : branches)
      if (b.comps.size() > 1)
        for (const Component& c : b.comps)
          if ((c.nbr & future) == 0) return true;

    // An unrealized pattern edge needs a host edge between the two branches;
    // every way one can still appear crosses N(B_i) or N(future) into
    // B_j or future.
    const uint64_t fnbr = suffix_nbr[v];
    for (uint32_t e = 0; e < pedges.size(); ++e) {
      if (realized[e]) continue;
      const auto& [i, j] = pedges[e];
      if (((branches[i].nbr | fnbr) & (branches[j].mask | future)) == 0) return true;
      if (((branches[j].nbr | fnbr) & (branches[i].mask | future)) == 0) return true;
    }
    return false;
  }

  void lock_model() {
    MinorModel m;
    m.pattern = pattern;
    m.host = host;
    m.branch_sets.assign(t, {});
    for (uint32_t label = 0; label < t; ++label) {
      uint64_t mask = branches[label].mask;
      std::vector<uint32_t>& set = m.branch_sets[order[label]];
      while (mask) {
        const uint32_t v = static_cast<uint32_t>(__builtin_ctzll(mask));
        set.push_back(v);
        mask &= mask - 1;
      }
    }
    ensure(validate_model(m).ok, "oracle produced an invalid model");
    found = std::move(m);
  }

  bool spend() {
    if (expansions >= max_expansions) {
      budget_hit = true;
      return false;
    }
    ++expansions;
    return true;
  }

  bool search(uint32_t v) {
    if (success_state()) {
      lock_model();
      return true;
    }
    if (v == n) return false;
    if (dead_end(v)) return false;

    const int cls = twin_class[v];
    const uint32_t first = cls >= 0 ? static_cast<uint32_t>(class_floor[cls]) : 0;
    const int saved_floor = cls >= 0 ? class_floor[cls] : 0;

    for (uint32_t label = first; label < t; ++label) {
      if (!spend()) return false;
      Branch& b = branches[label];
      const Branch saved = b;
      const uint32_t saved_unrealized = unrealized;
      std::vector<uint32_t> newly_realized;

      if (b.mask == 0) --empty_branches;
      b.mask |= bit(v);
      b.nbr |= adj[v];
      Component joined{bit(v), adj[v]};
      std::vector<Component> rest;
      for (const Component& c : saved.comps) {
        if (c.mask & adj[v]) {
          joined.mask |= c.mask;
          joined.nbr |= c.nbr;
        } else {
          rest.push_back(c);
        }
      }
      rest.push_back(joined);
      b.comps = std::move(rest);

      for (const auto& [other, e] : pnbr[label]) {
        if (!realized[e] && (adj[v] & branches[other].mask)) {
          realized[e] = 1;
          --unrealized;
          newly_realized.push_back(e);
        }
      }
      if (cls >= 0) class_floor[cls] = static_cast<int>(label);

      if (search(v + 1)) return true;

      branches[label] = saved;
      if (saved.mask == 0) ++empty_branches;
      for (uint32_t e : newly_realized) realized[e] = 0;
      unrealized = saved_unrealized;
      if (cls >= 0) class_floor[cls] = saved_floor;
      if (budget_hit) return false;
    }

    // Leave v unused. Later twins must then stay unused too.
    if (!spend()) return false;
    if (cls >= 0) class_floor[cls] = static_cast<int>(t);
    const bool ok = search(v + 1);
    if (cls >= 0) class_floor[cls] = saved_floor;
    return ok;
  }
};

}  // namespace

OracleResult has_minor_bruteforce(const Graph& g, const Graph& h,
                                  const OracleBudget& budget) {
  if (budget.max_host_vertices == 0 || budget.max_pattern_vertices == 0 ||
      budget.max_expansions == 0)
    throw std::invalid_argument("oracle: budget caps must be positive");
  if (budget.max_host_vertices > kHostCap || budget.max_pattern_vertices > kPatternCap)
    throw std::invalid_argument("oracle: budget caps exceed the supported limits (" +
                                std::to_string(kHostCap) + " host / " +
                                std::to_string(kPatternCap) + " pattern vertices)");
  if (g.vertex_count() > budget.max_host_vertices)
    throw std::invalid_argument("oracle: host has " + std::to_string(g.vertex_count()) +
                                " vertices but the budget allows " +
                                std::to_string(budget.max_host_vertices));
  if (h.vertex_count() > budget.max_pattern_vertices)
    throw std::invalid_argument("oracle: pattern has " + std::to_string(h.vertex_count()) +
                                " vertices but the budget allows " +
                                std::to_string(budget.max_pattern_vertices));

  OracleResult result;
  if (h.vertex_count() == 0) {
    MinorModel m;
    m.pattern = h;
    m.host = g;
    result.status = OracleStatus::Found;
    result.model = std::move(m);
    return result;
  }

  Searcher searcher(g, h, budget.max_expansions);
  const bool hit = searcher.search(0);
  result.expansions = searcher.expansions;
  if (hit) {
    result.status = OracleStatus::Found;
    result.model = std::move(searcher.found);
  } else if (searcher.budget_hit) {
    result.status = OracleStatus::BudgetExceeded;
  } else {
    result.status = OracleStatus::NoMinor;
  }
  return result;
}

OracleResult verify_triangle_family(uint32_t k, uint32_t n,
                                    const OracleBudget& budget) {
  if (k == 0)
    throw std::invalid_argument("verify_triangle_family: k must be positive");
  if (n == 0)
    throw std::invalid_argument("verify_triangle_family: n must be positive");
  return has_minor_bruteforce(complete_bipartite(2 * k - 1, n),
                              disjoint_triangles(k), budget);
}

}  // namespace minorforge
