#include "minorforge/minor_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorforge {

namespace {

std::string pair_text(uint32_t a, uint32_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

ModelCheck validate_model(const MinorModel& m) {
  uint32_t t = m.pattern.vertex_count();
  uint32_t n = m.host.vertex_count();

  if (m.branch_sets.size() != t)
    return {false, "shape: " + std::to_string(m.branch_sets.size()) + " branch sets for " +
                       std::to_string(t) + " pattern vertices"};

  for (uint32_t i = 0; i < t; ++i) {
    if (m.branch_sets[i].empty())
      return {false, "empty: branch " + std::to_string(i) + " has no vertices"};
    for (uint32_t v : m.branch_sets[i])
      if (v >= n)
        return {false, "vertex-range: branch " + std::to_string(i) + " contains " +
                           std::to_string(v) + " but host has " + std::to_string(n) + " vertices"};
  }

  std::vector<uint32_t> owner(n, UINT32_MAX);
  for (uint32_t i = 0; i < t; ++i)
    for (uint32_t v : m.branch_sets[i]) {
      if (owner[v] != UINT32_MAX) {
        if (owner[v] == i)
          return {false, "disjointness: branch " + std::to_string(i) + " repeats vertex " +
                             std::to_string(v)};
        return {false, "disjointness: vertex " + std::to_string(v) + " lies in branches " +
                           std::to_string(owner[v]) + " and " + std::to_string(i)};
      }
      owner[v] = i;
    }

  for (uint32_t i = 0; i < t; ++i) {
    const auto& branch = m.branch_sets[i];
    // Union-find over the branch.
    std::vector<uint32_t> parent(branch.size());
    for (uint32_t j = 0; j < branch.size(); ++j) parent[j] = j;
    auto find = [&](uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<uint32_t> local(n, UINT32_MAX);
    for (uint32_t j = 0; j < branch.size(); ++j) local[branch[j]] = j;
    for (uint32_t j = 0; j < branch.size(); ++j)
      for (uint32_t w : m.host.neighbors(branch[j]))
        if (local[w] != UINT32_MAX) parent[find(j)] = find(local[w]);
    uint32_t root = find(0);
    for (uint32_t j = 1; j < branch.size(); ++j)
      if (find(j) != root)
        return {false, "connectivity: branch " + std::to_string(i) +
                           " does not induce a connected subgraph"};
  }

  for (auto [a, b] : m.pattern.edges()) {
    bool realized = false;
    for (uint32_t v : m.branch_sets[a]) {
      for (uint32_t w : m.host.neighbors(v))
        if (owner[w] == b) {
          realized = true;
          break;
        }
      if (realized) break;
    }
    if (!realized)
      return {false, "edge-realization: pattern edge " + pair_text(a, b) +
                         " has no host edge between its branches"};
  }

  return {true, ""};
}

MinorModel lift_model(const MinorModel& reduced_model,
                      const std::vector<std::vector<uint32_t>>& origins,
                      const Graph& original_host) {
  if (origins.size() != reduced_model.host.vertex_count())
    throw std::invalid_argument("lift_model: origins do not match reduced host");
  MinorModel lifted{reduced_model.pattern, original_host, {}};
  lifted.branch_sets.reserve(reduced_model.branch_sets.size());
  for (const auto& branch : reduced_model.branch_sets) {
    std::vector<uint32_t> big;
    for (uint32_t v : branch) {
      if (v >= origins.size()) throw std::invalid_argument("lift_model: branch vertex out of range");
      big.insert(big.end(), origins[v].begin(), origins[v].end());
    }
    std::sort(big.begin(), big.end());
    lifted.branch_sets.push_back(std::move(big));
  }
  return lifted;
}

MinorModel subsume_into_complete(const Graph& pattern, const Graph& complete_host) {
  if (!complete_host.is_complete())
    throw std::invalid_argument("subsume: host is not complete");
  if (complete_host.vertex_count() < pattern.vertex_count())
    throw std::invalid_argument("subsume: host smaller than pattern");
  MinorModel m{pattern, complete_host, {}};
  for (uint32_t i = 0; i < pattern.vertex_count(); ++i) m.branch_sets.push_back({i});
  return m;
}

}  // namespace minorforge
