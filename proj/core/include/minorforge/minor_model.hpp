#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Witness that `pattern` is a minor of `host`: one branch set of host
// vertices per pattern vertex. Valid when the sets are nonempty, pairwise
// disjoint, each induces a connected subgraph of the host, and every pattern
// edge has at least one host edge between the two branch sets.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::vector<std::vector<uint32_t>> branch_sets;
};

struct ModelCheck {
  bool ok = false;
  std::string violation;  // empty when ok; otherwise names the first failure
};

// Never throws; malformed input is just an invalid model. Checks run in a
// fixed order (shape, vertex range, disjointness, connectivity, edge
// realization) so the reported violation is deterministic.
ModelCheck validate_model(const MinorModel& m);

// Maps a model found in a reduced graph back to the graph the reduction
// started from. `origins` comes from replaying the reduction trace: entry i
// lists the original vertices that were merged into reduced vertex i. The
// lifted branch set is the union of origins over the branch.
MinorModel lift_model(const MinorModel& reduced_model,
                      const std::vector<std::vector<uint32_t>>& origins,
                      const Graph& original_host);

// Model of `pattern` inside a complete-graph witness on k >= |V(pattern)|
// vertices: vertex i gets branch {i}.
MinorModel subsume_into_complete(const Graph& pattern, const Graph& complete_host);

}  // namespace minorforge
