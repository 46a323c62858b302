#pragma once

#include <cstdint>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

enum class StepKind : uint8_t { ContractEdge, DeleteEdge, DeleteVertex };

// One minor operation in current-graph coordinates (ids at the time the step
// ran). Vertex deletions record the incident edges so replay can verify it is
// walking the same graph.
struct TraceStep {
  StepKind kind;
  uint32_t u = 0;
  uint32_t v = 0;
  std::vector<uint32_t> incident;  // DeleteVertex only: neighbors at deletion time
};

struct ReductionTrace {
  uint32_t original_n = 0;
  std::vector<TraceStep> steps;
};

struct ReplayResult {
  Graph graph;
  // origins[i] = sorted original-graph vertices merged into current vertex i.
  // Deleted vertices belong to no set. The sets partition a subset of the
  // original vertex set and each induces a connected subgraph there.
  std::vector<std::vector<uint32_t>> origins;
};

// Re-applies the trace to `original`, validating every step. Throws
// std::invalid_argument on any mismatch (wrong vertex count, missing edge,
// incident-list disagreement).
ReplayResult replay(const ReductionTrace& trace, const Graph& original);

// Applies minor operations to a working graph while recording the trace.
class Surgeon {
 public:
  explicit Surgeon(Graph g);

  const Graph& graph() const { return g_; }
  const ReductionTrace& trace() const { return trace_; }

  void contract_edge(uint32_t u, uint32_t v);
  void delete_edge(uint32_t u, uint32_t v);
  void delete_vertex(uint32_t v);

  // Deletes all of `doomed` (any order given; applied descending so earlier
  // deletions do not shift later ids).
  void delete_vertices(std::vector<uint32_t> doomed);

  // Deletes the complement of `keep` (sorted ascending).
  void keep_only(const std::vector<uint32_t>& keep);

 private:
  Graph g_;
  ReductionTrace trace_;
};

}  // namespace minorforge
