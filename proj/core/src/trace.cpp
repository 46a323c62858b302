#include "minorforge/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorforge {

ReplayResult replay(const ReductionTrace& trace, const Graph& original) {
  if (original.vertex_count() != trace.original_n)
    throw std::invalid_argument("replay: vertex count does not match trace");

  ReplayResult r{original, {}};
  r.origins.resize(original.vertex_count());
  for (uint32_t v = 0; v < original.vertex_count(); ++v) r.origins[v] = {v};

  for (const TraceStep& step : trace.steps) {
    switch (step.kind) {
      case StepKind::ContractEdge: {
        uint32_t u = std::min(step.u, step.v);
        uint32_t v = std::max(step.u, step.v);
        if (!r.graph.has_edge(u, v)) throw std::invalid_argument("replay: contracting non-edge");
        auto& into = r.origins[u];
        auto& from = r.origins[v];
        into.insert(into.end(), from.begin(), from.end());
        std::sort(into.begin(), into.end());
        r.origins.erase(r.origins.begin() + v);
        r.graph.contract_edge(u, v);
        break;
      }
      case StepKind::DeleteEdge:
        if (!r.graph.has_edge(step.u, step.v))
          throw std::invalid_argument("replay: deleting non-edge");
        r.graph.delete_edge(step.u, step.v);
        break;
      case StepKind::DeleteVertex: {
        if (step.u >= r.graph.vertex_count())
          throw std::invalid_argument("replay: deleting missing vertex");
        if (r.graph.neighbors(step.u) != step.incident)
          throw std::invalid_argument("replay: incident edges disagree");
        r.origins.erase(r.origins.begin() + step.u);
        r.graph.delete_vertex(step.u);
        break;
      }
    }
  }
  return r;
}

Surgeon::Surgeon(Graph g) : g_(std::move(g)) { trace_.original_n = g_.vertex_count(); }

void Surgeon::contract_edge(uint32_t u, uint32_t v) {
  if (u > v) std::swap(u, v);
  trace_.steps.push_back({StepKind::ContractEdge, u, v, {}});
  g_.contract_edge(u, v);
}

void Surgeon::delete_edge(uint32_t u, uint32_t v) {
  if (u > v) std::swap(u, v);
  trace_.steps.push_back({StepKind::DeleteEdge, u, v, {}});
  g_.delete_edge(u, v);
}

void Surgeon::delete_vertex(uint32_t v) {
  trace_.steps.push_back({StepKind::DeleteVertex, v, 0, g_.neighbors(v)});
  g_.delete_vertex(v);
}

void Surgeon::delete_vertices(std::vector<uint32_t> doomed) {
  std::sort(doomed.begin(), doomed.end(), std::greater<>());
  for (uint32_t v : doomed) delete_vertex(v);
}

void Surgeon::keep_only(const std::vector<uint32_t>& keep) {
  std::vector<uint32_t> doomed;
  size_t j = 0;
  for (uint32_t v = 0; v < g_.vertex_count(); ++v) {
    if (j < keep.size() && keep[j] == v)
      ++j;
    else
      doomed.push_back(v);
  }
  if (j != keep.size()) throw std::invalid_argument("keep_only: set not sorted or out of range");
  delete_vertices(std::move(doomed));
}

}  // namespace minorforge
