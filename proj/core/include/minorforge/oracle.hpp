#pragma once

#include <cstdint>
#include <optional>

#include "minorforge/graph.hpp"
#include "minorforge/minor_model.hpp"

namespace minorforge {

// Limits for the exhaustive search. The expansion cap counts attempted label
// assignments; when it runs out the search reports BudgetExceeded instead of
// quietly returning a truncated answer. Vertex caps may be raised up to 64
// host / 32 pattern vertices.
struct OracleBudget {
  uint32_t max_host_vertices = 16;
  uint32_t max_pattern_vertices = 8;
  uint64_t max_expansions = 100000000;
};

enum class OracleStatus { Found, NoMinor, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::NoMinor;
  std::optional<MinorModel> model;  // present exactly when status == Found
  uint64_t expansions = 0;
};

// Decides by complete search whether h is a minor of g. Host vertices are
// assigned in id order to one of the pattern branch sets or to none; pattern
// vertices are visited in decreasing-degree order. Prunes only discard
// assignments that provably cannot complete (a branch component cut off from
// the unassigned suffix, a pattern edge with no remaining way to get a host
// edge between its two branches, more empty branches than vertices left), and
// interchangeable host vertices are tried in canonical order only, so NoMinor
// is exhaustive. Found always carries a model that passes validate_model.
OracleResult has_minor_bruteforce(const Graph& g, const Graph& h,
                                  const OracleBudget& budget = {});

// Searches K_{2k-1, n} for k disjoint triangles. NoMinor is the expected
// confirmation; a Found result is a counterexample model worth treating as an
// implementation bug upstream.
OracleResult verify_triangle_family(uint32_t k, uint32_t n,
                                    const OracleBudget& budget = {});

}  // namespace minorforge
