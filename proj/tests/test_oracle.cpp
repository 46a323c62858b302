#include "minorforge/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "minorforge/generators.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/minor_model.hpp"
#include "minorforge/rng.hpp"

using minorforge::complete_bipartite;
using minorforge::complete_graph;
using minorforge::complete_multipartite;
using minorforge::cycle_graph;
using minorforge::disjoint_triangles;
using minorforge::gnp;
using minorforge::Graph;
using minorforge::grid_graph;
using minorforge::has_minor_bruteforce;
using minorforge::OracleBudget;
using minorforge::OracleResult;
using minorforge::OracleStatus;
using minorforge::path_graph;
using minorforge::petersen_graph;
using minorforge::SplitMix64;
using minorforge::star_graph;
using minorforge::validate_model;
using minorforge::verify_triangle_family;

namespace {

// Independent ground truth for tiny instances: try every assignment of host
// vertices to a branch or to none, with no pruning or symmetry breaking.
bool dumb_has_minor(const Graph& g, const Graph& h) {
  const uint32_t n = g.vertex_count();
  const uint32_t t = h.vertex_count();
  REQUIRE(n <= 7);
  if (t == 0) return true;
  if (t > n) return false;

  std::vector<uint32_t> label(n, 0);  // t means unused
  for (;;) {
    bool viable = true;
    for (uint32_t j = 0; j < t && viable; ++j) {
      std::vector<uint32_t> branch;
      for (uint32_t v = 0; v < n; ++v)
        if (label[v] == j) branch.push_back(v);
      if (branch.empty()) {
        viable = false;
        break;
      }
      std::vector<char> seen(n, 0);
      std::vector<uint32_t> stack{branch[0]};
      seen[branch[0]] = 1;
      uint32_t reached = 1;
      while (!stack.empty()) {
        const uint32_t u = stack.back();
        stack.pop_back();
        for (uint32_t w : g.neighbors(u))
          if (!seen[w] && label[w] == j) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
      }
      if (reached != branch.size()) viable = false;
    }
    if (viable) {
      bool all_edges = true;
      for (const auto& [a, b] : h.edges()) {
        bool hit = false;
        for (uint32_t v = 0; v < n && !hit; ++v) {
          if (label[v] != a) continue;
          for (uint32_t w : g.neighbors(v))
            if (label[w] == b) {
              hit = true;
              break;
            }
        }
        if (!hit) {
          all_edges = false;
          break;
        }
      }
      if (all_edges) return true;
    }

    uint32_t pos = 0;
    while (pos < n && label[pos] == t) label[pos++] = 0;
    if (pos == n) return false;
    ++label[pos];
  }
}

Graph permuted(const Graph& g, uint64_t seed) {
  std::vector<uint32_t> pi(g.vertex_count());
  std::iota(pi.begin(), pi.end(), 0);
  SplitMix64 rng(seed);
  rng.shuffle(pi);
  Graph out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out.add_edge(pi[u], pi[v]);
  return out;
}

void expect_found(const Graph& g, const Graph& h) {
  const OracleResult r = has_minor_bruteforce(g, h);
  REQUIRE(r.status == OracleStatus::Found);
  REQUIRE(r.model.has_value());
  const auto check = validate_model(*r.model);
  INFO(check.violation);
  CHECK(check.ok);
  CHECK(r.model->pattern == h);
  CHECK(r.model->host == g);
}

}  // namespace

TEST_CASE("oracle finds minors that are plainly there") {
  expect_found(complete_graph(5), complete_graph(4));
  expect_found(cycle_graph(5), complete_graph(3));
  expect_found(complete_bipartite(3, 3), complete_graph(4));
  expect_found(complete_bipartite(2, 3), cycle_graph(3));
  expect_found(grid_graph(3, 3), complete_graph(4));
  expect_found(petersen_graph(), complete_graph(5));
}

TEST_CASE("oracle rejects minors that cannot exist") {
  CHECK(has_minor_bruteforce(path_graph(10), cycle_graph(3)).status ==
        OracleStatus::NoMinor);
  CHECK(has_minor_bruteforce(star_graph(9), cycle_graph(3)).status ==
        OracleStatus::NoMinor);
  CHECK(has_minor_bruteforce(cycle_graph(4), complete_graph(4)).status ==
        OracleStatus::NoMinor);
  CHECK(has_minor_bruteforce(complete_graph(5), complete_graph(6)).status ==
        OracleStatus::NoMinor);
  // Planar hosts never contain a K5 minor.
  CHECK(has_minor_bruteforce(complete_multipartite({2, 2, 2}), complete_graph(5))
            .status == OracleStatus::NoMinor);
  CHECK(has_minor_bruteforce(grid_graph(3, 3), complete_graph(5)).status ==
        OracleStatus::NoMinor);
}

TEST_CASE("empty and single-vertex patterns are degenerate hits") {
  const OracleResult empty = has_minor_bruteforce(complete_graph(3), Graph(0));
  CHECK(empty.status == OracleStatus::Found);
  CHECK(empty.model->branch_sets.empty());

  const OracleResult one = has_minor_bruteforce(Graph(1), Graph(1));
  REQUIRE(one.status == OracleStatus::Found);
  CHECK(one.model->branch_sets == std::vector<std::vector<uint32_t>>{{0}});

  CHECK(has_minor_bruteforce(Graph(0), Graph(1)).status == OracleStatus::NoMinor);
}

TEST_CASE("oracle agrees with unpruned enumeration on small pairs") {
  int found = 0;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const double hp = seed % 3 == 0 ? 0.3 : (seed % 3 == 1 ? 0.5 : 0.8);
    const Graph g = gnp(6, hp, 1000 + seed);
    const Graph h = gnp(4, 0.5, 2000 + seed);
    const OracleResult r = has_minor_bruteforce(g, h);
    REQUIRE(r.status != OracleStatus::BudgetExceeded);
    const bool expected = dumb_has_minor(g, h);
    CHECK((r.status == OracleStatus::Found) == expected);
    if (r.status == OracleStatus::Found) {
      ++found;
      const auto check = validate_model(*r.model);
      INFO(check.violation);
      CHECK(check.ok);
    }
  }
  CHECK(found > 5);
  CHECK(found < 60);

  for (uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = gnp(7, 0.5, 3000 + seed);
    const Graph h = gnp(4, 0.6, 4000 + seed);
    const OracleResult r = has_minor_bruteforce(g, h);
    REQUIRE(r.status != OracleStatus::BudgetExceeded);
    CHECK((r.status == OracleStatus::Found) == dumb_has_minor(g, h));
  }
}

TEST_CASE("oracle verdicts are isomorphism invariant") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gnp(8, 0.4, 5000 + seed);
    const Graph h = seed % 2 == 0 ? cycle_graph(4) : complete_graph(3);
    const OracleStatus base = has_minor_bruteforce(g, h).status;
    const OracleStatus perm = has_minor_bruteforce(permuted(g, 99 + seed), h).status;
    CHECK(base == perm);
  }
}

TEST_CASE("adding host edges never destroys a found minor") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gnp(7, 0.45, 6000 + seed);
    const Graph h = gnp(4, 0.6, 7000 + seed);
    if (has_minor_bruteforce(g, h).status != OracleStatus::Found) continue;
    Graph bigger = g;
    bool added = false;
    for (uint32_t u = 0; u < 7 && !added; ++u)
      for (uint32_t v = u + 1; v < 7 && !added; ++v)
        if (!bigger.has_edge(u, v)) {
          bigger.add_edge(u, v);
          added = true;
        }
    CHECK(has_minor_bruteforce(bigger, h).status == OracleStatus::Found);
  }
}

TEST_CASE("expansion budget aborts loudly") {
  OracleBudget tiny;
  tiny.max_expansions = 5;
  const OracleResult r = has_minor_bruteforce(grid_graph(3, 3), complete_graph(5), tiny);
  CHECK(r.status == OracleStatus::BudgetExceeded);
  CHECK(!r.model.has_value());
  CHECK(r.expansions == 5);
}

TEST_CASE("budget caps are validated") {
  CHECK_THROWS_AS(has_minor_bruteforce(gnp(17, 0.5, 1), complete_graph(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(has_minor_bruteforce(complete_graph(3), gnp(9, 0.5, 1)),
                  std::invalid_argument);

  OracleBudget wide;
  wide.max_host_vertices = 24;
  wide.max_pattern_vertices = 10;
  CHECK(has_minor_bruteforce(cycle_graph(20), cycle_graph(9), wide).status ==
        OracleStatus::Found);

  OracleBudget too_wide;
  too_wide.max_host_vertices = 65;
  CHECK_THROWS_AS(has_minor_bruteforce(complete_graph(3), complete_graph(3), too_wide),
                  std::invalid_argument);
  OracleBudget zero;
  zero.max_expansions = 0;
  CHECK_THROWS_AS(has_minor_bruteforce(complete_graph(3), complete_graph(3), zero),
                  std::invalid_argument);
}

TEST_CASE("triangle family hosts contain no disjoint-triangle minors") {
  const OracleResult a = verify_triangle_family(1, 8);
  CHECK(a.status == OracleStatus::NoMinor);
  const OracleResult b = verify_triangle_family(2, 10);
  CHECK(b.status == OracleStatus::NoMinor);
  CHECK(b.expansions > 0);
  const OracleResult c = verify_triangle_family(2, 12);
  CHECK(c.status == OracleStatus::NoMinor);

  CHECK_THROWS_AS(verify_triangle_family(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_triangle_family(1, 0), std::invalid_argument);

  // The same pattern is findable once the small side grows: K_{2,3} holds a
  // C4, which contracts to a triangle. The family check is not vacuous.
  expect_found(complete_bipartite(2, 3), disjoint_triangles(1));
}

TEST_CASE("oracle search is deterministic") {
  const Graph g = gnp(9, 0.5, 42);
  const Graph h = cycle_graph(4);
  const OracleResult first = has_minor_bruteforce(g, h);
  const OracleResult second = has_minor_bruteforce(g, h);
  REQUIRE(first.status == second.status);
  CHECK(first.expansions == second.expansions);
  if (first.status == OracleStatus::Found)
    CHECK(first.model->branch_sets == second.model->branch_sets);
}
