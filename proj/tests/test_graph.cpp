#include <stdexcept>

#include "doctest.h"
#include "minorforge/generators.hpp"
#include "minorforge/graph.hpp"

using namespace minorforge;

TEST_CASE("edges are simple, sorted, and validated") {
  Graph g(4);
  CHECK(g.add_edge(2, 0));
  CHECK(g.add_edge(0, 3));
  CHECK_FALSE(g.add_edge(0, 2));  // duplicate, either orientation
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(0) == std::vector<uint32_t>{2, 3});
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  auto es = g.edges();
  CHECK(es == std::vector<std::pair<uint32_t, uint32_t>>{{0, 2}, {0, 3}});
}

TEST_CASE("average degree is the exact rational 2m/n") {
  CHECK(complete_graph(5).average_degree() == Rational(4));
  CHECK(cycle_graph(6).average_degree() == Rational(2));
  CHECK(star_graph(4).average_degree() == Rational(8, 5));
  CHECK_THROWS_AS(Graph(0).average_degree(), std::invalid_argument);
}

TEST_CASE("triangle counts per edge") {
  CHECK(complete_graph(4).triangles_on_edge(0, 1) == 2);
  CHECK(complete_graph(5).triangles_on_edge(2, 4) == 3);
  CHECK(cycle_graph(5).triangles_on_edge(0, 1) == 0);
  Graph k5e = complete_graph(5);
  k5e.delete_edge(0, 1);  // K5 minus an edge
  CHECK(k5e.triangles_on_edge(2, 3) == 3);
  CHECK(k5e.triangles_on_edge(0, 2) == 2);
  CHECK_THROWS_AS(k5e.triangles_on_edge(0, 1), std::invalid_argument);
}

TEST_CASE("contraction merges into the smaller id and shifts the rest") {
  // Path 0-1-2: contracting (0,1) leaves a single edge.
  Graph p = path_graph(3);
  p.contract_edge(1, 0);
  CHECK(p.vertex_count() == 2);
  CHECK(p.edge_count() == 1);
  CHECK(p.has_edge(0, 1));

  Graph k3 = complete_graph(3);
  k3.contract_edge(0, 1);
  CHECK(k3.vertex_count() == 2);
  CHECK(k3.edge_count() == 1);  // the two parallel copies collapse

  Graph c5 = cycle_graph(5);
  c5.contract_edge(2, 3);
  CHECK(c5 == cycle_graph(4));

  CHECK_THROWS_AS(cycle_graph(5).contract_edge(0, 2), std::invalid_argument);
}

TEST_CASE("vertex deletion keeps ids dense") {
  Graph g = cycle_graph(5);
  g.delete_vertex(2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  // Deleting vertex 2 from the cycle 0-1-2-3-4 leaves the path 1-0-4-3,
  // which in shifted ids is edges (0,1), (0,3), (2,3).
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(2, 3));
}

TEST_CASE("components and connectivity") {
  Graph g = disjoint_union(complete_graph(3), path_graph(2));
  auto comps = g.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<uint32_t>{0, 1, 2});
  CHECK(comps[1] == std::vector<uint32_t>{3, 4});
  CHECK_FALSE(g.connected());
  CHECK(complete_graph(4).connected());
  CHECK(Graph(0).connected());
  CHECK(complete_graph(3).is_complete());
  CHECK_FALSE(path_graph(3).is_complete());
  CHECK(path_graph(4).is_tree());
  CHECK_FALSE(cycle_graph(4).is_tree());
  CHECK_FALSE(disjoint_union(path_graph(2), path_graph(2)).is_tree());
}

TEST_CASE("induced subgraph compresses ids in order") {
  Graph g = cycle_graph(6);
  Graph sub = g.induced({0, 1, 3, 4});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.has_edge(0, 1));
  CHECK(sub.has_edge(2, 3));
  CHECK(sub.edge_count() == 2);
  CHECK_THROWS_AS(g.induced({1, 0}), std::invalid_argument);
}

TEST_CASE("bit rows mirror adjacency and count common neighbors") {
  Graph g = petersen_graph();
  BitRows rows(g);
  for (uint32_t u = 0; u < 10; ++u)
    for (uint32_t v = 0; v < 10; ++v) CHECK(rows.test(u, v) == g.has_edge(u, v));
  // Petersen: adjacent vertices share no neighbors, non-adjacent share one.
  CHECK(rows.common_count(0, 1) == 0);
  CHECK(rows.common_count(0, 2) == 1);
}

TEST_CASE("2-degeneracy peel finds orders exactly when they exist") {
  auto tree_order = degeneracy_order_2(path_graph(6));
  REQUIRE(tree_order.has_value());
  CHECK(is_valid_elimination_order_2(path_graph(6), *tree_order));

  auto k4_order = degeneracy_order_2(complete_graph(4));
  CHECK_FALSE(k4_order.has_value());

  // 1-subdivision of K5: subdividing every edge makes it 2-degenerate.
  Graph k5sub(5 + 10);
  uint32_t next = 5;
  for (uint32_t u = 0; u < 5; ++u)
    for (uint32_t v = u + 1; v < 5; ++v) {
      k5sub.add_edge(u, next);
      k5sub.add_edge(next, v);
      ++next;
    }
  auto sub_order = degeneracy_order_2(k5sub);
  REQUIRE(sub_order.has_value());
  CHECK(is_valid_elimination_order_2(k5sub, *sub_order));

  // A wrong order is recognized: eliminating hub 0 first leaves its four
  // division vertices as later neighbors.
  EliminationOrder bad(15);
  for (uint32_t i = 0; i < 15; ++i) bad[i] = i;
  CHECK_FALSE(is_valid_elimination_order_2(k5sub, bad));
  CHECK_FALSE(is_valid_elimination_order_2(path_graph(3), {0, 1}));
  CHECK_FALSE(is_valid_elimination_order_2(path_graph(3), {0, 0, 1}));
}

TEST_CASE("tree-plus-edge spanning subgraph") {
  Graph c5 = cycle_graph(5);
  CHECK(tree_plus_edge_spanning(c5) == c5);

  Graph k4 = complete_graph(4);
  Graph span = tree_plus_edge_spanning(k4);
  CHECK(span.vertex_count() == 4);
  CHECK(span.edge_count() == 4);
  CHECK(span.connected());
  for (auto [u, v] : span.edges()) CHECK(k4.has_edge(u, v));

  // Triangle with a pendant vertex is already tree-plus-edge.
  Graph paw(4);
  paw.add_edge(0, 1);
  paw.add_edge(0, 2);
  paw.add_edge(1, 2);
  paw.add_edge(2, 3);
  CHECK(tree_plus_edge_spanning(paw) == paw);

  CHECK_THROWS_AS(tree_plus_edge_spanning(path_graph(4)), std::invalid_argument);
  CHECK_THROWS_AS(tree_plus_edge_spanning(disjoint_triangles(2)), std::invalid_argument);
}
