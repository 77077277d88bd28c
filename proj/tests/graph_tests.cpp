#include <catch2/catch.hpp>

#include "support/test_oracles.hpp"

using namespace kcb;
namespace oracle = kcb::testing;

TEST_CASE("step validation", "[graph]") {
  OnlineGraph graph;
  ComponentTracker tracker;
  add_vertex(graph, tracker, make_step(0));

  SECTION("vertex ids must be dense and in arrival order") {
    CHECK_THROWS_AS(graph.add_step(make_step(0)), std::invalid_argument);
    CHECK_THROWS_AS(graph.add_step(make_step(5)), std::invalid_argument);
  }
  SECTION("pre-neighbors must already be presented") {
    CHECK_THROWS_AS(graph.add_step(make_step(1, {1})), std::invalid_argument);
    CHECK_THROWS_AS(graph.add_step(make_step(1, {7})), std::invalid_argument);
  }
  SECTION("pre-neighborhood entries are unique") {
    CHECK_THROWS_AS(graph.add_step(make_step(1, {0, 0})), std::invalid_argument);
  }
}

TEST_CASE("add_vertex counts components", "[graph]") {
  OnlineGraph graph;
  ComponentTracker tracker;

  SECTION("a lone vertex is one component") {
    CHECK(add_vertex(graph, tracker, make_step(0)) == 1);
  }

  SECTION("a vertex joining two singletons merges them") {
    add_vertex(graph, tracker, make_step(0));
    CHECK(add_vertex(graph, tracker, make_step(1)) == 2);
    CHECK(add_vertex(graph, tracker, make_step(2, {0, 1})) == 1);
  }

  SECTION("the paired bipartite order peaks at two components") {
    FfBipartiteAdversary family(8);
    std::size_t components = 0;
    std::vector<std::size_t> after;
    while (auto move = family.next_move()) {
      components = add_vertex(graph, tracker, move->step);
      after.push_back(components);
    }
    CHECK(after[1] == 2);
    CHECK(*std::max_element(after.begin(), after.end()) == 2);
    CHECK(after == std::vector<std::size_t>{1, 2, 2, 2, 1, 1, 1, 1});
  }
}

TEST_CASE("component sides", "[graph]") {
  OnlineGraph graph;
  ComponentTracker tracker;

  SECTION("one edge") {
    add_vertex(graph, tracker, make_step(0));
    add_vertex(graph, tracker, make_step(1, {0}));
    const ComponentSides sides = component_sides(tracker, 1);
    CHECK(sides.same_side == std::vector<VertexId>{1});
    CHECK(sides.opposite_side == std::vector<VertexId>{0});
  }

  SECTION("parity along a path") {
    add_vertex(graph, tracker, make_step(0));
    add_vertex(graph, tracker, make_step(1, {0}));
    add_vertex(graph, tracker, make_step(2, {1}));
    ComponentSides sides = component_sides(tracker, 0);
    std::sort(sides.same_side.begin(), sides.same_side.end());
    CHECK(sides.same_side == std::vector<VertexId>{0, 2});
    CHECK(sides.opposite_side == std::vector<VertexId>{1});
  }

  SECTION("the level-3 tree splits 2/2 around its root") {
    // Vertices 0,1 form an edge rooted at 1; vertex 2 is a singleton; vertex
    // 3 joins both roots. Even side of 3 (by BFS from 3): {3, 0}.
    auto tree = CbipTreeAdversary::for_level(3);
    while (auto move = tree.next_move()) add_vertex(graph, tracker, move->step);
    ComponentSides sides = component_sides(tracker, 3);
    std::sort(sides.same_side.begin(), sides.same_side.end());
    std::sort(sides.opposite_side.begin(), sides.opposite_side.end());
    CHECK(sides.same_side == std::vector<VertexId>{0, 3});
    CHECK(sides.opposite_side == std::vector<VertexId>{1, 2});
    CHECK(sides.same_side.size() + sides.opposite_side.size() == 4);
  }
}

TEST_CASE("odd cycles clear the bipartite flag without breaking counting", "[graph]") {
  OnlineGraph graph;
  ComponentTracker tracker;
  add_vertex(graph, tracker, make_step(0));
  add_vertex(graph, tracker, make_step(1, {0}));
  CHECK(add_vertex(graph, tracker, make_step(2, {0, 1})) == 1);
  CHECK_FALSE(tracker.bipartite(0));
  CHECK_THROWS_AS(tracker.sides(2), ContractViolation);
  CHECK(add_vertex(graph, tracker, make_step(3)) == 2);
}

TEST_CASE("incremental component counts match BFS on random graphs", "[graph][property]") {
  std::mt19937_64 rng(20240331);
  for (int instance = 0; instance < 40; ++instance) {
    const std::size_t n = 2 + rng() % 120;
    const auto steps = oracle::random_presentation(rng, n, 0.04);
    OnlineGraph graph;
    ComponentTracker tracker;
    for (const auto& step : steps) {
      const std::size_t incremental = add_vertex(graph, tracker, step);
      REQUIRE(incremental == oracle::bfs_component_count(graph, graph.vertex_count()));
    }
  }
}

TEST_CASE("sides agree with BFS bipartitions and have no intra-side edges", "[graph][property]") {
  std::mt19937_64 rng(77);
  for (int instance = 0; instance < 40; ++instance) {
    const std::size_t n = 2 + rng() % 80;
    const auto steps = oracle::random_bipartite_kcb(rng, 3, n);
    OnlineGraph graph;
    ComponentTracker tracker;
    for (const auto& step : steps) add_vertex(graph, tracker, step);
    const auto sides_oracle = oracle::bfs_bipartition(graph);
    REQUIRE(sides_oracle.has_value());
    for (VertexId v = 0; v < n; ++v) {
      const ComponentSides sides = tracker.sides(v);
      for (VertexId u : sides.same_side) {
        CHECK_FALSE(graph.has_edge(u, v));
        CHECK((*sides_oracle)[u] == (*sides_oracle)[v]);
      }
      for (VertexId u : sides.opposite_side) {
        CHECK((*sides_oracle)[u] != (*sides_oracle)[v]);
      }
      CHECK(sides.same_side.size() + sides.opposite_side.size() == tracker.component_size(v));
    }
  }
}
