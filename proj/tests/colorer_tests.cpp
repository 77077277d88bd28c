#include <catch2/catch.hpp>

#include "support/test_oracles.hpp"

using namespace kcb;
namespace oracle = kcb::testing;

namespace {

std::vector<PresentationStep> path_steps(std::size_t n) {
  std::vector<PresentationStep> steps;
  for (VertexId v = 0; v < n; ++v) {
    steps.push_back(v == 0 ? make_step(0) : make_step(v, {v - 1}));
  }
  return steps;
}

}  // namespace

TEST_CASE("first-fit basics", "[colorers]") {
  FirstFitColorer ff;

  SECTION("alternates on a path") {
    CHECK(oracle::run_colorer(ff, path_steps(3)) == std::vector<Bin>{1, 2, 1});
  }

  SECTION("pairs bins on the two-component bipartite family") {
    FfBipartiteAdversary family(8);
    std::vector<Bin> bins;
    while (auto move = family.next_move()) bins.push_back(ff.place(move->step));
    CHECK(bins == std::vector<Bin>{1, 1, 2, 2, 3, 3, 4, 4});
  }

  SECTION("a clique forces all-distinct bins") {
    CliqueAdversary clique(4);
    std::vector<Bin> bins;
    while (auto move = clique.next_move()) bins.push_back(ff.place(move->step));
    CHECK(bins == std::vector<Bin>{1, 2, 3, 4});
  }
}

TEST_CASE("first-fit minimality", "[colorers][property]") {
  std::mt19937_64 rng(5150);
  for (int instance = 0; instance < 30; ++instance) {
    const auto steps = oracle::random_presentation(rng, 2 + rng() % 60, 0.15);
    FirstFitColorer ff;
    for (const auto& step : steps) {
      const Bin bin = ff.place(step);
      // Every smaller bin index must appear in the pre-neighborhood.
      std::set<Bin> used;
      for (VertexId u : step.pre_neighborhood) used.insert(ff.bin_of(u));
      for (Bin b = 1; b < bin; ++b) REQUIRE(used.count(b) == 1);
      REQUIRE(used.count(bin) == 0);
    }
  }
}

TEST_CASE("cbip basics", "[colorers]") {
  CbipColorer cbip;

  SECTION("one edge") {
    CHECK(oracle::run_colorer(cbip, path_steps(2)) == std::vector<Bin>{1, 2});
  }

  SECTION("merging two singletons reads the whole opposite side") {
    CHECK(cbip.place(make_step(0)) == 1);
    CHECK(cbip.place(make_step(1)) == 1);
    CHECK(cbip.place(make_step(2, {0, 1})) == 2);
  }

  SECTION("level-4 tree: the root lands in bin 4 and the parity bin sets split") {
    auto tree = CbipTreeAdversary::for_level(4);
    OnlineGraph graph;
    std::vector<Bin> bins;
    while (auto move = tree.next_move()) {
      graph.add_step(move->step);
      bins.push_back(cbip.place(graph.steps().back()));
    }
    REQUIRE(bins.size() == 7);
    const VertexId root = tree.subtrees().back().root;
    CHECK(bins[root] == 4);
    std::set<Bin> even, odd;
    std::vector<int> depth(graph.vertex_count(), -1);
    std::vector<VertexId> queue{root};
    depth[root] = 0;
    even.insert(bins[root]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId y : graph.neighbors(queue[head])) {
        if (depth[y] < 0) {
          depth[y] = depth[queue[head]] + 1;
          (depth[y] % 2 ? odd : even).insert(bins[y]);
          queue.push_back(y);
        }
      }
    }
    CHECK(even == std::set<Bin>{1, 2, 4});
    CHECK(odd == std::set<Bin>{1, 2, 3});
  }

  SECTION("an odd cycle is a contract violation") {
    CHECK(cbip.place(make_step(0)) == 1);
    CHECK(cbip.place(make_step(1, {0})) == 2);
    CHECK_THROWS_AS(cbip.place(make_step(2, {0, 1})), ContractViolation);
  }
}

TEST_CASE("baseline colorer", "[colorers]") {
  SECTION("an isolated first vertex has only bin 1 available") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 999ULL}) {
      SeededColorer baseline(seed);
      CHECK(baseline.place(make_step(0)) == 1);
    }
  }

  SECTION("properness on an edge") {
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
      SeededColorer baseline(seed);
      const Bin first = baseline.place(make_step(0));
      CHECK(baseline.place(make_step(1, {0})) != first);
    }
  }

  SECTION("a fixed seed replays identically") {
    std::mt19937_64 rng(42);
    const auto steps = oracle::random_presentation(rng, 20, 0.3);
    SeededColorer one(42), two(42);
    CHECK(oracle::run_colorer(one, steps) == oracle::run_colorer(two, steps));
  }
}

TEST_CASE("every colorer is proper on random inputs", "[colorers][property]") {
  std::mt19937_64 rng(31337);
  for (int instance = 0; instance < 25; ++instance) {
    const auto steps = oracle::random_presentation(rng, 2 + rng() % 70, 0.1);
    OnlineGraph graph;
    for (const auto& step : steps) graph.add_step(step);

    FirstFitColorer ff;
    SeededColorer baseline(instance);
    CHECK(check_proper(graph, oracle::run_colorer(ff, steps)).ok);
    CHECK(check_proper(graph, oracle::run_colorer(baseline, steps)).ok);
  }
}

TEST_CASE("cbip equals first-fit on single-component bipartite presentations",
          "[colorers][property]") {
  std::mt19937_64 rng(271828);
  for (int instance = 0; instance < 60; ++instance) {
    const auto steps = oracle::random_bipartite_kcb(rng, 1, 2 + rng() % 60);
    FirstFitColorer ff;
    CbipColorer cbip;
    const auto ff_bins = oracle::run_colorer(ff, steps);
    CHECK(oracle::run_colorer(cbip, steps) == ff_bins);
    CHECK(oracle::distinct_count(ff_bins) == (steps.size() >= 2 ? 2 : 1));
  }
}
