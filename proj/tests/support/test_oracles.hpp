#pragma once

// Test-only reference implementations, deliberately independent of the
// incremental/pruned code paths they cross-check: from-scratch BFS for
// component counts and bipartitions, plain lexicographic backtracking for
// the chromatic number, and generators for random presentations.

#include <random>

#include "kcb/kcb.hpp"

namespace kcb::testing {

// Component count of the prefix graph on vertices [0, prefix).
inline std::size_t bfs_component_count(const OnlineGraph& graph, std::size_t prefix) {
  std::vector<char> seen(prefix, 0);
  std::size_t components = 0;
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < prefix; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = 1;
    queue.clear();
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId y : graph.neighbors(queue[head])) {
        if (y < prefix && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return components;
}

// Global 2-coloring by BFS; nullopt when some component has an odd cycle.
inline std::optional<std::vector<int>> bfs_bipartition(const OnlineGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    queue.clear();
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      for (VertexId y : graph.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = side[x] ^ 1;
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

// Chromatic number by dumb enumeration: vertices in index order, colors
// tried lexicographically, no ordering heuristics and no bounds beyond the
// conflict check. Only for small graphs.
inline bool enumerate_k_coloring(const OnlineGraph& graph, std::vector<int>& colors,
                                 std::size_t v, int k) {
  if (v == graph.vertex_count()) return true;
  for (int c = 1; c <= k; ++c) {
    bool clash = false;
    for (VertexId u : graph.pre_neighbors(static_cast<VertexId>(v))) {
      if (colors[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    colors[v] = c;
    if (enumerate_k_coloring(graph, colors, v + 1, k)) return true;
    colors[v] = 0;
  }
  return false;
}

inline int exhaustive_chromatic(const OnlineGraph& graph) {
  if (graph.vertex_count() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> colors(graph.vertex_count(), 0);
    if (enumerate_k_coloring(graph, colors, 0, k)) return k;
  }
}

// Shortest-cycle existence by brute DFS from every vertex; small graphs only.
inline bool brute_cycle_at_most(const OnlineGraph& graph, int k) {
  const std::size_t n = graph.vertex_count();
  std::vector<char> on_path(n, 0);
  bool found = false;
  auto dfs = [&](auto&& self, VertexId start, VertexId at, int length) -> void {
    if (found || length > k) return;
    on_path[at] = 1;
    for (VertexId y : graph.neighbors(at)) {
      if (y == start && length >= 2) {
        if (length + 1 >= 3 && length + 1 <= k) found = true;
      } else if (!on_path[y] && y > start) {
        self(self, start, y, length + 1);
      }
    }
    on_path[at] = 0;
  };
  for (VertexId start = 0; start < n && !found; ++start) {
    dfs(dfs, start, start, 0);
  }
  return found;
}

// Runs a colorer over a fixed step sequence.
inline std::vector<Bin> run_colorer(OnlineColorer& colorer,
                                    const std::vector<PresentationStep>& steps) {
  std::vector<Bin> bins;
  bins.reserve(steps.size());
  for (const auto& step : steps) bins.push_back(colorer.place(step));
  return bins;
}

// Random presentation of a random graph: each later vertex links back to
// every earlier one independently. No component-budget constraint.
inline std::vector<PresentationStep> random_presentation(std::mt19937_64& rng, std::size_t n,
                                                         double edge_probability) {
  std::bernoulli_distribution flip(edge_probability);
  std::vector<PresentationStep> steps;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> pre;
    for (VertexId u = 0; u < v; ++u) {
      if (flip(rng)) pre.push_back(u);
    }
    steps.push_back(make_step(v, std::move(pre)));
  }
  return steps;
}

// Random bipartite presentation that keeps every prefix within `kappa`
// components. Vertices carry a fixed global side; edges only cross sides.
inline std::vector<PresentationStep> random_bipartite_kcb(std::mt19937_64& rng, int kappa,
                                                          std::size_t n) {
  std::vector<PresentationStep> steps;
  std::vector<int> side(n, 0);
  ComponentTracker tracker;
  std::uniform_int_distribution<int> coin(0, 1);
  std::bernoulli_distribution isolated(0.25);
  for (VertexId v = 0; v < n; ++v) {
    int s = coin(rng);
    const bool may_isolate = tracker.component_count() < static_cast<std::size_t>(kappa);
    std::vector<VertexId> pre;
    if (v > 0 && !(may_isolate && isolated(rng))) {
      // Components that can host an opposite-side neighbor of s.
      auto hosts = [&](int want_side) {
        std::vector<VertexId> roots;
        for (VertexId root : tracker.roots()) {
          const auto& lists = tracker.side_lists(root);
          bool has = false;
          for (int parity = 0; parity < 2 && !has; ++parity) {
            for (VertexId u : lists[parity]) {
              if (side[u] == want_side) {
                has = true;
                break;
              }
            }
          }
          if (has) roots.push_back(root);
        }
        return roots;
      };
      std::vector<VertexId> roots = hosts(1 - s);
      if (roots.empty()) {
        s = 1 - s;
        roots = hosts(1 - s);
      }
      std::shuffle(roots.begin(), roots.end(), rng);
      const std::size_t touch =
          1 + std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(roots.size() - 1, 2))(rng);
      for (std::size_t i = 0; i < touch; ++i) {
        std::vector<VertexId> candidates;
        const auto& lists = tracker.side_lists(roots[i]);
        for (int parity = 0; parity < 2; ++parity) {
          for (VertexId u : lists[parity]) {
            if (side[u] == 1 - s) candidates.push_back(u);
          }
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
        const std::size_t links =
            1 + std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(candidates.size() - 1, 1))(rng);
        pre.insert(pre.end(), candidates.begin(), candidates.begin() + links);
      }
      std::sort(pre.begin(), pre.end());
      pre.erase(std::unique(pre.begin(), pre.end()), pre.end());
    }
    side[v] = s;
    tracker.add_vertex();
    for (VertexId u : pre) tracker.add_edge(u, v);
    steps.push_back(make_step(v, std::move(pre)));
  }
  return steps;
}

// Runs the strategy against the colorer without any trace plumbing; returns
// the observed bins.
inline std::vector<Bin> drive(AdversaryStrategy& strategy, OnlineColorer& colorer) {
  std::vector<Bin> bins;
  while (auto move = strategy.next_move()) {
    const Bin bin = colorer.place(move->step);
    strategy.observe_bin(move->step.vertex, bin);
    bins.push_back(bin);
  }
  return bins;
}

inline int distinct_count(const std::vector<Bin>& bins) {
  std::vector<Bin> copy = bins;
  std::sort(copy.begin(), copy.end());
  copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
  return static_cast<int>(copy.size());
}

}  // namespace kcb::testing
