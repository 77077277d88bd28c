#pragma once

#include <cstdint>

#include "kcb/graph.hpp"

namespace kcb {

enum class Feasibility { yes, no, unknown };

struct ChromaticResult {
  enum class Status { exact, exceeds_limit, budget_exhausted };
  Status status = Status::exact;
  int value = 0;  // chi when exact; the limit when exceeded

  bool exact(int expected) const { return status == Status::exact && value == expected; }
};

namespace detail {

// Backtracking k-colorability with dynamic saturation ordering and the
// standard symmetry break (at most one brand-new color index per branch).
// The budget counts color assignments; exhaustion yields `unknown`.
class KColorSearch {
 public:
  KColorSearch(const OnlineGraph& graph, int k, std::uint64_t budget)
      : graph_(graph), k_(k), budget_(budget), colors_(graph.vertex_count(), 0) {}

  Feasibility run() {
    if (graph_.vertex_count() == 0) return Feasibility::yes;
    return explore(0, 0);
  }

 private:
  Feasibility explore(std::size_t colored, int used) {
    if (colored == graph_.vertex_count()) return Feasibility::yes;
    const VertexId v = pick_vertex();
    std::vector<char> blocked(static_cast<std::size_t>(k_) + 1, 0);
    for (VertexId u : graph_.neighbors(v)) {
      if (colors_[u] > 0) blocked[colors_[u]] = 1;
    }
    const int ceiling = std::min(k_, used + 1);
    bool exhausted = false;
    for (int c = 1; c <= ceiling; ++c) {
      if (blocked[c]) continue;
      if (budget_ == 0) return Feasibility::unknown;
      --budget_;
      colors_[v] = c;
      const Feasibility below = explore(colored + 1, std::max(used, c));
      colors_[v] = 0;
      if (below == Feasibility::yes) return Feasibility::yes;
      if (below == Feasibility::unknown) exhausted = true;
    }
    return exhausted ? Feasibility::unknown : Feasibility::no;
  }

  VertexId pick_vertex() const {
    VertexId best = 0;
    int best_saturation = -1;
    std::size_t best_degree = 0;
    std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
      if (colors_[v] != 0) continue;
      std::fill(seen.begin(), seen.end(), 0);
      int saturation = 0;
      for (VertexId u : graph_.neighbors(v)) {
        if (colors_[u] > 0 && !seen[colors_[u]]) {
          seen[colors_[u]] = 1;
          ++saturation;
        }
      }
      const std::size_t degree = graph_.neighbors(v).size();
      if (saturation > best_saturation ||
          (saturation == best_saturation && degree > best_degree)) {
        best = v;
        best_saturation = saturation;
        best_degree = degree;
      }
    }
    return best;
  }

  const OnlineGraph& graph_;
  int k_;
  std::uint64_t budget_;
  std::vector<int> colors_;
};

// Greedy clique over a degree-descending order; lower-bounds the search.
inline int greedy_clique_bound(const OnlineGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return 0;
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return graph.neighbors(a).size() > graph.neighbors(b).size();
  });
  std::vector<VertexId> clique;
  for (VertexId v : order) {
    bool adjacent_to_all = true;
    for (VertexId u : clique) {
      if (!graph.has_edge(u, v)) {
        adjacent_to_all = false;
        break;
      }
    }
    if (adjacent_to_all) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace detail

inline Feasibility k_colorable(const OnlineGraph& graph, int k,
                               std::uint64_t budget = 50'000'000) {
  if (k < 0) return Feasibility::no;
  return detail::KColorSearch(graph, k, budget).run();
}

// Exact chromatic number up to `limit`: iterative deepening on the color
// count starting from a greedy clique bound. A budget overrun is reported
// explicitly rather than returning a wrong value.
inline ChromaticResult chromatic_number(const OnlineGraph& graph, int limit,
                                        std::uint64_t budget = 50'000'000) {
  if (graph.vertex_count() == 0) return {ChromaticResult::Status::exact, 0};
  int lower = std::max(1, detail::greedy_clique_bound(graph));
  if (graph.edge_count() > 0) lower = std::max(lower, 2);
  for (int k = lower; k <= limit; ++k) {
    switch (k_colorable(graph, k, budget)) {
      case Feasibility::yes:
        return {ChromaticResult::Status::exact, k};
      case Feasibility::unknown:
        return {ChromaticResult::Status::budget_exhausted, k};
      case Feasibility::no:
        break;
    }
  }
  return {ChromaticResult::Status::exceeds_limit, limit};
}

}  // namespace kcb
