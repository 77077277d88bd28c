#pragma once

#include <map>
#include <set>

#include "kcb/adversary.hpp"
#include "kcb/component_tracker.hpp"

namespace kcb {

struct KappaCbCheck {
  bool ok = true;
  std::size_t first_violation = 0;  // 1-based prefix length; 0 when ok
};

// Every prefix of the presentation must span at most kappa components.
inline KappaCbCheck check_kappa_cb(const std::vector<PresentationStep>& steps, int kappa) {
  OnlineGraph graph;
  ComponentTracker tracker;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::size_t components = add_vertex(graph, tracker, steps[i]);
    if (components > static_cast<std::size_t>(kappa)) return {false, i + 1};
  }
  return {true, 0};
}

struct ProperCheck {
  bool ok = true;
  VertexId u = 0;
  VertexId v = 0;  // violating edge endpoints when !ok
};

// True iff no edge joins two equal labels. Vertices without a label entry
// (label <= 0) are treated as unlabeled and fail the check.
inline ProperCheck check_proper(const OnlineGraph& graph, const std::vector<int>& labels) {
  if (labels.size() < graph.vertex_count()) {
    return {false, static_cast<VertexId>(labels.size()), static_cast<VertexId>(labels.size())};
  }
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (labels[v] <= 0) return {false, v, v};
    for (VertexId u : graph.pre_neighbors(v)) {
      if (labels[u] == labels[v]) return {false, u, v};
    }
  }
  return {true, 0, 0};
}

inline int distinct_labels(const std::vector<int>& labels) {
  std::vector<int> copy = labels;
  std::sort(copy.begin(), copy.end());
  copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
  return static_cast<int>(copy.size());
}

// True iff the graph contains a cycle of length at most k. Per-source BFS:
// the first non-tree edge closing two branches bounds the shortest cycle
// through the source; the minimum over sources is the girth.
inline bool girth_at_most(const OnlineGraph& graph, int k) {
  if (k < 3) return false;
  const std::size_t n = graph.vertex_count();
  std::vector<int> dist(n);
  std::vector<VertexId> parent(n);
  std::vector<VertexId> queue;
  for (VertexId source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    parent[source] = source;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      for (VertexId y : graph.neighbors(x)) {
        if (y == parent[x]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else {
          const int cycle = dist[x] + dist[y] + 1;
          if (cycle <= k) return true;
        }
      }
    }
  }
  return false;
}

// Largest number of neighbors any vertex has among vertices appearing later
// in `order`; the graph is d-inductive for the order iff the result is <= d.
inline int max_back_degree(const OnlineGraph& graph, const std::vector<VertexId>& order) {
  if (order.size() != graph.vertex_count()) {
    throw std::invalid_argument("order must cover every vertex exactly once");
  }
  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  int worst = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    int later = 0;
    for (VertexId u : graph.neighbors(v)) {
      if (position[u] > position[v]) ++later;
    }
    worst = std::max(worst, later);
  }
  return worst;
}

inline int max_back_degree(const OnlineGraph& graph) {
  std::vector<VertexId> order(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) order[v] = v;
  return max_back_degree(graph, order);
}

struct SaturationReport {
  // Largest p for which the bin holds p vertices with p distinct adversary
  // colors, i.e. the number of distinct colors inside the bin.
  std::map<Bin, int> saturation;
  // Whether the bin holds exactly that many vertices.
  std::map<Bin, bool> perfectly;

  int saturation_of(Bin b) const {
    auto it = saturation.find(b);
    return it == saturation.end() ? 0 : it->second;
  }
  bool perfectly_saturated(Bin b) const {
    auto it = perfectly.find(b);
    return it != perfectly.end() && it->second;
  }
};

inline SaturationReport saturation_report(const std::vector<Bin>& bins,
                                          const std::vector<AdversaryColor>& colors) {
  if (bins.size() != colors.size()) {
    throw std::invalid_argument("bins and colors must align");
  }
  std::map<Bin, std::set<AdversaryColor>> palette;
  std::map<Bin, int> population;
  for (std::size_t v = 0; v < bins.size(); ++v) {
    palette[bins[v]].insert(colors[v]);
    population[bins[v]] += 1;
  }
  SaturationReport report;
  for (const auto& [bin, seen] : palette) {
    report.saturation[bin] = static_cast<int>(seen.size());
    report.perfectly[bin] = population[bin] == static_cast<int>(seen.size());
  }
  return report;
}

}  // namespace kcb
