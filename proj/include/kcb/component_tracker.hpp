#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "kcb/graph.hpp"

namespace kcb {

struct ComponentSides {
  std::vector<VertexId> same_side;
  std::vector<VertexId> opposite_side;
};

// Incremental connected components with bipartition sides: weighted
// union-find with path compression, a per-vertex parity bit relative to the
// parent, and per-root explicit side lists (merged small-into-large) so side
// enumeration is output-linear. An odd cycle clears the component's
// bipartite flag instead of failing; component counting keeps working.
class ComponentTracker {
 public:
  VertexId add_vertex() {
    const VertexId v = static_cast<VertexId>(parent_.size());
    parent_.push_back(v);
    parity_.push_back(0);
    size_.push_back(1);
    members_.push_back({std::vector<VertexId>{v}, std::vector<VertexId>{}});
    bipartite_.push_back(1);
    ++components_;
    return v;
  }

  // Records edge (u, v); the endpoints are forced onto opposite sides.
  void add_edge(VertexId u, VertexId v) {
    check_id(u);
    check_id(v);
    if (u == v) throw std::invalid_argument("self-loop");
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      if (pu == pv) bipartite_[ru] = 0;
      return;
    }
    if (size_[ru] < size_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    const std::uint8_t link = 1 ^ pu ^ pv;  // parity of rv relative to ru
    parent_[rv] = ru;
    parity_[rv] = link;
    size_[ru] += size_[rv];
    bipartite_[ru] = bipartite_[ru] && bipartite_[rv];
    for (int side = 0; side < 2; ++side) {
      auto& from = members_[rv][side];
      auto& into = members_[ru][side ^ link];
      into.insert(into.end(), from.begin(), from.end());
      from.clear();
      from.shrink_to_fit();
    }
    --components_;
  }

  std::size_t vertex_count() const { return parent_.size(); }
  std::size_t component_count() const { return components_; }

  VertexId root_of(VertexId v) const {
    check_id(v);
    return find(v).first;
  }
  bool same_component(VertexId u, VertexId v) const { return root_of(u) == root_of(v); }
  bool bipartite(VertexId v) const { return bipartite_[root_of(v)] != 0; }
  std::size_t component_size(VertexId v) const { return size_[root_of(v)]; }

  // Side bit of v relative to its component representative.
  bool parity_of(VertexId v) const {
    check_id(v);
    return find(v).second != 0;
  }

  // Bipartition of v's component with v listed first on its own side.
  ComponentSides sides(VertexId v) const {
    check_id(v);
    auto [root, parity] = find(v);
    if (!bipartite_[root]) {
      throw ContractViolation("component of vertex " + std::to_string(v) +
                              " is not bipartite");
    }
    return ComponentSides{members_[root][parity], members_[root][parity ^ 1]};
  }

  // Raw per-root side lists (parity-0 and parity-1 classes).
  const std::array<std::vector<VertexId>, 2>& side_lists(VertexId root) const {
    check_id(root);
    return members_[root];
  }

  std::vector<VertexId> component_vertices(VertexId v) const {
    const VertexId root = root_of(v);
    std::vector<VertexId> out = members_[root][0];
    out.insert(out.end(), members_[root][1].begin(), members_[root][1].end());
    return out;
  }

  std::vector<VertexId> roots() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < parent_.size(); ++v) {
      if (parent_[v] == v) out.push_back(v);
    }
    return out;
  }

 private:
  void check_id(VertexId v) const {
    if (v >= parent_.size()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " not presented");
    }
  }

  // Two-pass path compression keeping parities relative to the root.
  std::pair<VertexId, std::uint8_t> find(VertexId v) const {
    VertexId root = v;
    std::uint8_t parity = 0;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    VertexId walk = v;
    std::uint8_t walk_parity = parity;
    while (parent_[walk] != root) {
      const VertexId next = parent_[walk];
      const std::uint8_t next_parity = walk_parity ^ parity_[walk];
      parent_[walk] = root;
      parity_[walk] = walk_parity;
      walk = next;
      walk_parity = next_parity;
    }
    return {root, parity};
  }

  mutable std::vector<VertexId> parent_;
  mutable std::vector<std::uint8_t> parity_;  // relative to parent_
  std::vector<std::uint32_t> size_;
  std::vector<std::array<std::vector<VertexId>, 2>> members_;  // valid at roots
  std::vector<std::uint8_t> bipartite_;
  std::size_t components_ = 0;
};

// Applies one arrival to graph and tracker; returns the component count
// after the step. The new vertex is unioned with each pre-neighbor's
// component on the opposite side.
inline std::size_t add_vertex(OnlineGraph& graph, ComponentTracker& tracker,
                              PresentationStep step) {
  const VertexId v = graph.add_step(std::move(step));
  const VertexId tv = tracker.add_vertex();
  if (tv != v) throw std::logic_error("graph and tracker out of sync");
  for (VertexId u : graph.pre_neighbors(v)) tracker.add_edge(u, v);
  return tracker.component_count();
}

inline ComponentSides component_sides(const ComponentTracker& tracker, VertexId v) {
  return tracker.sides(v);
}

}  // namespace kcb
