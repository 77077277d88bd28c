#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcb {

// Dense arrival index: the vertex presented at time i+1 has id i.
using VertexId = std::uint32_t;

// Raised when a structural precondition is violated at runtime, e.g. a
// bipartite-only query hitting an odd-cycle component.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One arrival in the vertex-arrival model: the new vertex together with its
// edges to already-presented vertices.
struct PresentationStep {
  VertexId vertex = 0;
  std::vector<VertexId> pre_neighborhood;

  bool operator==(const PresentationStep&) const = default;
};

inline PresentationStep make_step(VertexId vertex, std::vector<VertexId> pre = {}) {
  return PresentationStep{vertex, std::move(pre)};
}

// The growing graph: presentation order plus the undirected closure of all
// pre-neighborhoods. Simple by construction (ids in a pre-neighborhood are
// unique and strictly smaller than the arriving vertex).
class OnlineGraph {
 public:
  VertexId add_step(PresentationStep step) {
    const VertexId v = step.vertex;
    if (v != steps_.size()) {
      throw std::invalid_argument("step vertex id " + std::to_string(v) +
                                  " does not match next arrival index " +
                                  std::to_string(steps_.size()));
    }
    auto& pre = step.pre_neighborhood;
    std::sort(pre.begin(), pre.end());
    if (std::adjacent_find(pre.begin(), pre.end()) != pre.end()) {
      throw std::invalid_argument("duplicate pre-neighbor in step " + std::to_string(v));
    }
    if (!pre.empty() && pre.back() >= v) {
      throw std::invalid_argument("pre-neighbor of vertex " + std::to_string(v) +
                                  " has not been presented yet");
    }
    adjacency_.emplace_back(pre);
    for (VertexId u : pre) adjacency_[u].push_back(v);
    edge_count_ += pre.size();
    steps_.push_back(std::move(step));
    return v;
  }

  std::size_t vertex_count() const { return steps_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  const std::vector<VertexId>& pre_neighbors(VertexId v) const {
    return steps_.at(v).pre_neighborhood;
  }
  const std::vector<PresentationStep>& steps() const { return steps_; }

  bool has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    const auto& pre = steps_.at(v).pre_neighborhood;
    return std::binary_search(pre.begin(), pre.end(), u);
  }

 private:
  std::vector<PresentationStep> steps_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace kcb
