#pragma once

#include <optional>
#include <set>
#include <sstream>

#include "kcb/verify.hpp"

namespace kcb {

// Structural class of a CBIP-colored bipartite component: side A carries
// bins [ell-2] (kind 1) or [ell-2] + {ell} (kind 2), side B carries bins
// [ell-1]. An isolated vertex binned 1 is kind 1 with ell = 2.
struct ComponentType {
  int kind = 0;  // 1 or 2
  int ell = 0;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;

  bool same_shape(const ComponentType& other) const {
    return kind == other.kind && ell == other.ell;
  }
  std::string label() const {
    return std::to_string(kind) + "[" + std::to_string(ell) + "]";
  }
};

namespace detail {

inline std::set<Bin> bin_set(const std::vector<VertexId>& vertices,
                             const std::vector<Bin>& bins) {
  std::set<Bin> out;
  for (VertexId v : vertices) out.insert(bins.at(v));
  return out;
}

inline std::set<Bin> prefix_set(int upto) {
  std::set<Bin> out;
  for (Bin b = 1; b <= upto; ++b) out.insert(b);
  return out;
}

// Returns (kind, ell) if (a, b) matches a type pattern with A = a, B = b.
inline std::optional<std::pair<int, int>> match_sides(const std::set<Bin>& a,
                                                      const std::set<Bin>& b) {
  // B must be exactly [ell-1].
  const int ell = static_cast<int>(b.size()) + 1;
  if (ell < 2 || b != prefix_set(ell - 1)) return std::nullopt;
  if (a == prefix_set(ell - 2)) return std::make_pair(1, ell);
  std::set<Bin> with_top = prefix_set(ell - 2);
  with_top.insert(ell);
  if (a == with_top) return std::make_pair(2, ell);
  return std::nullopt;
}

}  // namespace detail

// Classifies one bipartite component given its two blocks; returns nullopt
// when neither orientation matches a type pattern.
inline std::optional<ComponentType> classify_component(const std::vector<VertexId>& x,
                                                       const std::vector<VertexId>& y,
                                                       const std::vector<Bin>& bins) {
  const std::set<Bin> sx = detail::bin_set(x, bins);
  const std::set<Bin> sy = detail::bin_set(y, bins);
  std::optional<ComponentType> best;
  auto consider = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                      const std::set<Bin>& sa, const std::set<Bin>& sb) {
    if (auto match = detail::match_sides(sa, sb)) {
      ComponentType candidate{match->first, match->second, a, b};
      if (!best || candidate.ell < best->ell ||
          (candidate.ell == best->ell && candidate.kind > best->kind)) {
        best = std::move(candidate);
      }
    }
  };
  consider(x, y, sx, sy);
  consider(y, x, sy, sx);
  return best;
}

struct Classification {
  enum class Status { ok, non_bipartite, untypeable };
  Status status = Status::ok;
  std::vector<ComponentType> components;
  VertexId offending = 0;  // a vertex of the failing component

  bool ok() const { return status == Status::ok; }
};

// Classifies every connected component of the graph from scratch (BFS
// bipartition, independent of any incremental tracking).
inline Classification classify_components(const OnlineGraph& graph,
                                          const std::vector<Bin>& bins) {
  const std::size_t n = graph.vertex_count();
  Classification result;
  std::vector<int> side(n, -1);
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    std::vector<VertexId> blocks[2];
    side[start] = 0;
    blocks[0].push_back(start);
    queue.clear();
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      for (VertexId y : graph.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = side[x] ^ 1;
          blocks[side[y]].push_back(y);
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return {Classification::Status::non_bipartite, {}, x};
        }
      }
    }
    auto type = classify_component(blocks[0], blocks[1], bins);
    if (!type) return {Classification::Status::untypeable, {}, start};
    result.components.push_back(std::move(*type));
  }
  return result;
}

// One arrival event against the type tables: the pre-existing components the
// vertex touched (with the side holding its neighbors), the bin the colorer
// assigned, and the resulting component's type.
struct TouchedComponent {
  ComponentType type;
  bool neighbors_on_a = false;
};

struct TransitionCheck {
  bool ok = true;
  std::string detail;
};

namespace detail {

inline std::set<Bin> type_side_bins(const ComponentType& t, bool side_a) {
  if (side_a) {
    std::set<Bin> a = prefix_set(t.ell - 2);
    if (t.kind == 2) a.insert(t.ell);
    return a;
  }
  return prefix_set(t.ell - 1);
}

enum class BlockShape { below_twice, below_once, below_twice_plus_top, full };

inline std::optional<BlockShape> shape_of(const std::set<Bin>& s, int m) {
  if (s == prefix_set(m - 2)) return BlockShape::below_twice;
  if (s == prefix_set(m - 1)) return BlockShape::below_once;
  if (s == prefix_set(m)) return BlockShape::full;
  std::set<Bin> with_top = prefix_set(m - 2);
  with_top.insert(m);
  if (s == with_top) return BlockShape::below_twice_plus_top;
  return std::nullopt;
}

}  // namespace detail

// Outcome of a merge event given the bin sets opposite to and on the side of
// the arriving vertex, with m the largest ell among the merged components.
struct MergeOutcome {
  enum class Status { ok, impossible, non_canonical };
  Status status = Status::non_canonical;
  Bin bin = 0;
  int kind = 0;
  int ell = 0;
};

inline MergeOutcome merge_outcome(const std::set<Bin>& opposite_bins,
                                  const std::set<Bin>& same_bins, int m) {
  using S = detail::BlockShape;
  const auto opposite = detail::shape_of(opposite_bins, m);
  const auto same = detail::shape_of(same_bins, m);
  if (!opposite || !same) return {};
  auto ok = [m](int bin_offset, int kind, int ell_offset) {
    return MergeOutcome{MergeOutcome::Status::ok, m + bin_offset, kind, m + ell_offset};
  };
  const MergeOutcome impossible{MergeOutcome::Status::impossible, 0, 0, 0};
  switch (*opposite) {
    case S::below_twice:
      if (*same == S::below_twice || *same == S::below_once) return ok(-1, 1, 0);
      return impossible;
    case S::below_once:
      if (*same == S::below_twice || *same == S::below_twice_plus_top) return ok(0, 2, 0);
      return ok(0, 1, 1);  // same side holds [m-1] or [m]
    case S::below_twice_plus_top:
      if (*same == S::below_once) return ok(-1, 2, 0);
      return impossible;
    case S::full:
      if (*same == S::below_once) return ok(1, 2, 1);
      if (*same == S::full) return ok(1, 1, 2);
      return impossible;
  }
  return {};
}

// Validates one arrival against the type-transition tables. An empty
// `touched` list means an isolated arrival (must become kind 1, ell 2 with
// bin 1); one touched component follows the attach table; two or more follow
// the merge table, including its impossible rows.
inline TransitionCheck check_type_transition(const std::vector<TouchedComponent>& touched,
                                             Bin assigned, const ComponentType& result) {
  auto fail = [](std::string detail) { return TransitionCheck{false, std::move(detail)}; };
  auto expect = [&](Bin bin, int kind, int ell) -> TransitionCheck {
    if (assigned != bin) {
      return {false, "expected bin " + std::to_string(bin) + ", saw " + std::to_string(assigned)};
    }
    if (result.kind != kind || result.ell != ell) {
      return {false, "expected type " + std::to_string(kind) + "[" + std::to_string(ell) +
                         "], saw " + result.label()};
    }
    return {};
  };

  if (touched.empty()) return expect(1, 1, 2);

  if (touched.size() == 1) {
    const auto& t = touched.front();
    const int ell = t.type.ell;
    if (t.neighbors_on_a) {
      // Bin comes from the A side; the component keeps its type.
      const Bin bin = (t.type.kind == 1) ? ell - 1 : ell - 1;
      return expect(bin, t.type.kind, ell);
    }
    // Neighbors on B: the new vertex lands on A with bin ell.
    return expect(ell, 2, ell);
  }

  int m = 0;
  for (const auto& t : touched) m = std::max(m, t.type.ell);
  std::set<Bin> opposite_bins, same_bins;
  for (const auto& t : touched) {
    const auto hit = detail::type_side_bins(t.type, t.neighbors_on_a);
    const auto other = detail::type_side_bins(t.type, !t.neighbors_on_a);
    opposite_bins.insert(hit.begin(), hit.end());
    same_bins.insert(other.begin(), other.end());
  }
  const MergeOutcome outcome = merge_outcome(opposite_bins, same_bins, m);
  switch (outcome.status) {
    case MergeOutcome::Status::non_canonical:
      return fail("merged side bins do not form a canonical block");
    case MergeOutcome::Status::impossible:
      return fail("merge matches an impossible table row");
    case MergeOutcome::Status::ok:
      break;
  }
  return expect(outcome.bin, outcome.kind, outcome.ell);
}

// Streams a CBIP run one arrival at a time and validates the component-type
// structure after every step: each component classifies, each arrival
// matches the transition tables, the type parameter never jumps, and under
// a kappa-bounded presentation every ell stays at most 2*kappa with at most
// one component at 2*kappa-1 or above.
class TypeReplay {
 public:
  explicit TypeReplay(int kappa) : kappa_(kappa) {}

  // Returns a violation message for the first failed check, nullopt while
  // the structure is clean.
  std::optional<std::string> advance(const PresentationStep& step, Bin bin) {
    const VertexId v = step.vertex;
    bins_.push_back(bin);

    std::vector<TouchedComponent> touched;
    std::vector<VertexId> touched_roots;
    for (VertexId u : step.pre_neighborhood) {
      const VertexId root = tracker_.root_of(u);
      if (std::find(touched_roots.begin(), touched_roots.end(), root) != touched_roots.end()) {
        continue;
      }
      touched_roots.push_back(root);
      const ComponentType& type = types_.at(root);
      const bool on_a = std::binary_search(type.side_a.begin(), type.side_a.end(), u);
      touched.push_back({type, on_a});
    }
    // Every neighbor inside one component must sit on the same block.
    for (VertexId u : step.pre_neighborhood) {
      const VertexId root = tracker_.root_of(u);
      for (std::size_t i = 0; i < touched_roots.size(); ++i) {
        if (touched_roots[i] != root) continue;
        const auto& type = touched[i].type;
        const bool on_a = std::binary_search(type.side_a.begin(), type.side_a.end(), u);
        if (on_a != touched[i].neighbors_on_a) {
          return "arrival " + std::to_string(v + 1) + " touches both blocks of one component";
        }
      }
    }

    try {
      add_vertex(graph_, tracker_, step);
    } catch (const std::exception& error) {
      return std::string("arrival rejected: ") + error.what();
    }
    if (!tracker_.bipartite(v)) {
      return "arrival " + std::to_string(v + 1) + " closes an odd cycle";
    }

    ComponentSides sides = tracker_.sides(v);
    auto merged = classify_component(sides.same_side, sides.opposite_side, bins_);
    if (!merged) {
      return "component of arrival " + std::to_string(v + 1) + " is untypeable";
    }
    std::sort(merged->side_a.begin(), merged->side_a.end());
    std::sort(merged->side_b.begin(), merged->side_b.end());

    const TransitionCheck transition = check_type_transition(touched, bin, *merged);
    if (!transition.ok) {
      return "arrival " + std::to_string(v + 1) + ": " + transition.detail;
    }
    if (!touched.empty()) {
      int before = 0;
      for (const auto& t : touched) before = std::max(before, t.type.ell);
      if (merged->ell > before) {
        if (merged->ell > before + 2) {
          return "type parameter jumped by more than 2 at arrival " + std::to_string(v + 1);
        }
        int high = 0;
        for (const auto& t : touched) {
          if (t.type.ell >= before - 1) ++high;
        }
        if (high < 2) {
          return "type parameter grew without two near-maximal components at arrival " +
                 std::to_string(v + 1);
        }
      }
    }

    for (VertexId root : touched_roots) types_.erase(root);
    const int ell = merged->ell;
    types_[tracker_.root_of(v)] = std::move(*merged);

    if (ell > 2 * kappa_) {
      return "ell " + std::to_string(ell) + " exceeds 2*kappa at arrival " + std::to_string(v + 1);
    }
    int near_top = 0;
    for (const auto& [root, type] : types_) {
      if (type.ell >= 2 * kappa_ - 1) ++near_top;
    }
    if (near_top > 1) {
      return "two components reached ell >= 2*kappa-1 by arrival " + std::to_string(v + 1);
    }
    return std::nullopt;
  }

  const std::map<VertexId, ComponentType>& component_types() const { return types_; }
  std::size_t component_count() const { return tracker_.component_count(); }

 private:
  int kappa_;
  OnlineGraph graph_;
  ComponentTracker tracker_;
  std::vector<Bin> bins_;
  std::map<VertexId, ComponentType> types_;  // keyed by current root
};

}  // namespace kcb
