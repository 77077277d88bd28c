#pragma once

#include <map>
#include <set>

#include "kcb/adversary.hpp"

namespace kcb {

// Layered adversary that forces any online colorer to t distinct bins on a
// 3-colorable, single-component input. Layer 1 is a long path; from the two
// most-populous path bins it extracts non-adjacent reservoirs, and each
// later layer spends one reservoir vertex per established bin to pin the
// arriving vertex to a fresh bin. Stops as soon as t distinct bins have been
// observed. With cycle_guard = k, reservoir picks keep pairwise path
// distance > k so every cycle in the result is longer than k.
class LayeredAdversary final : public AdversaryStrategy {
 public:
  explicit LayeredAdversary(int target_bins, std::optional<int> cycle_guard = std::nullopt)
      : t_(target_bins), cycle_guard_(cycle_guard) {
    if (target_bins < 3) throw std::invalid_argument("universal: t must be >= 3");
    if (cycle_guard && *cycle_guard < 3) {
      throw std::invalid_argument("universal: cycle guard must be >= 3");
    }
    ell_ = layer_budgets(t_);
    radius_ = cycle_guard ? *cycle_guard : 1;
    path_len_ = ell_[1] * (cycle_guard ? (*cycle_guard + 1) : 1);
    reservoir_target_ = ell_[1] / (10 * t_);

    // The layer system must be self-financing: every reservoir outlives the
    // consumption of all layers above it.
    long long upper = 0;
    for (int i = t_ - 1; i >= 2; --i) {
      upper += ell_[i];
      const long long supply = (i == 2) ? reservoir_target_ : ell_[i - 1] / t_;
      if (supply < upper) throw std::logic_error("universal: layer budgets infeasible");
    }

    reservoirs_.resize(static_cast<std::size_t>(t_));
    layer_members_.resize(static_cast<std::size_t>(t_));
  }

  static std::vector<long long> layer_budgets(int t) {
    std::vector<long long> ell(static_cast<std::size_t>(t), 0);
    ell[t - 1] = 1;
    for (int i = 2; i <= t - 2; ++i) {
      long long value = t;
      for (int p = 0; p < t - i - 2; ++p) value *= t + 1;
      ell[i] = value;
    }
    long long first = 10LL * t;
    for (int p = 0; p < t - 3; ++p) first *= t + 1;
    ell[1] = first;
    return ell;
  }

  std::optional<AdversaryMove> next_move() override {
    if (awaiting_observation_) throw std::logic_error("universal: bin not yet observed");
    if (done_) return std::nullopt;
    if (next_id_ < path_len_) return emit_path_vertex();
    if (!extracted_) extract_reservoirs();
    if (layer_ > t_ - 1) {
      throw std::logic_error("universal: layers exhausted without forcing t bins");
    }
    return emit_layer_vertex();
  }

  void observe_bin(VertexId vertex, Bin bin) override {
    if (vertex != observed_.size()) throw std::logic_error("universal: observation out of order");
    observed_.push_back(bin);
    distinct_bins_.insert(bin);
    awaiting_observation_ = false;
    if (static_cast<int>(distinct_bins_.size()) >= t_) {
      done_ = true;
      return;
    }
    if (extracted_ && layer_ <= t_ - 1 && layer_emitted_ == ell_[layer_]) finish_layer();
  }

  std::string name() const override { return "universal"; }
  int declared_kappa() const override { return 1; }
  int declared_chi() const override { return 3; }
  bool defers_colors() const override { return true; }

  // 2-colors the parent forest, then extends greedily; three colors always
  // suffice because unconsumed vertices have at most two colored neighbors
  // when processed.
  std::vector<AdversaryColor> final_colors() const override {
    const std::size_t n = next_id_;
    std::vector<AdversaryColor> colors(n, 0);
    for (VertexId start = 0; start < n; ++start) {
      if (parent_[start] < 0 || colors[start] != 0) continue;
      colors[start] = 1;
      std::vector<VertexId> stack{start};
      while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        auto visit = [&](VertexId y) {
          if (colors[y] == 0) {
            colors[y] = 3 - colors[x];
            stack.push_back(y);
          }
        };
        for (VertexId c : children_[x]) visit(c);
        if (parent_[x] >= 0 && parent_[static_cast<VertexId>(parent_[x])] >= 0) {
          visit(static_cast<VertexId>(parent_[x]));
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      if (parent_[v] >= 0) continue;
      bool blocked[4] = {false, false, false, false};
      for (VertexId u : adjacency_[v]) {
        if (colors[u] >= 1 && colors[u] <= 3) blocked[colors[u]] = true;
      }
      AdversaryColor pick = 0;
      for (AdversaryColor c = 1; c <= 3; ++c) {
        if (!blocked[c]) {
          pick = c;
          break;
        }
      }
      if (pick == 0) throw std::logic_error("universal: greedy extension needs a fourth color");
      colors[v] = pick;
    }
    return colors;
  }

  int target_bins() const { return t_; }
  std::optional<int> cycle_guard() const { return cycle_guard_; }
  long long path_length() const { return path_len_; }
  long long reservoir_target() const { return reservoir_target_; }
  const std::vector<long long>& budgets() const { return ell_; }
  // -1 for vertices never consumed by a later layer.
  const std::vector<long long>& parents() const { return parent_; }

 private:
  AdversaryMove emit_path_vertex() {
    const VertexId v = next_id_++;
    std::vector<VertexId> pre;
    if (v > 0) pre.push_back(v - 1);
    register_vertex(v, pre);
    awaiting_observation_ = true;
    return {make_step(v, std::move(pre)), std::nullopt};
  }

  AdversaryMove emit_layer_vertex() {
    std::vector<VertexId> pre;
    pre.reserve(static_cast<std::size_t>(layer_));
    for (int j = 1; j <= layer_; ++j) {
      auto& reservoir = reservoirs_[j];
      if (reservoir.empty()) throw std::logic_error("universal: reservoir underflow");
      pre.push_back(reservoir.front());
      reservoir.pop_front();
    }
    std::sort(pre.begin(), pre.end());
    const VertexId v = next_id_++;
    register_vertex(v, pre);
    for (VertexId u : pre) {
      parent_[u] = static_cast<long long>(v);
      children_[v].push_back(u);
    }
    layer_members_[layer_].push_back(v);
    ++layer_emitted_;
    awaiting_observation_ = true;
    return {make_step(v, std::move(pre)), std::nullopt};
  }

  void register_vertex(VertexId v, const std::vector<VertexId>& pre) {
    adjacency_.emplace_back(pre);
    for (VertexId u : pre) adjacency_[u].push_back(v);
    parent_.push_back(-1);
    children_.emplace_back();
  }

  // Picks the two most-populous path bins (lowest index on ties) and draws
  // alternating non-adjacent representatives until both reservoirs hold
  // reservoir_target_ vertices. Every pick evicts all path positions within
  // radius_ from both pools.
  void extract_reservoirs() {
    std::map<Bin, long long> counts;
    for (VertexId v = 0; v < path_len_; ++v) counts[observed_[v]] += 1;
    Bin b1 = 0, b2 = 0;
    long long c1 = -1, c2 = -1;
    for (const auto& [bin, count] : counts) {
      if (count > c1) {
        b2 = b1;
        c2 = c1;
        b1 = bin;
        c1 = count;
      } else if (count > c2) {
        b2 = bin;
        c2 = count;
      }
    }
    if (c2 <= 0) throw std::logic_error("universal: path colored with a single bin");

    std::set<VertexId> pools[2];
    for (VertexId v = 0; v < path_len_; ++v) {
      if (observed_[v] == b1) pools[0].insert(v);
      if (observed_[v] == b2) pools[1].insert(v);
    }
    auto evict_near = [&](VertexId x) {
      const VertexId low = x > static_cast<VertexId>(radius_) ? x - radius_ : 0;
      const VertexId high = x + radius_;
      for (auto& pool : pools) {
        auto it = pool.lower_bound(low);
        while (it != pool.end() && *it <= high) it = pool.erase(it);
      }
    };
    for (long long round = 0; round < reservoir_target_; ++round) {
      for (int side = 0; side < 2; ++side) {
        if (pools[side].empty()) throw std::logic_error("universal: reservoir underflow");
        const VertexId pick = *pools[side].begin();
        pools[side].erase(pools[side].begin());
        evict_near(pick);
        reservoirs_[side + 1].push_back(pick);
      }
    }
    extracted_ = true;
    layer_ = 2;
    layer_emitted_ = 0;
  }

  void finish_layer() {
    if (layer_ < t_ - 1) {
      std::map<Bin, long long> counts;
      for (VertexId v : layer_members_[layer_]) counts[observed_[v]] += 1;
      Bin best = 0;
      long long best_count = -1;
      for (const auto& [bin, count] : counts) {
        if (count > best_count) {
          best = bin;
          best_count = count;
        }
      }
      const long long need = ell_[layer_] / t_;
      auto& reservoir = reservoirs_[layer_ + 1];
      for (VertexId v : layer_members_[layer_]) {
        if (static_cast<long long>(reservoir.size()) == need) break;
        if (observed_[v] == best) reservoir.push_back(v);
      }
      if (static_cast<long long>(reservoir.size()) < need) {
        throw std::logic_error("universal: layer did not fill its reservoir");
      }
    }
    ++layer_;
    layer_emitted_ = 0;
  }

  int t_;
  std::optional<int> cycle_guard_;
  int radius_ = 1;
  long long path_len_ = 0;
  long long reservoir_target_ = 0;
  std::vector<long long> ell_;

  bool extracted_ = false;
  bool done_ = false;
  bool awaiting_observation_ = false;
  int layer_ = 2;
  long long layer_emitted_ = 0;
  VertexId next_id_ = 0;
  std::vector<Bin> observed_;
  std::set<Bin> distinct_bins_;
  std::vector<std::deque<VertexId>> reservoirs_;       // index j holds bin b_j's stock
  std::vector<std::vector<VertexId>> layer_members_;   // by layer index
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<long long> parent_;                      // -1 = never consumed
  std::vector<std::vector<VertexId>> children_;
};

}  // namespace kcb
