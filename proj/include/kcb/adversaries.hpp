#pragma once

#include <deque>

#include "kcb/adversary.hpp"

namespace kcb {

// Presents K_n in arrival order inside a single connected component; the
// adversary colors every vertex distinctly.
class CliqueAdversary final : public ScriptedStrategy {
 public:
  explicit CliqueAdversary(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("clique: n must be >= 1");
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
      std::vector<VertexId> pre(v);
      for (VertexId u = 0; u < v; ++u) pre[u] = u;
      moves_.push_back({make_step(v, std::move(pre)), static_cast<AdversaryColor>(v + 1)});
    }
  }

  std::string name() const override { return "clique"; }
  int declared_kappa() const override { return 1; }
  int declared_chi() const override { return n_; }

 private:
  int n_;
};

// Bipartite family that drives FirstFit to n/2 bins with two components:
// odd-indexed vertex 2k-1 is matched against every even-indexed vertex 2k'
// with k' != k. Presented v1..vn; odd arrivals attach to earlier evens and
// vice versa.
class FfBipartiteAdversary final : public ScriptedStrategy {
 public:
  explicit FfBipartiteAdversary(int n) : n_(n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("ff-bipartite: n must be even and >= 2");
    for (int i = 1; i <= n; ++i) {
      std::vector<VertexId> pre;
      const int k = (i + 1) / 2;
      if (i % 2 == 1) {
        for (int kp = 1; kp < k; ++kp) pre.push_back(static_cast<VertexId>(2 * kp - 1));
      } else {
        for (int kp = 1; kp < k; ++kp) pre.push_back(static_cast<VertexId>(2 * kp - 2));
      }
      const AdversaryColor color = (i % 2 == 1) ? 1 : 2;
      moves_.push_back({make_step(static_cast<VertexId>(i - 1), std::move(pre)), color});
    }
  }

  std::string name() const override { return "ff-bipartite"; }
  int declared_kappa() const override { return 2; }
  int declared_chi() const override { return 2; }

 private:
  int n_;
};

// 3-colorable, single-component family that saturates one new FirstFit bin
// per round: a 6-path opening (rounds 1-2), then per round k the three
// vertices 3k-2, 3k-1, 3k attached across the previous rounds' residue
// classes. Colors follow the index mod 3.
class FfThreeColorAdversary final : public ScriptedStrategy {
 public:
  explicit FfThreeColorAdversary(int rounds) : rounds_(rounds) {
    if (rounds < 2) throw std::invalid_argument("ff-3col: rounds must be >= 2");
    const int n = 3 * rounds;
    for (int i = 1; i <= n; ++i) {
      std::vector<VertexId> pre;
      if (i <= 6) {
        if (i >= 2) pre.push_back(static_cast<VertexId>(i - 2));
      } else {
        const int k = (i + 2) / 3;
        if (i == 3 * k - 2) {
          for (int kp = 1; kp < k; ++kp) pre.push_back(static_cast<VertexId>(3 * kp - 2));
        } else if (i == 3 * k - 1) {
          for (int kp = 1; kp < k; ++kp) pre.push_back(static_cast<VertexId>(3 * kp - 1));
        } else {
          for (int kp = 1; kp < k; ++kp) pre.push_back(static_cast<VertexId>(3 * kp - 3));
        }
      }
      const AdversaryColor color = ((i - 1) % 3) + 1;
      moves_.push_back({make_step(static_cast<VertexId>(i - 1), std::move(pre)), color});
    }
  }

  std::string name() const override { return "ff-3col"; }
  int declared_kappa() const override { return 1; }
  int declared_chi() const override { return 3; }
  int rounds() const { return rounds_; }

 private:
  int rounds_;
};

// Recursive two-component tree gadget driving CBIP one bin further per
// level: level 1 is a vertex, level 2 an edge rooted at its second vertex,
// and level i joins fresh level i-1 and i-2 trees under a new root adjacent
// to both of their roots. Colors are by depth parity in the final tree.
class CbipTreeAdversary final : public ScriptedStrategy {
 public:
  struct Subtree {
    int level = 0;
    VertexId root = 0;
    std::vector<VertexId> vertices;
  };

  explicit CbipTreeAdversary(int kappa) : CbipTreeAdversary(2 * kappa, Tag{}) {
    if (kappa < 1) throw std::invalid_argument("cbip-tree: kappa must be >= 1");
  }

  static CbipTreeAdversary for_level(int level) { return CbipTreeAdversary(level, Tag{}); }

  std::string name() const override { return "cbip-tree"; }
  int declared_kappa() const override { return (level_ + 1) / 2; }
  int declared_chi() const override { return 2; }

  int level() const { return level_; }
  // Every recursive tree instance, in completion order; the last entry is
  // the full construction.
  const std::vector<Subtree>& subtrees() const { return subtrees_; }

 private:
  struct Tag {};

  CbipTreeAdversary(int level, Tag) : level_(level) {
    if (level < 1) throw std::invalid_argument("cbip-tree: level must be >= 1");
    const std::size_t top = build(level);
    assign_depth_colors(subtrees_[top].root);
  }

  VertexId emit(std::vector<VertexId> pre) {
    const VertexId v = static_cast<VertexId>(moves_.size());
    adjacency_.emplace_back(pre);
    for (VertexId u : pre) adjacency_[u].push_back(v);
    moves_.push_back({make_step(v, std::move(pre)), std::nullopt});
    return v;
  }

  std::size_t build(int level) {
    Subtree tree;
    tree.level = level;
    if (level == 1) {
      tree.root = emit({});
      tree.vertices = {tree.root};
    } else if (level == 2) {
      const VertexId a = emit({});
      tree.root = emit({a});
      tree.vertices = {a, tree.root};
    } else {
      const std::size_t left = build(level - 1);
      const std::size_t right = build(level - 2);
      tree.root = emit({subtrees_[left].root, subtrees_[right].root});
      tree.vertices = subtrees_[left].vertices;
      tree.vertices.insert(tree.vertices.end(), subtrees_[right].vertices.begin(),
                           subtrees_[right].vertices.end());
      tree.vertices.push_back(tree.root);
    }
    subtrees_.push_back(std::move(tree));
    return subtrees_.size() - 1;
  }

  void assign_depth_colors(VertexId root) {
    std::vector<int> depth(moves_.size(), -1);
    std::deque<VertexId> queue{root};
    depth[root] = 0;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : adjacency_[x]) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (std::size_t v = 0; v < moves_.size(); ++v) {
      moves_[v].color = (depth[v] % 2 == 0) ? 1 : 2;
    }
  }

  int level_;
  std::vector<Subtree> subtrees_;
  std::vector<std::vector<VertexId>> adjacency_;
};

// Recursive forest gadget: builds kappa trees whose representatives carry
// bins 1..kappa, then merges them under one final vertex, forcing FirstFit
// to open bin kappa+1. Representatives are picked from the observed bins
// (lowest id wins; lowest-id member as fallback when the opponent is not
// FirstFit), so the strategy is closed-loop. The 2-coloring is produced at
// termination.
class ForestAdversary final : public AdversaryStrategy {
 public:
  explicit ForestAdversary(int kappa) : kappa_(kappa) {
    if (kappa < 1) throw std::invalid_argument("forest: kappa must be >= 1");
    auto slots = plan(kappa);
    plan_.push_back({std::move(slots), next_tree_id_++});
    tree_members_.resize(next_tree_id_);
  }

  std::optional<AdversaryMove> next_move() override {
    if (awaiting_observation_) throw std::logic_error("forest: bin not yet observed");
    if (action_cursor_ >= plan_.size()) return std::nullopt;
    const Action& action = plan_[action_cursor_++];
    const VertexId v = next_id_++;
    std::vector<VertexId> pre;
    if (!action.sources.empty()) {
      pre.reserve(action.sources.size());
      for (std::size_t slot = 0; slot < action.sources.size(); ++slot) {
        pre.push_back(representative(action.sources[slot], static_cast<Bin>(slot + 1)));
      }
      std::sort(pre.begin(), pre.end());
      for (int src : action.sources) {
        auto& members = tree_members_[src];
        auto& into = tree_members_[action.result];
        into.insert(into.end(), members.begin(), members.end());
        members.clear();
      }
    }
    adjacency_.emplace_back(pre);
    for (VertexId u : pre) adjacency_[u].push_back(v);
    tree_members_[action.result].push_back(v);
    awaiting_observation_ = true;
    return AdversaryMove{make_step(v, std::move(pre)), std::nullopt};
  }

  void observe_bin(VertexId vertex, Bin bin) override {
    if (vertex != observed_.size()) throw std::logic_error("forest: observation out of order");
    observed_.push_back(bin);
    awaiting_observation_ = false;
  }

  std::string name() const override { return "forest"; }
  int declared_kappa() const override { return kappa_; }
  int declared_chi() const override { return 2; }
  bool defers_colors() const override { return true; }

  std::vector<AdversaryColor> final_colors() const override {
    std::vector<AdversaryColor> colors(adjacency_.size(), 0);
    for (VertexId start = 0; start < adjacency_.size(); ++start) {
      if (colors[start] != 0) continue;
      colors[start] = 1;
      std::deque<VertexId> queue{start};
      while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : adjacency_[x]) {
          if (colors[y] == 0) {
            colors[y] = 3 - colors[x];
            queue.push_back(y);
          }
        }
      }
    }
    return colors;
  }

 private:
  struct Action {
    std::vector<int> sources;  // ordered tree slots; empty => isolated vertex
    int result;                // tree id holding the new vertex
  };

  // Slot i of the returned list is a tree that will contain a bin-i vertex.
  std::vector<int> plan(int k) {
    if (k == 1) {
      const int tree = next_tree_id_++;
      plan_.push_back({{}, tree});
      return {tree};
    }
    auto first = plan(k - 1);
    const int merged = next_tree_id_++;
    plan_.push_back({std::move(first), merged});
    auto second = plan(k - 1);
    second.push_back(merged);
    return second;
  }

  VertexId representative(int tree, Bin wanted) const {
    const auto& members = tree_members_[tree];
    VertexId fallback = members.front();
    VertexId best = fallback;
    bool found = false;
    for (VertexId v : members) {
      if (observed_[v] == wanted && (!found || v < best)) {
        best = v;
        found = true;
      }
      if (v < fallback) fallback = v;
    }
    return found ? best : fallback;
  }

  int kappa_;
  int next_tree_id_ = 0;
  std::vector<Action> plan_;
  std::size_t action_cursor_ = 0;
  std::vector<std::vector<VertexId>> tree_members_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Bin> observed_;
  VertexId next_id_ = 0;
  bool awaiting_observation_ = false;
};

}  // namespace kcb
