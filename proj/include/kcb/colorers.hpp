#pragma once

#include <memory>
#include <random>
#include <string>

#include "kcb/component_tracker.hpp"

namespace kcb {

// 1-based label assigned by an online algorithm ("bin", as opposed to the
// adversary's "color").
using Bin = int;

// Smallest positive integer absent from `used`; `used` may be modified.
inline Bin first_absent_bin(std::vector<Bin>& used) {
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  Bin candidate = 1;
  for (Bin b : used) {
    if (b != candidate) break;
    ++candidate;
  }
  return candidate;
}

// Online coloring contract: a deterministic decision per arrival, seeing
// only the steps revealed so far and its own previous bins.
class OnlineColorer {
 public:
  virtual ~OnlineColorer() = default;

  Bin place(const PresentationStep& step) {
    if (step.vertex != bins_.size()) {
      throw std::invalid_argument("colorer fed out-of-order step");
    }
    const Bin b = decide(step);
    bins_.push_back(b);
    max_bin_ = std::max(max_bin_, b);
    return b;
  }

  const std::vector<Bin>& bins() const { return bins_; }
  Bin bin_of(VertexId v) const { return bins_.at(v); }
  Bin max_bin() const { return max_bin_; }
  std::size_t placed() const { return bins_.size(); }

  virtual std::string name() const = 0;

 protected:
  virtual Bin decide(const PresentationStep& step) = 0;

  std::vector<Bin> pre_neighborhood_bins(const PresentationStep& step) const {
    std::vector<Bin> used;
    used.reserve(step.pre_neighborhood.size());
    for (VertexId u : step.pre_neighborhood) used.push_back(bins_.at(u));
    return used;
  }

 private:
  std::vector<Bin> bins_;
  Bin max_bin_ = 0;
};

// Greedy: the least bin absent from the pre-neighborhood.
class FirstFitColorer final : public OnlineColorer {
 public:
  std::string name() const override { return "firstfit"; }

 protected:
  Bin decide(const PresentationStep& step) override {
    auto used = pre_neighborhood_bins(step);
    return first_absent_bin(used);
  }
};

// Bipartite-only: 2-partitions the arriving vertex's connected component
// (after the merge) and picks the least bin absent from the opposite side.
class CbipColorer final : public OnlineColorer {
 public:
  std::string name() const override { return "cbip"; }

 protected:
  Bin decide(const PresentationStep& step) override {
    const VertexId v = tracker_.add_vertex();
    for (VertexId u : step.pre_neighborhood) tracker_.add_edge(u, v);
    if (!tracker_.bipartite(v)) {
      throw ContractViolation("CBIP requires bipartite input; vertex " +
                              std::to_string(v) + " closes an odd cycle");
    }
    const ComponentSides sides = tracker_.sides(v);
    std::vector<Bin> used;
    used.reserve(sides.opposite_side.size());
    for (VertexId u : sides.opposite_side) used.push_back(bin_of(u));
    return first_absent_bin(used);
  }

 private:
  ComponentTracker tracker_;
};

// Seeded reference colorer: picks a uniformly pseudo-random proper bin among
// 1..max_bin+1, deterministically for a fixed seed. Gives adaptive
// adversaries an opponent with no structure they can anticipate.
class SeededColorer final : public OnlineColorer {
 public:
  explicit SeededColorer(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  std::string name() const override { return "baseline"; }
  std::uint64_t seed() const { return seed_; }

 protected:
  Bin decide(const PresentationStep& step) override {
    std::vector<char> blocked(static_cast<std::size_t>(max_bin()) + 2, 0);
    for (VertexId u : step.pre_neighborhood) blocked[bin_of(u)] = 1;
    std::vector<Bin> candidates;
    for (Bin b = 1; b <= max_bin() + 1; ++b) {
      if (!blocked[b]) candidates.push_back(b);
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng_)];
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace kcb
