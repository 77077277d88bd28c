#pragma once

#include <optional>
#include <string>

#include "kcb/colorers.hpp"

namespace kcb {

// 1-based label in the proper coloring the adversary maintains for its own
// construction (1 = red, 2 = green, 3 = blue in the tricolor strategies).
using AdversaryColor = int;

struct AdversaryMove {
  PresentationStep step;
  // Empty when the strategy colors at termination; see final_colors().
  std::optional<AdversaryColor> color;
};

// Adaptive strategy protocol. The harness alternates next_move() and
// observe_bin() until next_move() returns nullopt; oblivious strategies
// simply ignore the observations.
class AdversaryStrategy {
 public:
  virtual ~AdversaryStrategy() = default;

  virtual std::optional<AdversaryMove> next_move() = 0;
  virtual void observe_bin(VertexId vertex, Bin bin) = 0;

  virtual std::string name() const = 0;
  virtual int declared_kappa() const = 0;
  virtual int declared_chi() const = 0;

  virtual bool defers_colors() const { return false; }
  // Arrival-indexed coloring of the whole construction; only meaningful for
  // strategies that defer.
  virtual std::vector<AdversaryColor> final_colors() const { return {}; }
};

// Base for strategies whose move sequence is fixed up front.
class ScriptedStrategy : public AdversaryStrategy {
 public:
  std::optional<AdversaryMove> next_move() override {
    if (cursor_ >= moves_.size()) return std::nullopt;
    return moves_[cursor_++];
  }
  void observe_bin(VertexId, Bin) override {}

  std::size_t total_moves() const { return moves_.size(); }

 protected:
  std::vector<AdversaryMove> moves_;

 private:
  std::size_t cursor_ = 0;
};

}  // namespace kcb
