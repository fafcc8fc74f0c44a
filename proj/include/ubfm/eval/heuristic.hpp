#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "ubfm/game.hpp"
#include "ubfm/zobrist.hpp"

namespace ubfm::eval {

struct EvalId {
  int set{0};
  int member{0};
};

// Exact terminal evaluation: the true outcome score from a perspective,
// optionally burning a calibrated amount of deterministic busy-work per call
// to emulate an expensive exact evaluation under wall-clock budgets.
struct TerminalEval {
  uint64_t cost_units{0};

  double operator()(Outcome o, Player p) const {
    if (cost_units != 0) burn(cost_units);
    return static_cast<double>(score_for(o, p));
  }

  static void burn(uint64_t units) {
    volatile uint64_t sink = 0;
    uint64_t acc = 0x243f6a8885a308d3ULL;
    for (uint64_t i = 0; i < units; ++i) acc = splitmix64(acc);
    sink = acc;
    (void)sink;
  }
};

inline double evaluate_terminal(Outcome o, Player p) {
  return TerminalEval{}(o, p);
}

inline TerminalEval costly_terminal_wrapper(TerminalEval base,
                                            uint64_t cost_units) {
  base.cost_units += cost_units;
  return base;
}

inline constexpr double kInteriorBound = 1.0 - 0x1.0p-20;
inline constexpr double kSaltScale = 0x1.0p-31;

inline double clamp_interior(double v) {
  if (v > kInteriorBound) return kInteriorBound;
  if (v < -kInteriorBound) return -kInteriorBound;
  return v;
}

// Linear-feature heuristic squashed into (-1, +1), reported from the
// perspective of the player to move. An optional state-keyed salt below
// 2^-30 in magnitude makes values injective across states for the
// tie-sensitivity experiments; ties are the default behaviour.
template <class G>
struct HeuristicEval {
  std::array<double, G::kFeatures> weights{};
  EvalId id{};
  uint64_t salt{0};
  bool injective{false};

  double operator()(const typename G::State& s) const {
    double feats[G::kFeatures];
    G::features(s, feats);
    double raw = 0.0;
    for (int k = 0; k < G::kFeatures; ++k) {
      raw += weights[static_cast<size_t>(k)] * feats[k];
    }
    double v = std::tanh(raw);
    if (s.to_move == Player::Second) v = -v;
    v = clamp_interior(v);
    if (injective) {
      const uint64_t h = splitmix64(s.hash ^ salt);
      const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
      v += (u - 0.5) * kSaltScale;
    }
    return v;
  }
};

}  // namespace ubfm::eval
