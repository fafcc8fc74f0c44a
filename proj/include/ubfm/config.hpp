#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ubfm/error.hpp"

namespace ubfm {

enum class BackpropMode : uint8_t {
  Full,            // update every ancestor up to the root, restart from root
  KorfChickering,  // stop at the first unchanged ancestor, restart from it
};

enum class TerminalEvalMode : uint8_t {
  Exact,      // terminal nodes get the true outcome score
  Heuristic,  // terminal nodes get the heuristic value, clamped to (-1,+1)
};

enum class TieBreak : uint8_t {
  FirstChild,    // lowest index in the stable child order
  SeededRandom,  // uniform among maximal children, seeded from rng_seed
};

struct Budget {
  enum class Kind : uint8_t { Iterations, WallClockMillis };
  Kind kind{Kind::Iterations};
  uint64_t amount{1};

  static constexpr Budget iterations(uint64_t n) {
    return {Kind::Iterations, n};
  }
  static constexpr Budget wall_clock_millis(uint64_t ms) {
    return {Kind::WallClockMillis, ms};
  }
};

// The four variant axes plus budget, seed and tie-break policy.
struct SearchConfig {
  bool use_tt{true};
  BackpropMode backprop{BackpropMode::Full};
  bool completion{true};
  TerminalEvalMode terminal_eval{TerminalEvalMode::Exact};
  Budget budget{Budget::iterations(1000)};
  TieBreak tie_break{TieBreak::FirstChild};
  uint64_t rng_seed{0};

  // Verify on every table hit that the stored state matches the probing
  // state. Cheap at desk scale; collisions surface as key_collision.
  bool verify_collisions{false};

  void validate() const {
    if (budget.kind == Budget::Kind::Iterations && budget.amount < 1) {
      raise(Errc::invalid_config, "iteration budget must be >= 1");
    }
  }
};

inline SearchConfig preset_ubfm_ref() { return SearchConfig{}; }

// Named presets; each differs from the reference in exactly the axes its
// name states.
inline std::optional<SearchConfig> preset_by_name(std::string_view name) {
  SearchConfig c = preset_ubfm_ref();
  if (name == "ubfm_ref") return c;
  if (name == "no_completion") {
    c.completion = false;
    return c;
  }
  if (name == "no_tt") {
    c.use_tt = false;
    return c;
  }
  if (name == "kc_backprop") {
    c.backprop = BackpropMode::KorfChickering;
    return c;
  }
  if (name == "no_completion_no_exact_terminal") {
    c.completion = false;
    c.terminal_eval = TerminalEvalMode::Heuristic;
    return c;
  }
  if (name == "no_exact_terminal") {
    c.terminal_eval = TerminalEvalMode::Heuristic;
    return c;
  }
  return std::nullopt;
}

inline const char* const kTableOnePresets[] = {
    "ubfm_ref", "no_completion", "no_tt", "kc_backprop",
    "no_completion_no_exact_terminal"};

// Accumulated per-search counters.
struct SearchStats {
  uint64_t iterations{0};
  uint64_t nodes_expanded{0};
  uint64_t distinct_expanded{0};
  uint64_t resolution_events{0};
  uint64_t nodes_created{0};
  uint32_t max_depth_reached{0};
  bool root_resolved{false};
  bool stalled{false};
  double elapsed_seconds{0.0};
};

}  // namespace ubfm
