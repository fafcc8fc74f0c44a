#pragma once

#include <vector>

#include "ubfm/game.hpp"
#include "ubfm/zobrist.hpp"

namespace ubfm::games {

// Plays uniformly random legal moves to the end. `visit` is called on every
// state including the initial and terminal one.
template <class G, class Visit>
Outcome random_playout(typename G::State s, SplitMix& rng, Visit&& visit) {
  std::vector<typename G::Move> moves;
  visit(s);
  for (;;) {
    const auto out = G::terminal_outcome(s);
    if (out) return *out;
    G::legal_moves(s, moves);
    s = G::apply(s, moves[static_cast<size_t>(rng.below(moves.size()))]);
    visit(s);
  }
}

template <class G>
Outcome random_playout(typename G::State s, SplitMix& rng) {
  return random_playout<G>(std::move(s), rng,
                           [](const typename G::State&) {});
}

// Deterministic non-terminal position reached by exactly `plies` random
// moves. Reseeds and retries when a line ends early.
template <class G>
typename G::State random_midgame(uint64_t seed, int plies) {
  std::vector<typename G::Move> moves;
  for (uint64_t attempt = 0;; ++attempt) {
    SplitMix rng(mix64(seed, 0x6d69646761 + attempt));
    typename G::State s = G::initial();
    bool ok = true;
    for (int i = 0; i < plies; ++i) {
      if (G::terminal_outcome(s)) {
        ok = false;
        break;
      }
      G::legal_moves(s, moves);
      s = G::apply(s, moves[static_cast<size_t>(rng.below(moves.size()))]);
    }
    if (ok && !G::terminal_outcome(s)) return s;
  }
}

}  // namespace ubfm::games
