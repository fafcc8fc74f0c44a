#pragma once

#include <string_view>
#include <vector>

#include "ubfm/game.hpp"
#include "ubfm/games/breakthrough.hpp"
#include "ubfm/games/connect.hpp"
#include "ubfm/games/hex.hpp"
#include "ubfm/games/othello.hpp"
#include "ubfm/games/tictactoe.hpp"

namespace ubfm::games {

template <class G>
struct GameTag {
  using game = G;
};

inline const std::vector<GameDescriptor>& all_descriptors() {
  static const std::vector<GameDescriptor> all = {
      TicTacToe::descriptor(),    Hex3::descriptor(),
      Hex5::descriptor(),         Hex7::descriptor(),
      Breakthrough5::descriptor(), Connect5x4::descriptor(),
      Connect4x3::descriptor(),   Othello6::descriptor(),
  };
  return all;
}

inline const GameDescriptor& descriptor_by_name(std::string_view name) {
  for (const auto& d : all_descriptors()) {
    if (d.name == name) return d;
  }
  raise(Errc::unknown_game, std::string(name));
}

// Calls f with a GameTag for the named game. All registered games are
// compiled in; the name only selects among them.
template <class F>
decltype(auto) dispatch(std::string_view name, F&& f) {
  if (name == "tictactoe") return f(GameTag<TicTacToe>{});
  if (name == "hex3") return f(GameTag<Hex3>{});
  if (name == "hex5") return f(GameTag<Hex5>{});
  if (name == "hex7") return f(GameTag<Hex7>{});
  if (name == "breakthrough5") return f(GameTag<Breakthrough5>{});
  if (name == "connect5x4") return f(GameTag<Connect5x4>{});
  if (name == "connect4x3") return f(GameTag<Connect4x3>{});
  if (name == "othello6") return f(GameTag<Othello6>{});
  raise(Errc::unknown_game, std::string(name));
}

}  // namespace ubfm::games
