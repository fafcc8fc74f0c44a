#pragma once

#include <stdexcept>
#include <string>

namespace ubfm {

enum class Errc {
  terminal_state,
  illegal_move,
  unknown_game,
  terminal_leaf,
  no_legal_moves,
  not_expanded,
  root_not_expanded,
  key_collision,
  budget_exceeded,
  empty_stratum,
  move_limit_exceeded,
  invalid_config,
  parse_error,
  protocol,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::terminal_state: return "terminal_state";
    case Errc::illegal_move: return "illegal_move";
    case Errc::unknown_game: return "unknown_game";
    case Errc::terminal_leaf: return "terminal_leaf";
    case Errc::no_legal_moves: return "no_legal_moves";
    case Errc::not_expanded: return "not_expanded";
    case Errc::root_not_expanded: return "root_not_expanded";
    case Errc::key_collision: return "key_collision";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::empty_stratum: return "empty_stratum";
    case Errc::move_limit_exceeded: return "move_limit_exceeded";
    case Errc::invalid_config: return "invalid_config";
    case Errc::parse_error: return "parse_error";
    case Errc::protocol: return "protocol";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc c, const std::string& what) {
  throw Error(c, what);
}

}  // namespace ubfm
