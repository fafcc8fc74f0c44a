#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ubfm/error.hpp"

namespace ubfm {

enum class Player : uint8_t { First = 0, Second = 1 };

constexpr Player other(Player p) {
  return p == Player::First ? Player::Second : Player::First;
}

enum class Outcome : int8_t { FirstWins = 1, SecondWins = -1, Draw = 0 };

// Score in {-1, 0, +1} from the first player's perspective.
constexpr int score_first(Outcome o) { return static_cast<int>(o); }

constexpr int score_for(Outcome o, Player p) {
  return p == Player::First ? score_first(o) : -score_first(o);
}

struct GameDescriptor {
  std::string name;
  int rows{0};
  int cols{0};
  int cell_states{3};  // alphabet size incl. empty, for zobrist sizing
  bool has_progress_measure{true};
  int feature_count{0};

  int cells() const { return rows * cols; }
};

// Compile-time game interface used by the search core. Registered board
// games additionally provide descriptor(), features(), diagrams and an
// exact 128-bit encoding for the solver.
template <class G>
concept SearchableGame = requires(const typename G::State& s,
                                  typename G::Move m,
                                  std::vector<typename G::Move>& out) {
  { s.to_move } -> std::convertible_to<Player>;
  { s.hash } -> std::convertible_to<uint64_t>;
  { G::legal_moves(s, out) };
  { G::apply(s, m) } -> std::same_as<typename G::State>;
  { G::terminal_outcome(s) } -> std::same_as<std::optional<Outcome>>;
};

namespace grid {

constexpr char kEmptyChar = '.';
constexpr char kFirstChar = 'X';
constexpr char kSecondChar = 'O';

inline char cell_char(int8_t occupant) {
  return occupant == 0 ? kEmptyChar : occupant == 1 ? kFirstChar : kSecondChar;
}

inline int8_t occupant_of(char c, std::string_view where) {
  switch (c) {
    case kEmptyChar: return 0;
    case kFirstChar: return 1;
    case kSecondChar: return 2;
    default:
      raise(Errc::parse_error,
            std::string("bad cell character in ") + std::string(where));
  }
}

// One character per cell, row-major, one row per line, then a side-to-move
// line ("X" or "O").
template <class Cells>
std::string print(const Cells& cells, int rows, int cols, Player to_move) {
  std::string out;
  out.reserve(static_cast<size_t>(rows) * (cols + 1) + 2);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      out.push_back(cell_char(cells[static_cast<size_t>(r * cols + c)]));
    }
    out.push_back('\n');
  }
  out.push_back(to_move == Player::First ? kFirstChar : kSecondChar);
  out.push_back('\n');
  return out;
}

template <class Cells>
void parse(std::string_view text, int rows, int cols, Cells& cells,
           Player& to_move, std::string_view game_name) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty()) lines.push_back(cur);
      cur.clear();
    } else if (c != '\r' && c != ' ' && c != '\t') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  if (static_cast<int>(lines.size()) != rows + 1) {
    raise(Errc::parse_error, std::string(game_name) + ": expected " +
                                 std::to_string(rows) + " board rows plus a "
                                 "side-to-move line");
  }
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(lines[r].size()) != cols) {
      raise(Errc::parse_error,
            std::string(game_name) + ": row " + std::to_string(r) +
                " must have " + std::to_string(cols) + " cells");
    }
    for (int c = 0; c < cols; ++c) {
      cells[static_cast<size_t>(r * cols + c)] =
          occupant_of(lines[r][static_cast<size_t>(c)], game_name);
    }
  }
  const std::string& side = lines[static_cast<size_t>(rows)];
  if (side.size() != 1 || (side[0] != kFirstChar && side[0] != kSecondChar)) {
    raise(Errc::parse_error,
          std::string(game_name) + ": side-to-move line must be X or O");
  }
  to_move = side[0] == kFirstChar ? Player::First : Player::Second;
}

}  // namespace grid

}  // namespace ubfm
