#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ubfm/game.hpp"
#include "ubfm/zobrist.hpp"

namespace ubfm::games {

class TicTacToe {
public:
  static constexpr int kRows = 3;
  static constexpr int kCols = 3;
  static constexpr int kCells = 9;
  static constexpr int kFeatures = 4;

  using Move = uint8_t;  // cell index, row-major

  struct State {
    std::array<int8_t, kCells> cells{};
    Player to_move{Player::First};
    uint16_t move_count{0};
    uint64_t hash{0};

    friend bool operator==(const State& a, const State& b) {
      return a.cells == b.cells && a.to_move == b.to_move;
    }
  };

  static const GameDescriptor& descriptor() {
    static const GameDescriptor d{"tictactoe", kRows, kCols, 3, true,
                                  kFeatures};
    return d;
  }

  static const ZobristTables& tables() {
    static const ZobristTables t(kCells, fnv1a("tictactoe"));
    return t;
  }

  static State initial() { return State{}; }

  static void legal_moves(const State& s, std::vector<Move>& out) {
    out.clear();
    if (terminal_outcome(s)) raise(Errc::terminal_state, "tictactoe");
    for (int i = 0; i < kCells; ++i) {
      if (s.cells[static_cast<size_t>(i)] == 0) {
        out.push_back(static_cast<Move>(i));
      }
    }
  }

  static State apply(const State& s, Move m) {
    if (m >= kCells || s.cells[m] != 0) {
      raise(Errc::illegal_move, "tictactoe cell " + std::to_string(m));
    }
    State n = s;
    const int8_t who = s.to_move == Player::First ? 1 : 2;
    n.cells[m] = who;
    n.hash ^= tables().piece(m, who);
    n.hash ^= tables().side_second;
    n.to_move = other(s.to_move);
    n.move_count = static_cast<uint16_t>(s.move_count + 1);
    return n;
  }

  static std::optional<Outcome> terminal_outcome(const State& s) {
    static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                         {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                         {0, 4, 8}, {2, 4, 6}};
    for (const auto& L : kLines) {
      const int8_t a = s.cells[static_cast<size_t>(L[0])];
      if (a != 0 && a == s.cells[static_cast<size_t>(L[1])] &&
          a == s.cells[static_cast<size_t>(L[2])]) {
        return a == 1 ? Outcome::FirstWins : Outcome::SecondWins;
      }
    }
    for (int8_t c : s.cells) {
      if (c == 0) return std::nullopt;
    }
    return Outcome::Draw;
  }

  static uint64_t recompute_key(const State& s) {
    uint64_t h = 0;
    for (int i = 0; i < kCells; ++i) {
      if (s.cells[static_cast<size_t>(i)] != 0) {
        h ^= tables().piece(i, s.cells[static_cast<size_t>(i)]);
      }
    }
    if (s.to_move == Player::Second) h ^= tables().side_second;
    return h;
  }

  static uint64_t progress_measure(const State& s) {
    uint64_t stones = 0;
    for (int8_t c : s.cells) stones += c != 0;
    return stones;
  }

  static std::pair<uint64_t, uint64_t> encode(const State& s) {
    uint64_t lo = 0;
    for (int i = 0; i < kCells; ++i) {
      lo |= static_cast<uint64_t>(s.cells[static_cast<size_t>(i)]) << (2 * i);
    }
    lo |= static_cast<uint64_t>(s.to_move) << (2 * kCells);
    return {lo, 0};
  }

  // Features from the first player's perspective: mark balance, two-in-line
  // threats, center and corner control. All zero on the empty board.
  static void features(const State& s, double* out) {
    static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                         {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                         {0, 4, 8}, {2, 4, 6}};
    int marks = 0, threats = 0, corners = 0;
    for (const auto& L : kLines) {
      int x = 0, o = 0;
      for (int idx : L) {
        const int8_t c = s.cells[static_cast<size_t>(idx)];
        x += c == 1;
        o += c == 2;
      }
      if (o == 0 && x == 2) ++threats;
      if (x == 0 && o == 2) --threats;
    }
    for (int i : {0, 2, 6, 8}) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      corners += (c == 1) - (c == 2);
    }
    for (int8_t c : s.cells) marks += (c == 1) - (c == 2);
    const int8_t center = s.cells[4];
    out[0] = marks / 9.0;
    out[1] = threats / 8.0;
    out[2] = center == 1 ? 1.0 : center == 2 ? -1.0 : 0.0;
    out[3] = corners / 4.0;
  }

  static std::string print_diagram(const State& s) {
    return grid::print(s.cells, kRows, kCols, s.to_move);
  }

  static State parse_diagram(std::string_view text) {
    State s;
    grid::parse(text, kRows, kCols, s.cells, s.to_move, "tictactoe");
    s.move_count = static_cast<uint16_t>(progress_measure(s));
    s.hash = recompute_key(s);
    return s;
  }

  static std::string move_name(Move m) {
    std::string n;
    n.push_back(static_cast<char>('a' + m % kCols));
    n.push_back(static_cast<char>('1' + m / kCols));
    return n;
  }
};

}  // namespace ubfm::games
