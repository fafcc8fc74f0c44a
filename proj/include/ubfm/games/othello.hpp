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

// Othello on 6x6. First (Black) moves first. A pass is an explicit move,
// legal exactly when the mover has no flipping placement but the opponent
// does; the game ends when neither player can place. Winner by disc count.
class Othello6 {
public:
  static constexpr int kRows = 6;
  static constexpr int kCols = 6;
  static constexpr int kCells = 36;
  static constexpr int kFeatures = 4;
  static constexpr uint8_t kPass = kCells;

  using Move = uint8_t;  // cell index, or kPass

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
    static const GameDescriptor d{"othello6", kRows, kCols, 3, true,
                                  kFeatures};
    return d;
  }

  static const ZobristTables& tables() {
    static const ZobristTables t(kCells, fnv1a("othello6"));
    return t;
  }

  static State initial() {
    State s;
    s.cells[2 * kCols + 2] = 2;
    s.cells[3 * kCols + 3] = 2;
    s.cells[2 * kCols + 3] = 1;
    s.cells[3 * kCols + 2] = 1;
    s.hash = recompute_key(s);
    return s;
  }

  static void legal_moves(const State& s, std::vector<Move>& out) {
    out.clear();
    if (terminal_outcome(s)) raise(Errc::terminal_state, "othello6");
    const int8_t me = s.to_move == Player::First ? 1 : 2;
    for (int i = 0; i < kCells; ++i) {
      if (s.cells[static_cast<size_t>(i)] == 0 && flips_something(s, i, me)) {
        out.push_back(static_cast<Move>(i));
      }
    }
    if (out.empty()) out.push_back(kPass);
  }

  static State apply(const State& s, Move m) {
    State n = s;
    const int8_t me = s.to_move == Player::First ? 1 : 2;
    if (m == kPass) {
      if (mobility(s, me) != 0 || mobility(s, static_cast<int8_t>(3 - me)) == 0) {
        raise(Errc::illegal_move, "othello6 pass");
      }
    } else {
      if (m >= kCells || s.cells[m] != 0) {
        raise(Errc::illegal_move, "othello6 cell " + std::to_string(m));
      }
      const int8_t foe = 3 - me;
      bool flipped_any = false;
      const int r0 = m / kCols, c0 = m % kCols;
      for (const auto& d : kDirs) {
        int r = r0 + d[0], c = c0 + d[1];
        int run = 0;
        while (r >= 0 && r < kRows && c >= 0 && c < kCols &&
               s.cells[static_cast<size_t>(r * kCols + c)] == foe) {
          r += d[0];
          c += d[1];
          ++run;
        }
        if (run == 0 || r < 0 || r >= kRows || c < 0 || c >= kCols ||
            s.cells[static_cast<size_t>(r * kCols + c)] != me) {
          continue;
        }
        flipped_any = true;
        int fr = r0 + d[0], fc = c0 + d[1];
        for (int k = 0; k < run; ++k) {
          const int cell = fr * kCols + fc;
          n.cells[static_cast<size_t>(cell)] = me;
          n.hash ^= tables().piece(cell, foe);
          n.hash ^= tables().piece(cell, me);
          fr += d[0];
          fc += d[1];
        }
      }
      if (!flipped_any) {
        raise(Errc::illegal_move, "othello6 non-flipping placement");
      }
      n.cells[m] = me;
      n.hash ^= tables().piece(m, me);
    }
    n.hash ^= tables().side_second;
    n.to_move = other(s.to_move);
    n.move_count = static_cast<uint16_t>(s.move_count + 1);
    return n;
  }

  static std::optional<Outcome> terminal_outcome(const State& s) {
    if (mobility(s, 1) != 0 || mobility(s, 2) != 0) return std::nullopt;
    int first = 0, second = 0;
    for (int8_t c : s.cells) {
      first += c == 1;
      second += c == 2;
    }
    if (first > second) return Outcome::FirstWins;
    if (second > first) return Outcome::SecondWins;
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
    uint64_t discs = 0;
    for (int8_t c : s.cells) discs += c != 0;
    return discs;  // a pass leaves it unchanged; placements add one
  }

  static std::pair<uint64_t, uint64_t> encode(const State& s) {
    uint64_t lo = 0, hi = 0;
    for (int i = 0; i < kCells; ++i) {
      const uint64_t v = static_cast<uint64_t>(s.cells[static_cast<size_t>(i)]);
      if (i < 32) {
        lo |= v << (2 * i);
      } else {
        hi |= v << (2 * (i - 32));
      }
    }
    hi |= static_cast<uint64_t>(s.to_move) << 62;
    return {lo, hi};
  }

  static int mobility(const State& s, int8_t who) {
    int n = 0;
    for (int i = 0; i < kCells; ++i) {
      if (s.cells[static_cast<size_t>(i)] == 0 && flips_something(s, i, who)) {
        ++n;
      }
    }
    return n;
  }

  // Disc balance, corner control, mobility difference and frontier exposure
  // (discs adjacent to empties are liabilities).
  static void features(const State& s, double* out) {
    int discs = 0, corners = 0, frontier = 0;
    for (int i = 0; i < kCells; ++i) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      if (c == 0) continue;
      const int sign = c == 1 ? 1 : -1;
      discs += sign;
      const int r = i / kCols, col = i % kCols;
      bool edge_of_empty = false;
      for (const auto& d : kDirs) {
        const int nr = r + d[0], nc = col + d[1];
        if (nr < 0 || nr >= kRows || nc < 0 || nc >= kCols) continue;
        if (s.cells[static_cast<size_t>(nr * kCols + nc)] == 0) {
          edge_of_empty = true;
          break;
        }
      }
      if (edge_of_empty) frontier += sign;
    }
    for (int i : {0, kCols - 1, (kRows - 1) * kCols, kCells - 1}) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      corners += (c == 1) - (c == 2);
    }
    out[0] = static_cast<double>(discs) / kCells;
    out[1] = static_cast<double>(corners) / 4.0;
    out[2] = static_cast<double>(mobility(s, 1) - mobility(s, 2)) / 16.0;
    out[3] = -static_cast<double>(frontier) / 20.0;
  }

  static std::string print_diagram(const State& s) {
    return grid::print(s.cells, kRows, kCols, s.to_move);
  }

  static State parse_diagram(std::string_view text) {
    State s;
    grid::parse(text, kRows, kCols, s.cells, s.to_move, "othello6");
    uint16_t discs = 0;
    for (int8_t c : s.cells) discs += c != 0;
    s.move_count = static_cast<uint16_t>(discs >= 4 ? discs - 4 : 0);
    s.hash = recompute_key(s);
    return s;
  }

  static std::string move_name(Move m) {
    if (m == kPass) return "pass";
    std::string n;
    n.push_back(static_cast<char>('a' + m % kCols));
    n += std::to_string(m / kCols + 1);
    return n;
  }

private:
  static constexpr int kDirs[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                      {0, 1},   {1, -1}, {1, 0},  {1, 1}};

  static bool flips_something(const State& s, int cell, int8_t me) {
    const int8_t foe = 3 - me;
    const int r0 = cell / kCols, c0 = cell % kCols;
    for (const auto& d : kDirs) {
      int r = r0 + d[0], c = c0 + d[1];
      int run = 0;
      while (r >= 0 && r < kRows && c >= 0 && c < kCols &&
             s.cells[static_cast<size_t>(r * kCols + c)] == foe) {
        r += d[0];
        c += d[1];
        ++run;
      }
      if (run > 0 && r >= 0 && r < kRows && c >= 0 && c < kCols &&
          s.cells[static_cast<size_t>(r * kCols + c)] == me) {
        return true;
      }
    }
    return false;
  }
};

}  // namespace ubfm::games
