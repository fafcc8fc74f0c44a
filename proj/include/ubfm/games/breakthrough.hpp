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

// Breakthrough on 5x5 with two pawn rows per side. First starts on rows 0-1
// and moves toward row 4; Second starts on rows 3-4 and moves toward row 0.
// A pawn steps straight or diagonally forward onto an empty square and
// captures diagonally only. Win by reaching the far rank or eliminating
// every enemy pawn. No draws and no stalemates.
class Breakthrough5 {
public:
  static constexpr int kRows = 5;
  static constexpr int kCols = 5;
  static constexpr int kCells = 25;
  static constexpr int kFeatures = 4;

  using Move = uint16_t;  // from * kCells + to

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
    static const GameDescriptor d{"breakthrough5", kRows, kCols, 3, true,
                                  kFeatures};
    return d;
  }

  static const ZobristTables& tables() {
    static const ZobristTables t(kCells, fnv1a("breakthrough5"));
    return t;
  }

  static State initial() {
    State s;
    for (int c = 0; c < kCols; ++c) {
      s.cells[static_cast<size_t>(c)] = 1;
      s.cells[static_cast<size_t>(kCols + c)] = 1;
      s.cells[static_cast<size_t>(3 * kCols + c)] = 2;
      s.cells[static_cast<size_t>(4 * kCols + c)] = 2;
    }
    s.hash = recompute_key(s);
    return s;
  }

  static constexpr Move make_move(int from, int to) {
    return static_cast<Move>(from * kCells + to);
  }
  static constexpr int move_from(Move m) { return m / kCells; }
  static constexpr int move_to(Move m) { return m % kCells; }

  static void legal_moves(const State& s, std::vector<Move>& out) {
    out.clear();
    if (terminal_outcome(s)) raise(Errc::terminal_state, "breakthrough5");
    const int8_t me = s.to_move == Player::First ? 1 : 2;
    const int dir = me == 1 ? 1 : -1;
    for (int from = 0; from < kCells; ++from) {
      if (s.cells[static_cast<size_t>(from)] != me) continue;
      const int r = from / kCols, c = from % kCols;
      const int nr = r + dir;
      if (nr < 0 || nr >= kRows) continue;  // cannot happen pre-terminal
      for (int dc = -1; dc <= 1; ++dc) {
        const int nc = c + dc;
        if (nc < 0 || nc >= kCols) continue;
        const int to = nr * kCols + nc;
        const int8_t occ = s.cells[static_cast<size_t>(to)];
        // straight steps need an empty square; diagonals also capture
        if (dc == 0 ? occ == 0 : occ != me) {
          out.push_back(make_move(from, to));
        }
      }
    }
  }

  static State apply(const State& s, Move m) {
    const int from = move_from(m), to = move_to(m);
    const int8_t me = s.to_move == Player::First ? 1 : 2;
    if (from < 0 || from >= kCells || to < 0 || to >= kCells ||
        s.cells[static_cast<size_t>(from)] != me) {
      raise(Errc::illegal_move, "breakthrough5");
    }
    const int dr = to / kCols - from / kCols;
    const int dc = to % kCols - from % kCols;
    const int dir = me == 1 ? 1 : -1;
    const int8_t target = s.cells[static_cast<size_t>(to)];
    const bool ok = dr == dir && dc >= -1 && dc <= 1 &&
                    (dc == 0 ? target == 0 : target != me);
    if (!ok) raise(Errc::illegal_move, "breakthrough5");
    State n = s;
    n.cells[static_cast<size_t>(from)] = 0;
    n.hash ^= tables().piece(from, me);
    if (target != 0) n.hash ^= tables().piece(to, target);
    n.cells[static_cast<size_t>(to)] = me;
    n.hash ^= tables().piece(to, me);
    n.hash ^= tables().side_second;
    n.to_move = other(s.to_move);
    n.move_count = static_cast<uint16_t>(s.move_count + 1);
    return n;
  }

  static std::optional<Outcome> terminal_outcome(const State& s) {
    int first = 0, second = 0;
    for (int i = 0; i < kCells; ++i) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      if (c == 1) {
        ++first;
        if (i / kCols == kRows - 1) return Outcome::FirstWins;
      } else if (c == 2) {
        ++second;
        if (i / kCols == 0) return Outcome::SecondWins;
      }
    }
    if (second == 0) return Outcome::FirstWins;
    if (first == 0) return Outcome::SecondWins;
    return std::nullopt;
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

  // Total forward progress plus a capture bonus large enough to keep the
  // measure strictly increasing on every move (a capture can delete up to
  // 4 units of the victim's advancement, each move adds 1 of its own).
  static uint64_t progress_measure(const State& s) {
    uint64_t adv = 0;
    int pawns = 0;
    for (int i = 0; i < kCells; ++i) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      if (c == 1) {
        adv += static_cast<uint64_t>(i / kCols);
        ++pawns;
      } else if (c == 2) {
        adv += static_cast<uint64_t>(kRows - 1 - i / kCols);
        ++pawns;
      }
    }
    return adv + 4ULL * static_cast<uint64_t>(20 - pawns);
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

  // Pawn balance, forward progress, most advanced pawn and forward mobility.
  static void features(const State& s, double* out) {
    int pawns = 0, adv = 0, mob = 0;
    int best_first = 0, best_second = 0;
    for (int i = 0; i < kCells; ++i) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      if (c == 0) continue;
      const int r = i / kCols, col = i % kCols;
      const int sign = c == 1 ? 1 : -1;
      const int steps = c == 1 ? r : kRows - 1 - r;
      pawns += sign;
      adv += sign * steps;
      if (c == 1 && steps > best_first) best_first = steps;
      if (c == 2 && steps > best_second) best_second = steps;
      const int nr = r + (c == 1 ? 1 : -1);
      if (nr >= 0 && nr < kRows) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int nc = col + dc;
          if (nc < 0 || nc >= kCols) continue;
          const int8_t occ = s.cells[static_cast<size_t>(nr * kCols + nc)];
          if (dc == 0 ? occ == 0 : occ != c) mob += sign;
        }
      }
    }
    out[0] = pawns / 10.0;
    out[1] = adv / 30.0;
    out[2] = (best_first - best_second) / 4.0;
    out[3] = mob / 20.0;
  }

  static std::string print_diagram(const State& s) {
    return grid::print(s.cells, kRows, kCols, s.to_move);
  }

  static State parse_diagram(std::string_view text) {
    State s;
    grid::parse(text, kRows, kCols, s.cells, s.to_move, "breakthrough5");
    s.move_count = 0;  // not derivable from the board; bookkeeping only
    s.hash = recompute_key(s);
    return s;
  }

  static std::string move_name(Move m) {
    const int from = move_from(m), to = move_to(m);
    std::string n;
    n.push_back(static_cast<char>('a' + from % kCols));
    n += std::to_string(from / kCols + 1);
    n.push_back(static_cast<char>('a' + to % kCols));
    n += std::to_string(to / kCols + 1);
    return n;
  }
};

}  // namespace ubfm::games
