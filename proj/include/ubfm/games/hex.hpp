#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ubfm/game.hpp"
#include "ubfm/zobrist.hpp"

namespace ubfm::games {

// Hex on an N x N rhombus. First connects the top row to the bottom row,
// Second connects the left column to the right column. Never draws.
template <int N>
class Hex {
public:
  static constexpr int kRows = N;
  static constexpr int kCols = N;
  static constexpr int kCells = N * N;
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
    static const GameDescriptor d{name_str(), kRows, kCols, 3, true,
                                  kFeatures};
    return d;
  }

  static const ZobristTables& tables() {
    static const ZobristTables t(kCells, fnv1a(name_str()));
    return t;
  }

  static State initial() { return State{}; }

  // Stable move order: center-out, ties by cell index. This is the
  // game-defined total order used for tie-breaking.
  static const std::array<Move, kCells>& move_order() {
    static const std::array<Move, kCells> order = [] {
      std::array<std::pair<int, int>, kCells> keyed;
      const int c0 = (N - 1) / 2;
      for (int i = 0; i < kCells; ++i) {
        const int r = i / N, c = i % N;
        keyed[static_cast<size_t>(i)] = {(r - c0) * (r - c0) +
                                             (c - c0) * (c - c0),
                                         i};
      }
      std::sort(keyed.begin(), keyed.end());
      std::array<Move, kCells> out{};
      for (int i = 0; i < kCells; ++i) {
        out[static_cast<size_t>(i)] =
            static_cast<Move>(keyed[static_cast<size_t>(i)].second);
      }
      return out;
    }();
    return order;
  }

  static void legal_moves(const State& s, std::vector<Move>& out) {
    out.clear();
    if (terminal_outcome(s)) raise(Errc::terminal_state, name_str());
    for (Move m : move_order()) {
      if (s.cells[m] == 0) out.push_back(m);
    }
  }

  static State apply(const State& s, Move m) {
    if (m >= kCells || s.cells[m] != 0) {
      raise(Errc::illegal_move, name_str() + " cell " + std::to_string(m));
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
    if (connected(s, 1)) return Outcome::FirstWins;
    if (connected(s, 2)) return Outcome::SecondWins;
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

  static uint64_t progress_measure(const State& s) {
    uint64_t stones = 0;
    for (int8_t c : s.cells) stones += c != 0;
    return stones;
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

  // Stone balance, center-weighted occupancy, edge-to-edge coverage for the
  // respective goal directions, and same-color adjacency.
  static void features(const State& s, double* out) {
    int stones = 0, pairs = 0;
    double weighted = 0.0;
    std::array<bool, N> rows_first{}, cols_second{};
    const double c0 = (N - 1) / 2.0;
    for (int i = 0; i < kCells; ++i) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      if (c == 0) continue;
      const int r = i / N, col = i % N;
      const int sign = c == 1 ? 1 : -1;
      stones += sign;
      const double d2 =
          (r - c0) * (r - c0) + (col - c0) * (col - c0);
      weighted += sign / (1.0 + d2);
      if (c == 1) rows_first[static_cast<size_t>(r)] = true;
      if (c == 2) cols_second[static_cast<size_t>(col)] = true;
      for (int k = 0; k < 6; ++k) {
        const int nr = r + kDirs[k][0], nc = col + kDirs[k][1];
        if (nr < 0 || nr >= N || nc < 0 || nc >= N) continue;
        if (s.cells[static_cast<size_t>(nr * N + nc)] == c) pairs += sign;
      }
    }
    int cover = 0;
    for (int i = 0; i < N; ++i) {
      cover += rows_first[static_cast<size_t>(i)];
      cover -= cols_second[static_cast<size_t>(i)];
    }
    out[0] = static_cast<double>(stones) / kCells;
    out[1] = weighted / N;
    out[2] = static_cast<double>(cover) / N;
    out[3] = static_cast<double>(pairs) / (6.0 * kCells);
  }

  static std::string print_diagram(const State& s) {
    return grid::print(s.cells, kRows, kCols, s.to_move);
  }

  static State parse_diagram(std::string_view text) {
    State s;
    grid::parse(text, kRows, kCols, s.cells, s.to_move, name_str());
    s.move_count = static_cast<uint16_t>(progress_measure(s));
    s.hash = recompute_key(s);
    return s;
  }

  static std::string move_name(Move m) {
    std::string n;
    n.push_back(static_cast<char>('a' + m % kCols));
    n += std::to_string(m / kCols + 1);
    return n;
  }

private:
  static constexpr int kDirs[6][2] = {{-1, 0}, {-1, 1}, {0, -1},
                                      {0, 1},  {1, -1}, {1, 0}};

  static std::string name_str() { return "hex" + std::to_string(N); }

  static bool connected(const State& s, int8_t who) {
    std::array<bool, kCells> seen{};
    std::array<int16_t, kCells> stack;
    int top = 0;
    for (int i = 0; i < N; ++i) {
      const int start = who == 1 ? i : i * N;  // top row / left column
      if (s.cells[static_cast<size_t>(start)] == who) {
        seen[static_cast<size_t>(start)] = true;
        stack[static_cast<size_t>(top++)] = static_cast<int16_t>(start);
      }
    }
    while (top > 0) {
      const int cur = stack[static_cast<size_t>(--top)];
      const int r = cur / N, c = cur % N;
      if (who == 1 ? r == N - 1 : c == N - 1) return true;
      for (const auto& d : kDirs) {
        const int nr = r + d[0], nc = c + d[1];
        if (nr < 0 || nr >= N || nc < 0 || nc >= N) continue;
        const int ni = nr * N + nc;
        if (!seen[static_cast<size_t>(ni)] &&
            s.cells[static_cast<size_t>(ni)] == who) {
          seen[static_cast<size_t>(ni)] = true;
          stack[static_cast<size_t>(top++)] = static_cast<int16_t>(ni);
        }
      }
    }
    return false;
  }
};

using Hex3 = Hex<3>;
using Hex5 = Hex<5>;
using Hex7 = Hex<7>;

}  // namespace ubfm::games
