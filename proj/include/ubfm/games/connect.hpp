#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ubfm/game.hpp"
#include "ubfm/zobrist.hpp"

namespace ubfm::games {

// Gravity connection game on W columns x H rows: a move drops a disc into a
// non-full column, K in a row (any direction) wins, full board draws.
// Row 0 is the bottom row; diagrams print the top row first.
template <int W, int H, int K>
class Connect {
public:
  static constexpr int kRows = H;
  static constexpr int kCols = W;
  static constexpr int kCells = W * H;
  static constexpr int kFeatures = 4;

  using Move = uint8_t;  // column index

  struct State {
    std::array<int8_t, kCells> cells{};  // index = row * W + col, row 0 bottom
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

  // Stable move order: center columns first, ties by column index.
  static const std::array<Move, W>& move_order() {
    static const std::array<Move, W> order = [] {
      std::array<std::pair<int, int>, W> keyed;
      for (int c = 0; c < W; ++c) {
        keyed[static_cast<size_t>(c)] = {std::abs(2 * c - (W - 1)), c};
      }
      std::sort(keyed.begin(), keyed.end());
      std::array<Move, W> out{};
      for (int c = 0; c < W; ++c) {
        out[static_cast<size_t>(c)] =
            static_cast<Move>(keyed[static_cast<size_t>(c)].second);
      }
      return out;
    }();
    return order;
  }

  static void legal_moves(const State& s, std::vector<Move>& out) {
    out.clear();
    if (terminal_outcome(s)) raise(Errc::terminal_state, name_str());
    for (Move c : move_order()) {
      if (s.cells[static_cast<size_t>((H - 1) * W + c)] == 0) {
        out.push_back(c);
      }
    }
  }

  static State apply(const State& s, Move m) {
    if (m >= W) raise(Errc::illegal_move, name_str());
    int row = -1;
    for (int r = 0; r < H; ++r) {
      if (s.cells[static_cast<size_t>(r * W + m)] == 0) {
        row = r;
        break;
      }
    }
    if (row < 0) raise(Errc::illegal_move, name_str() + " column full");
    State n = s;
    const int8_t who = s.to_move == Player::First ? 1 : 2;
    const int cell = row * W + m;
    n.cells[static_cast<size_t>(cell)] = who;
    n.hash ^= tables().piece(cell, who);
    n.hash ^= tables().side_second;
    n.to_move = other(s.to_move);
    n.move_count = static_cast<uint16_t>(s.move_count + 1);
    return n;
  }

  static std::optional<Outcome> terminal_outcome(const State& s) {
    for (const auto& win : windows()) {
      const int8_t a = s.cells[static_cast<size_t>(win[0])];
      if (a == 0) continue;
      bool all = true;
      for (int k = 1; k < K; ++k) {
        if (s.cells[static_cast<size_t>(win[static_cast<size_t>(k)])] != a) {
          all = false;
          break;
        }
      }
      if (all) return a == 1 ? Outcome::FirstWins : Outcome::SecondWins;
    }
    for (int c = 0; c < W; ++c) {
      if (s.cells[static_cast<size_t>((H - 1) * W + c)] == 0) {
        return std::nullopt;
      }
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
    uint64_t discs = 0;
    for (int8_t c : s.cells) discs += c != 0;
    return discs;
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

  // Disc balance, center-column control, single-color window counts and
  // near-complete window counts.
  static void features(const State& s, double* out) {
    int discs = 0, center = 0, open = 0, strong = 0;
    const int c0 = (W - 1) / 2;
    for (int i = 0; i < kCells; ++i) {
      const int8_t c = s.cells[static_cast<size_t>(i)];
      if (c == 0) continue;
      const int sign = c == 1 ? 1 : -1;
      discs += sign;
      if (i % W == c0) center += sign;
    }
    for (const auto& win : windows()) {
      int x = 0, o = 0;
      for (int k = 0; k < K; ++k) {
        const int8_t c = s.cells[static_cast<size_t>(win[static_cast<size_t>(k)])];
        x += c == 1;
        o += c == 2;
      }
      if (o == 0 && x > 0) {
        ++open;
        if (x == K - 1) ++strong;
      }
      if (x == 0 && o > 0) {
        --open;
        if (o == K - 1) --strong;
      }
    }
    const double nw = static_cast<double>(windows().size());
    out[0] = static_cast<double>(discs) / kCells;
    out[1] = static_cast<double>(center) / H;
    out[2] = static_cast<double>(open) / nw;
    out[3] = static_cast<double>(strong) / (nw / 2.0);
  }

  static std::string print_diagram(const State& s) {
    // print top row first
    std::array<int8_t, kCells> flipped;
    for (int r = 0; r < H; ++r) {
      for (int c = 0; c < W; ++c) {
        flipped[static_cast<size_t>(r * W + c)] =
            s.cells[static_cast<size_t>((H - 1 - r) * W + c)];
      }
    }
    return grid::print(flipped, H, W, s.to_move);
  }

  static State parse_diagram(std::string_view text) {
    State s;
    std::array<int8_t, kCells> flipped{};
    grid::parse(text, H, W, flipped, s.to_move, name_str());
    for (int r = 0; r < H; ++r) {
      for (int c = 0; c < W; ++c) {
        s.cells[static_cast<size_t>(r * W + c)] =
            flipped[static_cast<size_t>((H - 1 - r) * W + c)];
      }
    }
    s.move_count = static_cast<uint16_t>(progress_measure(s));
    s.hash = recompute_key(s);
    return s;
  }

  static std::string move_name(Move m) {
    std::string n;
    n.push_back(static_cast<char>('a' + m));
    return n;
  }

private:
  static std::string name_str() {
    return "connect" + std::to_string(W) + "x" + std::to_string(H);
  }

  static const std::vector<std::array<int, K>>& windows() {
    static const std::vector<std::array<int, K>> wins = [] {
      std::vector<std::array<int, K>> out;
      static constexpr int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
      for (int r = 0; r < H; ++r) {
        for (int c = 0; c < W; ++c) {
          for (const auto& d : dirs) {
            const int er = r + d[0] * (K - 1), ec = c + d[1] * (K - 1);
            if (er < 0 || er >= H || ec < 0 || ec >= W) continue;
            std::array<int, K> w{};
            for (int k = 0; k < K; ++k) {
              w[static_cast<size_t>(k)] = (r + d[0] * k) * W + (c + d[1] * k);
            }
            out.push_back(w);
          }
        }
      }
      return out;
    }();
    return wins;
  }
};

using Connect5x4 = Connect<5, 4, 4>;
using Connect4x3 = Connect<4, 3, 3>;

}  // namespace ubfm::games
