#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ubfm/error.hpp"
#include "ubfm/game.hpp"
#include "ubfm/zobrist.hpp"

namespace ubfm::oracle {

template <class G>
struct SolveResult {
  int value{0};  // exact score in {-1, 0, +1} from the mover's perspective
  std::vector<typename G::Move> optimal_moves;
  uint64_t nodes_visited{0};
};

// Exhaustive negamax over the full game DAG with a transposition memo keyed
// on the exact 128-bit state encoding, so memo hits can never be collisions.
// Sibling scanning stops once a winning reply is proved; the returned value
// stays exact. Ground truth for everything the search claims to resolve.
template <class G>
class Oracle {
public:
  using State = typename G::State;
  using Move = typename G::Move;

  explicit Oracle(uint64_t node_limit = 100'000'000)
      : node_limit_(node_limit) {}

  int solve_value(const State& s) {
    const auto out = G::terminal_outcome(s);
    if (out) return score_for(*out, s.to_move);
    return solve_rec(s);
  }

  SolveResult<G> solve(const State& s) {
    SolveResult<G> r;
    const uint64_t before = visited_;
    const auto out = G::terminal_outcome(s);
    if (out) {
      r.value = score_for(*out, s.to_move);
      r.nodes_visited = visited_ - before;
      return r;
    }
    r.value = solve_rec(s);
    std::vector<Move> moves;
    G::legal_moves(s, moves);
    for (const auto m : moves) {
      if (-solve_rec(G::apply(s, m)) == r.value) r.optimal_moves.push_back(m);
    }
    r.nodes_visited = visited_ - before;
    return r;
  }

  std::vector<Move> optimal_move_set(const State& s) {
    if (G::terminal_outcome(s)) {
      raise(Errc::terminal_state, "optimal_move_set on terminal state");
    }
    return solve(s).optimal_moves;
  }

  uint64_t nodes_visited() const { return visited_; }
  size_t memo_entries() const { return memo_.size(); }

private:
  using Key = std::pair<uint64_t, uint64_t>;
  struct KeyHash {
    size_t operator()(const Key& k) const noexcept {
      return static_cast<size_t>(mix64(k.first, k.second));
    }
  };

  int8_t solve_rec(const State& s) {
    const auto out = G::terminal_outcome(s);
    if (out) return static_cast<int8_t>(score_for(*out, s.to_move));
    const Key key = G::encode(s);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++visited_ > node_limit_) {
      raise(Errc::budget_exceeded, "oracle node limit exceeded");
    }
    std::vector<Move> moves;
    G::legal_moves(s, moves);
    int8_t best = -2;
    for (const auto m : moves) {
      const int8_t v = static_cast<int8_t>(-solve_rec(G::apply(s, m)));
      if (v > best) best = v;
      if (best == 1) break;
    }
    memo_.emplace(key, best);
    return best;
  }

  uint64_t node_limit_;
  uint64_t visited_{0};
  std::unordered_map<Key, int8_t, KeyHash> memo_;
};

// Memo-free depth-first reference used to cross-check the memoized solver.
template <class G>
int solve_plain(const typename G::State& s, uint64_t* visited = nullptr) {
  if (visited) ++*visited;
  const auto out = G::terminal_outcome(s);
  if (out) return score_for(*out, s.to_move);
  std::vector<typename G::Move> moves;
  G::legal_moves(s, moves);
  int best = -2;
  for (const auto m : moves) {
    const int v = -solve_plain<G>(G::apply(s, m), visited);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace ubfm::oracle
