#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ubfm/completed_value.hpp"
#include "ubfm/config.hpp"
#include "ubfm/error.hpp"
#include "ubfm/eval/heuristic.hpp"
#include "ubfm/game.hpp"
#include "ubfm/search/graph.hpp"

namespace ubfm {

// Evaluation policy: a heuristic for non-terminal states plus the terminal
// scorer. The terminal_eval axis picks which of the two values a terminal
// node stores; the completion axis decides whether its resolution flags are
// set from the true outcome.
template <class G, class H>
struct EvalPolicy {
  H heur;
  eval::TerminalEval term{};

  double heuristic(const typename G::State& s) const { return heur(s); }
  double terminal(Outcome o, Player p) const { return term(o, p); }
};

template <class G, class H>
EvalPolicy<G, H> make_eval_policy(H h, eval::TerminalEval t = {}) {
  return EvalPolicy<G, H>{std::move(h), t};
}

enum class IterateStatus : uint8_t {
  Expanded,       // a leaf was expanded
  ResolvedNode,   // a node with only resolved children was resolved in place
  TerminalVisit,  // descent ended on a terminal node (completion off)
  RootResolved,   // search complete; no iteration was consumed
  Stalled,        // deterministic fixpoint: no further change is possible
};

// One line per iteration: index, kind, affected state key, root-relative
// depth, resulting root value.
struct LogEntry {
  uint64_t iteration{0};
  char kind{'e'};  // 'e' expand, 'r' resolve, 't' terminal visit
  uint64_t key{0};
  uint32_t depth{0};
  CompletedValue root_cv;

  std::string to_line() const {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%llu %c %016llx %u %s",
                  static_cast<unsigned long long>(iteration), kind,
                  static_cast<unsigned long long>(key), depth,
                  to_string(root_cv).c_str());
    return buf;
  }

  friend bool operator==(const LogEntry& a, const LogEntry& b) {
    return a.iteration == b.iteration && a.kind == b.kind && a.key == b.key &&
           a.depth == b.depth && a.root_cv == b.root_cv;
  }
};

struct ExpansionLog {
  std::vector<LogEntry> entries;

  std::string to_text() const {
    std::string out;
    for (const auto& e : entries) {
      out += e.to_line();
      out.push_back('\n');
    }
    return out;
  }
};

// Carries the restart node between iterations under Korf & Chickering
// backpropagation (the traversal chain root..start), plus the tie-break rng.
struct SearchCursor {
  std::vector<uint32_t> prefix;
  bool have_prefix{false};
  std::mt19937_64 rng;

  explicit SearchCursor(uint64_t seed = 0) : rng(seed) {}
};

enum class DescentKind : uint8_t { Leaf, AllChildrenResolved, StartResolved };

namespace detail {

// Appends the greedy path below `start` (the last element of `nodes`) until
// an unexpanded node is reached. At each expanded node the child maximizing
// the negated completed value is followed; with completion on, resolved
// children are never entered. Ties break to the lowest child index or by
// seeded rng.
template <class G>
DescentKind descend_path(SearchGraph<G>& g, const SearchConfig& cfg,
                         std::mt19937_64& rng, std::vector<uint32_t>& nodes,
                         std::vector<typename G::Move>* moves) {
  uint32_t cur = nodes.back();
  for (;;) {
    const auto& n = g.node(cur);
    if (!n.expanded) return DescentKind::Leaf;
    const auto& edges = n.children;
    int best = -1;
    CompletedValue best_cv;
    if (cfg.tie_break == TieBreak::SeededRandom) {
      auto& maxima = g.scratch_maxima;
      maxima.clear();
      for (size_t i = 0; i < edges.size(); ++i) {
        const CompletedValue& ccv = g.node(edges[i].child).cv;
        if (cfg.completion && ccv.resolved) continue;
        const CompletedValue cand = negate(ccv);
        if (best < 0 || completed_less(best_cv, cand)) {
          best = static_cast<int>(i);
          best_cv = cand;
          maxima.clear();
          maxima.push_back(static_cast<uint32_t>(i));
        } else if (completed_compare(cand, best_cv) == Ordering::Equal) {
          maxima.push_back(static_cast<uint32_t>(i));
        }
      }
      if (best >= 0 && maxima.size() > 1) {
        best = static_cast<int>(
            maxima[static_cast<size_t>(rng() % maxima.size())]);
      }
    } else {
      for (size_t i = 0; i < edges.size(); ++i) {
        const CompletedValue& ccv = g.node(edges[i].child).cv;
        if (cfg.completion && ccv.resolved) continue;
        const CompletedValue cand = negate(ccv);
        if (best < 0 || completed_less(best_cv, cand)) {
          best = static_cast<int>(i);
          best_cv = cand;
        }
      }
    }
    if (best < 0) return DescentKind::AllChildrenResolved;
    const auto& e = edges[static_cast<size_t>(best)];
    if (cfg.completion && g.node(e.child).cv.resolved) {
      raise(Errc::protocol, "descent entered a resolved child");
    }
    nodes.push_back(e.child);
    if (moves) moves->push_back(e.move);
    cur = e.child;
  }
}

}  // namespace detail

template <class G>
struct Descent {
  DescentKind kind{DescentKind::Leaf};
  std::vector<uint32_t> nodes;  // start .. end inclusive
  std::vector<typename G::Move> moves;
};

// Standalone descent from an arbitrary start node.
template <class G>
Descent<G> descend(SearchGraph<G>& g, uint32_t start, const SearchConfig& cfg,
                   std::mt19937_64& rng) {
  Descent<G> d;
  if (g.node(start).cv.resolved) {
    d.kind = DescentKind::StartResolved;
    return d;
  }
  d.nodes.push_back(start);
  d.kind = detail::descend_path(g, cfg, rng, d.nodes, &d.moves);
  return d;
}

template <class G>
Descent<G> descend(SearchGraph<G>& g, uint32_t start, const SearchConfig& cfg) {
  std::mt19937_64 rng(cfg.rng_seed);
  return descend(g, start, cfg, rng);
}

// Negamax combination of a node's children under the completed ordering.
// With completion on, the node is resolved when its best reply is a proved
// win for it, or when every child is resolved (exact negamax over resolved
// children). With completion off the result stays open and unresolved.
template <class G>
CompletedValue recompute(const SearchGraph<G>& g, uint32_t idx,
                         bool completion) {
  const auto& n = g.node(idx);
  if (!n.expanded || n.children.empty()) {
    raise(Errc::not_expanded, "recompute on unexpanded node");
  }
  CompletedValue best = negate(g.node(n.children[0].child).cv);
  bool all_resolved = g.node(n.children[0].child).cv.resolved;
  for (size_t i = 1; i < n.children.size(); ++i) {
    const CompletedValue& ccv = g.node(n.children[i].child).cv;
    all_resolved = all_resolved && ccv.resolved;
    const CompletedValue cand = negate(ccv);
    if (completed_less(best, cand)) best = cand;
  }
  if (!completion) return CompletedValue::heuristic(best.value);
  if (best.resolution == Resolution::ProvedWin) {
    return {Resolution::ProvedWin, best.value, true};
  }
  if (all_resolved) return {best.resolution, best.value, true};
  return {best.resolution, best.value, false};
}

namespace detail {

// Value given to a node at creation. Terminal nodes take their numeric value
// from the configured source and, with completion on, their resolution flags
// from the true outcome. Non-terminal nodes start with the clamped heuristic.
template <class G, class E>
void init_node_value(SearchGraph<G>& g, uint32_t idx, const E& eval,
                     const SearchConfig& cfg) {
  auto& n = g.node(idx);
  const auto out = G::terminal_outcome(n.state);
  if (out) {
    n.terminal = true;
    n.outcome = *out;
    const double numeric =
        cfg.terminal_eval == TerminalEvalMode::Exact
            ? eval.terminal(*out, n.state.to_move)
            : eval::clamp_interior(eval.heuristic(n.state));
    if (cfg.completion) {
      const int sc = score_for(*out, n.state.to_move);
      n.cv = {sc > 0   ? Resolution::ProvedWin
              : sc < 0 ? Resolution::ProvedLoss
                       : Resolution::Open,
              numeric, true};
    } else {
      n.cv = CompletedValue::heuristic(numeric);
    }
  } else {
    n.cv = CompletedValue::heuristic(eval::clamp_interior(eval.heuristic(n.state)));
  }
}

}  // namespace detail

struct ExpandResult {
  CompletedValue old_cv;
  bool changed{false};
  size_t new_children{0};
};

// Generates all legal children of an unexpanded non-terminal leaf, creating
// or sharing child nodes, then marks the leaf expanded and recomputes its
// value from the children.
template <class G, class E>
ExpandResult expand(SearchGraph<G>& g, uint32_t leaf, const E& eval,
                    const SearchConfig& cfg, uint32_t generation) {
  {
    const auto& n = g.node(leaf);
    if (n.terminal) raise(Errc::terminal_leaf, "expand on terminal node");
    if (n.expanded) raise(Errc::protocol, "expand on expanded node");
  }
  const typename G::State parent_state = g.node(leaf).state;
  const uint32_t child_depth = g.node(leaf).depth + 1;
  auto& moves = g.scratch_moves;
  G::legal_moves(parent_state, moves);
  if (moves.empty()) {
    raise(Errc::no_legal_moves, "non-terminal state without legal moves");
  }
  std::vector<typename SearchGraph<G>::Edge> edges;
  edges.reserve(moves.size());
  size_t created_count = 0;
  for (const auto m : moves) {
    const auto child_state = G::apply(parent_state, m);
    const auto [ci, created] = g.intern(child_state, child_depth);
    if (created) {
      detail::init_node_value(g, ci, eval, cfg);
      ++created_count;
    }
    edges.push_back({m, ci});
  }
  auto& n = g.node(leaf);
  n.children = std::move(edges);
  n.expanded = true;
  n.generation = generation;
  const CompletedValue old = n.cv;
  const CompletedValue neu = recompute(g, leaf, cfg.completion);
  n.cv = neu;
  g.note_expansion(n.key);
  return {old, neu != old, created_count};
}

// Recomputes every expanded node on the path in leaf-to-root order. Returns
// whether anything (including the leaf's own update) changed.
template <class G>
bool backpropagate_full(SearchGraph<G>& g, const std::vector<uint32_t>& path,
                        bool leaf_changed, bool completion,
                        uint32_t generation) {
  bool any = leaf_changed;
  for (size_t i = path.size(); i-- > 0;) {
    auto& n = g.node(path[i]);
    if (!n.expanded) continue;  // an unexpanded or terminal leaf keeps its value
    const CompletedValue old = n.cv;
    const CompletedValue neu = recompute(g, path[i], completion);
    n.cv = neu;
    n.generation = generation;
    if (neu != old) any = true;
  }
  return any;
}

struct KcOutcome {
  size_t invariant_index{0};  // index into the path
  bool any_changed{false};
};

// Korf & Chickering backpropagation: climb the traversal chain leaf-to-root
// but stop at the first node whose value recompute leaves unchanged (the
// invariant node). The leaf's own change is the one produced by this
// iteration's expansion or resolution.
template <class G>
KcOutcome backpropagate_kc(SearchGraph<G>& g,
                           const std::vector<uint32_t>& path,
                           bool leaf_changed, bool completion,
                           uint32_t generation) {
  size_t i = path.size() - 1;
  if (!leaf_changed) return {i, false};
  while (i-- > 0) {
    auto& n = g.node(path[i]);
    const CompletedValue old = n.cv;
    const CompletedValue neu = recompute(g, path[i], completion);
    n.cv = neu;
    n.generation = generation;
    if (neu == old) return {i, true};
  }
  return {0, true};
}

// One search iteration: descend, expand (or resolve, or visit a terminal),
// backpropagate. Counts as an iteration even when nothing is expanded.
template <class G, class E>
IterateStatus iterate(SearchGraph<G>& g, const E& eval,
                      const SearchConfig& cfg, SearchCursor& cursor,
                      SearchStats& stats, ExpansionLog* log = nullptr) {
  const uint32_t root = g.root_index();
  if (g.node(root).cv.resolved) return IterateStatus::RootResolved;

  auto& path = g.scratch_path;
  path.clear();
  if (cfg.backprop == BackpropMode::KorfChickering && cursor.have_prefix &&
      !g.node(cursor.prefix.back()).cv.resolved) {
    path = cursor.prefix;
  } else {
    path.push_back(root);
  }

  const DescentKind kind = detail::descend_path<G>(g, cfg, cursor.rng, path,
                                                   nullptr);
  ++stats.iterations;
  const uint32_t gen = g.next_generation();
  const uint32_t leaf = path.back();

  bool leaf_changed = false;
  IterateStatus status;
  if (kind == DescentKind::AllChildrenResolved) {
    auto& n = g.node(leaf);
    const CompletedValue old = n.cv;
    n.cv = recompute(g, leaf, cfg.completion);
    n.generation = gen;
    leaf_changed = n.cv != old;
    ++stats.resolution_events;
    status = IterateStatus::ResolvedNode;
  } else if (g.node(leaf).terminal) {
    status = IterateStatus::TerminalVisit;
  } else {
    const ExpandResult er = expand(g, leaf, eval, cfg, gen);
    stats.nodes_created += er.new_children;
    ++stats.nodes_expanded;
    leaf_changed = er.changed;
    status = IterateStatus::Expanded;
  }
  if (g.node(leaf).depth > stats.max_depth_reached) {
    stats.max_depth_reached = g.node(leaf).depth;
  }

  bool any_changed;
  if (cfg.backprop == BackpropMode::Full) {
    any_changed = backpropagate_full(g, path, leaf_changed, cfg.completion,
                                     gen);
    cursor.have_prefix = false;
  } else {
    const KcOutcome kc = backpropagate_kc(g, path, leaf_changed,
                                          cfg.completion, gen);
    any_changed = kc.any_changed;
    cursor.prefix.assign(path.begin(),
                         path.begin() + static_cast<long>(kc.invariant_index) + 1);
    cursor.have_prefix = true;
  }

  if (log) {
    log->entries.push_back({stats.iterations,
                            status == IterateStatus::Expanded       ? 'e'
                            : status == IterateStatus::ResolvedNode ? 'r'
                                                                    : 't',
                            g.node(leaf).key, g.node(leaf).depth,
                            g.node(root).cv});
  }

  if (g.node(root).cv.resolved) stats.root_resolved = true;

  // A terminal visit that changed nothing repeats forever under a
  // deterministic tie-break; the remaining budget cannot alter anything.
  if (status == IterateStatus::TerminalVisit && !any_changed &&
      cfg.tie_break == TieBreak::FirstChild) {
    return IterateStatus::Stalled;
  }
  return status;
}

// Final action choice: the move to the child maximizing the negated
// completed value over all children, resolved ones included.
template <class G>
typename G::Move decide(const SearchGraph<G>& g, const SearchConfig& cfg,
                        std::mt19937_64& rng) {
  const auto& r = g.node(g.root_index());
  if (!r.expanded) raise(Errc::root_not_expanded, "decide before expansion");
  int best = -1;
  CompletedValue best_cv;
  if (cfg.tie_break == TieBreak::SeededRandom) {
    std::vector<uint32_t> maxima;
    for (size_t i = 0; i < r.children.size(); ++i) {
      const CompletedValue cand = negate(g.node(r.children[i].child).cv);
      if (best < 0 || completed_less(best_cv, cand)) {
        best = static_cast<int>(i);
        best_cv = cand;
        maxima.clear();
        maxima.push_back(static_cast<uint32_t>(i));
      } else if (completed_compare(cand, best_cv) == Ordering::Equal) {
        maxima.push_back(static_cast<uint32_t>(i));
      }
    }
    if (maxima.size() > 1) {
      best = static_cast<int>(maxima[static_cast<size_t>(rng() % maxima.size())]);
    }
  } else {
    for (size_t i = 0; i < r.children.size(); ++i) {
      const CompletedValue cand = negate(g.node(r.children[i].child).cv);
      if (best < 0 || completed_less(best_cv, cand)) {
        best = static_cast<int>(i);
        best_cv = cand;
      }
    }
  }
  return r.children[static_cast<size_t>(best)].move;
}

template <class G>
typename G::Move decide(const SearchGraph<G>& g, const SearchConfig& cfg) {
  std::mt19937_64 rng(cfg.rng_seed);
  return decide(g, cfg, rng);
}

// Owns one search: graph, cursor and stats. Runs the iteration loop until
// the budget is exhausted, the root resolves, or the search stalls.
template <class G, class E>
class Searcher {
public:
  Searcher(const typename G::State& root_state, E eval, SearchConfig cfg)
      : eval_(std::move(eval)),
        cfg_(cfg),
        graph_(cfg.use_tt, cfg.verify_collisions),
        cursor_(cfg.rng_seed) {
    cfg_.validate();
    if (G::terminal_outcome(root_state)) {
      raise(Errc::terminal_state, "search from terminal state");
    }
    const auto [idx, created] = graph_.intern(root_state, 0);
    (void)idx;
    (void)created;
    detail::init_node_value(graph_, graph_.root_index(), eval_, cfg_);
  }

  IterateStatus step(ExpansionLog* log = nullptr) {
    return iterate(graph_, eval_, cfg_, cursor_, stats_, log);
  }

  void run(ExpansionLog* log = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    for (;;) {
      if (cfg_.budget.kind == Budget::Kind::Iterations) {
        if (stats_.iterations >= cfg_.budget.amount) break;
      } else {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        if (static_cast<uint64_t>(ms) >= cfg_.budget.amount) break;
      }
      const IterateStatus st = step(log);
      if (st == IterateStatus::RootResolved) break;
      if (st == IterateStatus::Stalled) {
        stats_.stalled = true;
        break;
      }
      if (stats_.root_resolved) break;
    }
    stats_.root_resolved = graph_.node(graph_.root_index()).cv.resolved;
    stats_.distinct_expanded = graph_.distinct_expanded();
    stats_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }

  typename G::Move decide_move() { return decide(graph_, cfg_, cursor_.rng); }

  SearchGraph<G>& graph() { return graph_; }
  const SearchGraph<G>& graph() const { return graph_; }
  const SearchStats& stats() const { return stats_; }
  const SearchConfig& config() const { return cfg_; }

private:
  E eval_;
  SearchConfig cfg_;
  SearchGraph<G> graph_;
  SearchCursor cursor_;
  SearchStats stats_;
};

// Runs a full search and returns the decided move with its stats.
template <class G, class E>
std::pair<typename G::Move, SearchStats> search(
    const typename G::State& root_state, const E& eval,
    const SearchConfig& cfg, ExpansionLog* log = nullptr) {
  Searcher<G, E> s(root_state, eval, cfg);
  s.run(log);
  auto stats = s.stats();
  return {s.decide_move(), stats};
}

}  // namespace ubfm
