#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ubfm/completed_value.hpp"
#include "ubfm/error.hpp"
#include "ubfm/game.hpp"

namespace ubfm {

// In-memory search graph: an arena of nodes plus, when transposition tables
// are enabled, a key -> node map that merges duplicate states into a DAG.
// With the table off every child edge creates a fresh node and the graph is
// a tree. Confined to one search at a time.
template <class G>
class SearchGraph {
public:
  using State = typename G::State;
  using Move = typename G::Move;

  struct Edge {
    Move move;
    uint32_t child;
  };

  struct Node {
    State state;
    uint64_t key{0};
    CompletedValue cv;
    std::vector<Edge> children;
    uint32_t depth{0};       // root-relative depth at first discovery
    uint32_t generation{0};  // iteration counter at last update
    bool expanded{false};
    bool terminal{false};
    Outcome outcome{Outcome::Draw};  // meaningful iff terminal
  };

  explicit SearchGraph(bool use_tt, bool verify_collisions = false)
      : use_tt_(use_tt), verify_collisions_(verify_collisions) {
    nodes_.reserve(1024);
    if (use_tt_) table_.reserve(1024);
  }

  bool use_tt() const { return use_tt_; }
  uint32_t root_index() const { return 0; }
  size_t size() const { return nodes_.size(); }
  size_t table_entries() const { return table_.size(); }

  Node& node(uint32_t i) { return nodes_[i]; }
  const Node& node(uint32_t i) const { return nodes_[i]; }

  // Returns the node for this state, creating it if absent. With the table
  // off a fresh node is always created. The caller initializes cv on
  // creation. Collision verification compares the full stored state.
  std::pair<uint32_t, bool> intern(const State& s, uint32_t depth) {
    const uint64_t key = s.hash;
    if (use_tt_) {
      auto it = table_.find(key);
      if (it != table_.end()) {
        if (verify_collisions_ && !(nodes_[it->second].state == s)) {
          raise(Errc::key_collision,
                "distinct states share key " + std::to_string(key));
        }
        return {it->second, false};
      }
    }
    const uint32_t idx = static_cast<uint32_t>(nodes_.size());
    Node n;
    n.state = s;
    n.key = key;
    n.depth = depth;
    nodes_.push_back(std::move(n));
    if (use_tt_) table_.emplace(key, idx);
    return {idx, true};
  }

  void note_expansion(uint64_t key) {
    if (use_tt_) {
      ++distinct_expanded_;
    } else {
      expanded_keys_.insert(key);
    }
  }

  uint64_t distinct_expanded() const {
    return use_tt_ ? distinct_expanded_ : expanded_keys_.size();
  }

  uint32_t next_generation() { return ++generation_; }

  // Debug acyclicity scan (three-color DFS over child edges).
  bool is_acyclic() const {
    std::vector<uint8_t> color(nodes_.size(), 0);
    std::vector<std::pair<uint32_t, size_t>> stack;
    if (nodes_.empty()) return true;
    stack.emplace_back(root_index(), 0);
    color[root_index()] = 1;
    while (!stack.empty()) {
      auto& [n, i] = stack.back();
      if (i < nodes_[n].children.size()) {
        const uint32_t c = nodes_[n].children[i].child;
        ++i;
        if (color[c] == 1) return false;
        if (color[c] == 0) {
          color[c] = 1;
          stack.emplace_back(c, 0);
        }
      } else {
        color[n] = 2;
        stack.pop_back();
      }
    }
    return true;
  }

  // scratch buffers reused across iterations
  std::vector<Move> scratch_moves;
  std::vector<uint32_t> scratch_path;
  std::vector<uint32_t> scratch_maxima;

private:
  bool use_tt_;
  bool verify_collisions_;
  std::vector<Node> nodes_;
  std::unordered_map<uint64_t, uint32_t> table_;
  std::unordered_set<uint64_t> expanded_keys_;
  uint64_t distinct_expanded_{0};
  uint32_t generation_{0};
};

}  // namespace ubfm
