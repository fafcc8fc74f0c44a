#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ubfm/error.hpp"
#include "ubfm/eval/heuristic.hpp"
#include "ubfm/zobrist.hpp"

namespace ubfm::eval {

template <class G>
struct EvalSet {
  int set_index{0};
  uint64_t seed{0};
  std::vector<HeuristicEval<G>> members;
};

namespace detail {

// Seeded unit-normal weights, normalized to a fixed length so the squashed
// outputs stay informative without saturating.
template <class G>
HeuristicEval<G> make_member(uint64_t member_seed, EvalId id, bool injective) {
  HeuristicEval<G> h;
  h.id = id;
  h.salt = mix64(member_seed, 0x53414c54ULL);
  h.injective = injective;
  std::mt19937_64 rng(member_seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double norm2 = 0.0;
  for (int k = 0; k < G::kFeatures; ++k) {
    h.weights[static_cast<size_t>(k)] = normal(rng);
    norm2 += h.weights[static_cast<size_t>(k)] * h.weights[static_cast<size_t>(k)];
  }
  const double scale = 1.5 / std::sqrt(norm2 > 0 ? norm2 : 1.0);
  for (auto& w : h.weights) w *= scale;
  return h;
}

}  // namespace detail

// Families of distinct seeded evaluation functions; regeneration from the
// same master seed is identical.
template <class G>
std::vector<EvalSet<G>> generate_eval_sets(int n_sets, int n_members,
                                           uint64_t master_seed,
                                           bool injective = false) {
  if (n_sets < 1 || n_members < 2) {
    raise(Errc::invalid_config, "need n_sets >= 1 and n_members >= 2");
  }
  std::vector<EvalSet<G>> sets;
  sets.reserve(static_cast<size_t>(n_sets));
  for (int s = 0; s < n_sets; ++s) {
    EvalSet<G> set;
    set.set_index = s;
    set.seed = mix64(master_seed, static_cast<uint64_t>(s) + 1);
    for (int m = 0; m < n_members; ++m) {
      const uint64_t mseed = mix64(set.seed, static_cast<uint64_t>(m) + 1);
      set.members.push_back(
          detail::make_member<G>(mseed, EvalId{s, m}, injective));
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

template <class G>
nlohmann::json eval_sets_to_json(const std::string& game_name,
                                 uint64_t master_seed,
                                 const std::vector<EvalSet<G>>& sets) {
  nlohmann::json j;
  j["game"] = game_name;
  j["master_seed"] = master_seed;
  j["sets"] = nlohmann::json::array();
  for (const auto& set : sets) {
    nlohmann::json js;
    js["set"] = set.set_index;
    js["seed"] = set.seed;
    js["members"] = nlohmann::json::array();
    for (const auto& m : set.members) {
      nlohmann::json jm;
      jm["member"] = m.id.member;
      jm["salt"] = m.salt;
      jm["injective"] = m.injective;
      jm["weights"] = m.weights;
      js["members"].push_back(jm);
    }
    j["sets"].push_back(js);
  }
  return j;
}

template <class G>
std::vector<EvalSet<G>> eval_sets_from_json(const nlohmann::json& j) {
  std::vector<EvalSet<G>> sets;
  if (!j.contains("sets")) raise(Errc::parse_error, "eval sets: missing sets");
  for (const auto& js : j.at("sets")) {
    EvalSet<G> set;
    set.set_index = js.at("set").get<int>();
    set.seed = js.at("seed").get<uint64_t>();
    for (const auto& jm : js.at("members")) {
      HeuristicEval<G> h;
      h.id = EvalId{set.set_index, jm.at("member").get<int>()};
      h.salt = jm.at("salt").get<uint64_t>();
      h.injective = jm.at("injective").get<bool>();
      const auto& w = jm.at("weights");
      if (static_cast<int>(w.size()) != G::kFeatures) {
        raise(Errc::parse_error, "eval sets: weight count mismatch");
      }
      for (int k = 0; k < G::kFeatures; ++k) {
        h.weights[static_cast<size_t>(k)] = w[static_cast<size_t>(k)].get<double>();
      }
      set.members.push_back(h);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

}  // namespace ubfm::eval
