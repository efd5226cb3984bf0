#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "regugame/game.hpp"

namespace regugame {

enum class TieBreak {
  kFirstDeclared,  // earliest action in declaration order
  kLexicographic,  // smallest action label
};

// One action index per decision node, aligned with ExtensiveGame::decision_nodes().
using StrategyProfile = std::vector<std::size_t>;

// Backward-induction result.
struct Solution {
  // Per-player continuation value, indexed by NodeId::value.
  std::vector<Payoff> node_values;
  // Chosen action index for decision nodes; empty for chance/terminal nodes.
  std::vector<std::optional<std::size_t>> chosen;
  // Decision nodes where two or more actions tie for the mover (within kTolerance).
  std::vector<NodeId> tie_log;

  [[nodiscard]] const Payoff& value(NodeId id) const { return node_values.at(id.value); }
  [[nodiscard]] std::size_t chosen_index(NodeId id) const;
};

Solution backward_induction(const ExtensiveGame& game,
                            TieBreak tie_break = TieBreak::kFirstDeclared);

std::string chosen_label(const ExtensiveGame& game, const Solution& solution, NodeId id);

StrategyProfile profile_of(const ExtensiveGame& game, const Solution& solution);

// Per-node values when every decision node plays its profile action.
std::vector<Payoff> evaluate_profile(const ExtensiveGame& game, const StrategyProfile& profile);

// Product of action counts over all decision nodes; saturates at SIZE_MAX.
std::size_t count_profiles(const ExtensiveGame& game);

inline constexpr std::size_t kMaxOracleProfiles = 1'000'000;

// Exhaustive subgame-perfection check over every pure strategy profile. A
// profile is kept when, at every decision node, the mover's chosen action
// attains the best continuation value given the rest of the profile.
// Throws DomainError when the profile count exceeds `max_profiles`.
std::vector<StrategyProfile> brute_force_spne(const ExtensiveGame& game,
                                              std::size_t max_profiles = kMaxOracleProfiles);

// Strict dominance of action `a` over `b` at decision node `at` for its mover.
// True iff, for every strategy of the other players inside the two subgames,
// the mover's best attainable value after `a` strictly exceeds the best
// attainable value after `b`. Throws InvalidInput on unknown labels or if
// `at` is not a decision node.
bool strictly_dominates(const ExtensiveGame& game, NodeId at, const std::string& a,
                        const std::string& b);

}  // namespace regugame
