#include <algorithm>
#include <functional>
#include <limits>

#include "regugame/errors.hpp"
#include "regugame/numfmt.hpp"
#include "regugame/solvers.hpp"

namespace regugame {

std::size_t Solution::chosen_index(NodeId id) const {
  const auto& c = chosen.at(id.value);
  if (!c) throw InvalidInput("node " + std::to_string(id.value) + " is not a decision node");
  return *c;
}

Solution backward_induction(const ExtensiveGame& game, TieBreak tie_break) {
  require_valid(game);
  Solution sol;
  sol.node_values.resize(game.num_nodes());
  sol.chosen.resize(game.num_nodes());

  std::function<void(NodeId)> solve = [&](NodeId id) {
    const Node& n = game.node(id);
    if (const auto* t = std::get_if<TerminalNode>(&n)) {
      sol.node_values[id.value] = t->payoff;
      return;
    }
    if (const auto* c = std::get_if<ChanceNode>(&n)) {
      Payoff v(game.num_players(), 0.0);
      for (const auto& b : c->branches) {
        solve(b.child);
        const Payoff& child = sol.node_values[b.child.value];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.probability * child[i];
      }
      sol.node_values[id.value] = std::move(v);
      return;
    }
    const auto& d = std::get<DecisionNode>(n);
    const std::size_t mover = d.owner.index;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& a : d.actions) {
      solve(a.child);
      best = std::max(best, sol.node_values[a.child.value][mover]);
    }
    std::vector<std::size_t> tied;
    for (std::size_t k = 0; k < d.actions.size(); ++k) {
      if (sol.node_values[d.actions[k].child.value][mover] >= best - kTolerance) tied.push_back(k);
    }
    if (tied.size() > 1) sol.tie_log.push_back(id);
    std::size_t pick = tied.front();
    if (tie_break == TieBreak::kLexicographic) {
      pick = *std::min_element(tied.begin(), tied.end(), [&](std::size_t x, std::size_t y) {
        return d.actions[x].label < d.actions[y].label;
      });
    }
    sol.chosen[id.value] = pick;
    sol.node_values[id.value] = sol.node_values[d.actions[pick].child.value];
  };
  solve(game.root());

  // Report ties root-first for readability.
  std::vector<NodeId> ordered;
  for (NodeId id : game.decision_nodes()) {
    if (std::find(sol.tie_log.begin(), sol.tie_log.end(), id) != sol.tie_log.end()) ordered.push_back(id);
  }
  sol.tie_log = std::move(ordered);
  return sol;
}

std::string chosen_label(const ExtensiveGame& game, const Solution& solution, NodeId id) {
  const auto& d = std::get<DecisionNode>(game.node(id));
  return d.actions.at(solution.chosen_index(id)).label;
}

StrategyProfile profile_of(const ExtensiveGame& game, const Solution& solution) {
  StrategyProfile profile;
  for (NodeId id : game.decision_nodes()) profile.push_back(solution.chosen_index(id));
  return profile;
}

}  // namespace regugame
