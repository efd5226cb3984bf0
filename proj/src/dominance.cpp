#include <algorithm>
#include <functional>
#include <limits>

#include "regugame/errors.hpp"
#include "regugame/numfmt.hpp"
#include "regugame/solvers.hpp"

namespace regugame {

bool strictly_dominates(const ExtensiveGame& game, NodeId at, const std::string& a,
                        const std::string& b) {
  require_valid(game);
  if (!game.contains(at) || !game.is_decision(at)) {
    throw InvalidInput("dominance context must be a decision node");
  }
  const auto& ctx = std::get<DecisionNode>(game.node(at));
  const std::size_t ia = game.action_index(at, a);
  const std::size_t ib = game.action_index(at, b);
  if (ia == ExtensiveGame::npos) throw InvalidInput("unknown action '" + a + "'");
  if (ib == ExtensiveGame::npos) throw InvalidInput("unknown action '" + b + "'");
  const PlayerId mover = ctx.owner;

  // Other players' decision nodes inside either subgame.
  std::vector<NodeId> opponents;
  std::function<void(NodeId)> collect = [&](NodeId id) {
    if (const auto* d = std::get_if<DecisionNode>(&game.node(id)); d && d->owner != mover) {
      opponents.push_back(id);
    }
    for (NodeId c : game.children(id)) collect(c);
  };
  collect(ctx.actions[ia].child);
  collect(ctx.actions[ib].child);

  std::vector<std::size_t> arity;
  std::size_t total = 1;
  for (NodeId id : opponents) {
    arity.push_back(std::get<DecisionNode>(game.node(id)).actions.size());
    if (total > kMaxOracleProfiles / arity.back()) {
      throw DomainError("too many opponent continuations to compare");
    }
    total *= arity.back();
  }

  std::vector<std::size_t> fixed(game.num_nodes(), ExtensiveGame::npos);
  // Mover's best value with opponents pinned by `fixed`.
  std::function<double(NodeId)> best = [&](NodeId id) -> double {
    const Node& n = game.node(id);
    if (const auto* t = std::get_if<TerminalNode>(&n)) return t->payoff[mover.index];
    if (const auto* c = std::get_if<ChanceNode>(&n)) {
      double v = 0.0;
      for (const auto& br : c->branches) v += br.probability * best(br.child);
      return v;
    }
    const auto& d = std::get<DecisionNode>(n);
    if (fixed[id.value] != ExtensiveGame::npos) return best(d.actions[fixed[id.value]].child);
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& act : d.actions) v = std::max(v, best(act.child));
    return v;
  };

  std::vector<std::size_t> choice(opponents.size(), 0);
  for (std::size_t step = 0; step < total; ++step) {
    for (std::size_t k = 0; k < opponents.size(); ++k) fixed[opponents[k].value] = choice[k];
    if (!(best(ctx.actions[ia].child) > best(ctx.actions[ib].child) + kTolerance)) return false;
    for (std::size_t k = choice.size(); k-- > 0;) {
      if (++choice[k] < arity[k]) break;
      choice[k] = 0;
    }
  }
  return true;
}

}  // namespace regugame
