#include <algorithm>
#include <functional>
#include <limits>

#include "regugame/errors.hpp"
#include "regugame/numfmt.hpp"
#include "regugame/solvers.hpp"

namespace regugame {

namespace {

// Flattened view of a valid game for repeated profile evaluation.
struct FlatGame {
  std::size_t players = 0;
  std::vector<NodeId> postorder;
  std::vector<std::size_t> decision_slot;  // per node; npos for non-decision
  std::vector<NodeId> decisions;

  explicit FlatGame(const ExtensiveGame& game) : players(game.num_players()) {
    decisions = game.decision_nodes();
    decision_slot.assign(game.num_nodes(), ExtensiveGame::npos);
    for (std::size_t k = 0; k < decisions.size(); ++k) decision_slot[decisions[k].value] = k;
    std::function<void(NodeId)> walk = [&](NodeId id) {
      for (NodeId c : game.children(id)) walk(c);
      postorder.push_back(id);
    };
    walk(game.root());
  }
};

// values[node * players + i]
void evaluate_into(const ExtensiveGame& game, const FlatGame& flat, const StrategyProfile& profile,
                   std::vector<double>& values) {
  const std::size_t np = flat.players;
  values.resize(game.num_nodes() * np);
  for (NodeId id : flat.postorder) {
    double* out = &values[id.value * np];
    const Node& n = game.node(id);
    if (const auto* t = std::get_if<TerminalNode>(&n)) {
      std::copy(t->payoff.begin(), t->payoff.end(), out);
    } else if (const auto* c = std::get_if<ChanceNode>(&n)) {
      std::fill(out, out + np, 0.0);
      for (const auto& b : c->branches) {
        const double* child = &values[b.child.value * np];
        for (std::size_t i = 0; i < np; ++i) out[i] += b.probability * child[i];
      }
    } else {
      const auto& d = std::get<DecisionNode>(n);
      const NodeId child = d.actions[profile[flat.decision_slot[id.value]]].child;
      std::copy_n(&values[child.value * np], np, out);
    }
  }
}

void check_profile_shape(const ExtensiveGame& game, const FlatGame& flat, const StrategyProfile& profile) {
  if (profile.size() != flat.decisions.size()) {
    throw InvalidInput("profile has " + std::to_string(profile.size()) + " entries for " +
                       std::to_string(flat.decisions.size()) + " decision nodes");
  }
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const auto& d = std::get<DecisionNode>(game.node(flat.decisions[k]));
    if (profile[k] >= d.actions.size()) throw InvalidInput("profile action index out of range");
  }
}

}  // namespace

std::vector<Payoff> evaluate_profile(const ExtensiveGame& game, const StrategyProfile& profile) {
  require_valid(game);
  const FlatGame flat(game);
  check_profile_shape(game, flat, profile);
  std::vector<double> values;
  evaluate_into(game, flat, profile, values);
  std::vector<Payoff> out(game.num_nodes());
  for (std::size_t i = 0; i < game.num_nodes(); ++i) {
    out[i].assign(values.begin() + static_cast<std::ptrdiff_t>(i * flat.players),
                  values.begin() + static_cast<std::ptrdiff_t>((i + 1) * flat.players));
  }
  return out;
}

std::size_t count_profiles(const ExtensiveGame& game) {
  std::size_t total = 1;
  for (NodeId id : game.decision_nodes()) {
    const std::size_t k = std::get<DecisionNode>(game.node(id)).actions.size();
    if (k != 0 && total > std::numeric_limits<std::size_t>::max() / k) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= k;
  }
  return total;
}

std::vector<StrategyProfile> brute_force_spne(const ExtensiveGame& game, std::size_t max_profiles) {
  require_valid(game);
  const std::size_t total = count_profiles(game);
  if (total > max_profiles) {
    throw DomainError("game has " + std::to_string(total) + " pure strategy profiles; oracle limit is " +
                      std::to_string(max_profiles));
  }

  const FlatGame flat(game);
  const std::size_t np = flat.players;
  std::vector<std::size_t> arity;
  for (NodeId id : flat.decisions) arity.push_back(std::get<DecisionNode>(game.node(id)).actions.size());

  std::vector<StrategyProfile> result;
  StrategyProfile profile(flat.decisions.size(), 0);
  std::vector<double> values;
  for (std::size_t step = 0; step < total; ++step) {
    evaluate_into(game, flat, profile, values);

    bool perfect = true;
    for (std::size_t k = 0; k < flat.decisions.size() && perfect; ++k) {
      const auto& d = std::get<DecisionNode>(game.node(flat.decisions[k]));
      const std::size_t mover = d.owner.index;
      const double played = values[d.actions[profile[k]].child.value * np + mover];
      for (const auto& a : d.actions) {
        if (values[a.child.value * np + mover] > played + kTolerance) {
          perfect = false;
          break;
        }
      }
    }
    if (perfect) result.push_back(profile);

    // Odometer increment, last decision node fastest.
    for (std::size_t k = profile.size(); k-- > 0;) {
      if (++profile[k] < arity[k]) break;
      profile[k] = 0;
    }
  }
  return result;
}

}  // namespace regugame
