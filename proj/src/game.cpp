#include "regugame/game.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "regugame/errors.hpp"
#include "regugame/numfmt.hpp"

namespace regugame {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Preorder walk from the root that never revisits a node, so it terminates on
// malformed graphs too. `visit` receives the node and its label path.
void preorder(const ExtensiveGame& game,
              const std::function<void(NodeId, const std::vector<std::string>&)>& visit) {
  if (!game.contains(game.root())) return;
  std::vector<bool> seen(game.num_nodes(), false);
  std::vector<std::string> path;
  std::function<void(NodeId)> walk = [&](NodeId id) {
    if (!game.contains(id) || seen[id.value]) return;
    seen[id.value] = true;
    visit(id, path);
    std::visit(Overloaded{
                   [&](const DecisionNode& d) {
                     for (const auto& a : d.actions) {
                       path.push_back(a.label);
                       walk(a.child);
                       path.pop_back();
                     }
                   },
                   [&](const ChanceNode& c) {
                     for (const auto& b : c.branches) {
                       path.push_back(b.label);
                       walk(b.child);
                       path.pop_back();
                     }
                   },
                   [](const TerminalNode&) {},
               },
               game.node(id));
  };
  walk(game.root());
}

}  // namespace

std::vector<NodeId> ExtensiveGame::children(NodeId id) const {
  std::vector<NodeId> out;
  std::visit(Overloaded{
                 [&](const DecisionNode& d) {
                   for (const auto& a : d.actions) out.push_back(a.child);
                 },
                 [&](const ChanceNode& c) {
                   for (const auto& b : c.branches) out.push_back(b.child);
                 },
                 [](const TerminalNode&) {},
             },
             node(id));
  return out;
}

std::vector<NodeId> ExtensiveGame::decision_nodes() const {
  std::vector<NodeId> out;
  preorder(*this, [&](NodeId id, const auto&) {
    if (is_decision(id)) out.push_back(id);
  });
  return out;
}

std::size_t ExtensiveGame::action_index(NodeId id, const std::string& label) const {
  const auto* d = std::get_if<DecisionNode>(&node(id));
  if (d == nullptr) return npos;
  for (std::size_t i = 0; i < d->actions.size(); ++i) {
    if (d->actions[i].label == label) return i;
  }
  return npos;
}

GameBuilder::GameBuilder(std::vector<std::string> players) {
  game_.players_ = std::move(players);
}

NodeId GameBuilder::terminal(Payoff payoff) {
  game_.nodes_.emplace_back(TerminalNode{std::move(payoff)});
  return NodeId{game_.nodes_.size() - 1};
}

NodeId GameBuilder::decision(PlayerId owner, std::vector<Action> actions) {
  game_.nodes_.emplace_back(DecisionNode{owner, std::move(actions)});
  return NodeId{game_.nodes_.size() - 1};
}

NodeId GameBuilder::chance(std::vector<ChanceBranch> branches) {
  game_.nodes_.emplace_back(ChanceNode{std::move(branches)});
  return NodeId{game_.nodes_.size() - 1};
}

GameBuilder& GameBuilder::set_root(NodeId root) {
  game_.root_ = root;
  root_set_ = true;
  return *this;
}

ExtensiveGame GameBuilder::build() const& {
  ExtensiveGame g = game_;
  // Default root: the last node added, which is the top of a bottom-up build.
  if (!root_set_ && !g.nodes_.empty()) g.root_ = NodeId{g.nodes_.size() - 1};
  return g;
}

ExtensiveGame GameBuilder::build() && {
  if (!root_set_ && !game_.nodes_.empty()) game_.root_ = NodeId{game_.nodes_.size() - 1};
  return std::move(game_);
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    os << "\n  [" << v.rule << "] node " << v.node.value << ": " << v.message;
  }
  return os.str();
}

ValidationReport validate_game(const ExtensiveGame& game) {
  ValidationReport report;
  auto flag = [&](const char* rule, NodeId id, std::string msg) {
    report.violations.push_back({rule, id, std::move(msg)});
  };

  if (game.num_players() == 0) flag(rules::kNoPlayers, NodeId{0}, "game declares no players");
  if (game.num_nodes() == 0) {
    flag(rules::kEmpty, NodeId{0}, "game has no nodes");
    return report;
  }
  if (!game.contains(game.root())) {
    flag(rules::kEmpty, game.root(), "root id out of range");
    return report;
  }

  const std::size_t n = game.num_nodes();
  std::vector<std::size_t> parents(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId id{i};
    for (const NodeId child : game.children(id)) {
      if (!game.contains(child)) {
        flag(rules::kDanglingChild, id,
             "child id " + std::to_string(child.value) + " does not exist");
      } else {
        ++parents[child.value];
      }
    }

    std::visit(
        Overloaded{
            [&](const DecisionNode& d) {
              if (d.actions.empty()) flag(rules::kNoActions, id, "decision node has no actions");
              if (d.owner.index >= game.num_players()) {
                flag(rules::kBadOwner, id,
                     "owner " + std::to_string(d.owner.index) + " is not a declared player");
              }
              std::set<std::string> labels;
              for (const auto& a : d.actions) {
                if (!labels.insert(a.label).second) {
                  flag(rules::kDuplicateLabel, id, "duplicate action label '" + a.label + "'");
                }
              }
            },
            [&](const ChanceNode& c) {
              if (c.branches.empty()) flag(rules::kNoActions, id, "chance node has no branches");
              std::set<std::string> labels;
              double total = 0.0;
              for (const auto& b : c.branches) {
                if (!labels.insert(b.label).second) {
                  flag(rules::kDuplicateLabel, id, "duplicate branch label '" + b.label + "'");
                }
                if (!(b.probability >= 0.0 && b.probability <= 1.0)) {
                  flag(rules::kProbabilityRange, id,
                       "branch '" + b.label + "' probability outside [0,1]");
                }
                total += b.probability;
              }
              if (!c.branches.empty() && !(std::abs(total - 1.0) <= kTolerance)) {
                flag(rules::kProbabilitySum, id,
                     "probabilities sum to " + format_csv(total) + ", not 1");
              }
            },
            [&](const TerminalNode& t) {
              if (t.payoff.size() != game.num_players()) {
                flag(rules::kPayoffLength, id,
                     "payoff has " + std::to_string(t.payoff.size()) + " entries for " +
                         std::to_string(game.num_players()) + " players");
              }
            },
        },
        game.node(id));
  }

  // Rooted tree: root has no parent, every other node exactly one, and all
  // nodes are reachable (which with the parent counts rules out cycles).
  if (parents[game.root().value] != 0) {
    flag(rules::kNotATree, game.root(), "root has an incoming edge (cycle)");
  }
  std::vector<bool> reached(n, false);
  preorder(game, [&](NodeId id, const auto&) { reached[id.value] = true; });
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId id{i};
    if (id != game.root() && parents[i] > 1) {
      flag(rules::kNotATree, id, "node has " + std::to_string(parents[i]) + " parents");
    }
    if (!reached[i]) flag(rules::kUnreachable, id, "node is not reachable from the root");
  }
  return report;
}

void require_valid(const ExtensiveGame& game) {
  const ValidationReport report = validate_game(game);
  if (!report.ok()) throw InvalidInput("invalid game: " + report.summary());
}

std::vector<TerminalOutcome> terminal_outcomes(const ExtensiveGame& game) {
  require_valid(game);
  std::vector<TerminalOutcome> out;
  preorder(game, [&](NodeId id, const std::vector<std::string>& path) {
    if (const auto* t = std::get_if<TerminalNode>(&game.node(id))) {
      out.push_back({path, id, t->payoff});
    }
  });
  return out;
}

ExtensiveGame restrict_actions(const ExtensiveGame& game, PlayerId player,
                               const std::string& label) {
  require_valid(game);
  GameBuilder builder(game.players());
  std::function<NodeId(NodeId)> copy = [&](NodeId id) -> NodeId {
    return std::visit(
        Overloaded{
            [&](const DecisionNode& d) {
              std::vector<Action> kept;
              const bool restrict = d.owner == player && game.action_index(id, label) != ExtensiveGame::npos;
              for (const auto& a : d.actions) {
                if (restrict && a.label != label) continue;
                kept.push_back({a.label, copy(a.child)});
              }
              return builder.decision(d.owner, std::move(kept));
            },
            [&](const ChanceNode& c) {
              std::vector<ChanceBranch> branches;
              for (const auto& b : c.branches) {
                branches.push_back({b.label, b.probability, copy(b.child)});
              }
              return builder.chance(std::move(branches));
            },
            [&](const TerminalNode& t) { return builder.terminal(t.payoff); },
        },
        game.node(id));
  };
  const NodeId root = copy(game.root());
  builder.set_root(root);
  return std::move(builder).build();
}

std::vector<std::string> path_to(const ExtensiveGame& game, NodeId target) {
  std::vector<std::string> found;
  preorder(game, [&](NodeId id, const std::vector<std::string>& path) {
    if (id == target) found = path;
  });
  return found;
}

std::string join_path(const std::vector<std::string>& path, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += sep;
    out += path[i];
  }
  return out;
}

}  // namespace regugame
