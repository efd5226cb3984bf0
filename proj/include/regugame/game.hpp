#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace regugame {

struct PlayerId {
  std::size_t index = 0;
  auto operator<=>(const PlayerId&) const = default;
};

struct NodeId {
  std::size_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

using Payoff = std::vector<double>;

struct Action {
  std::string label;
  NodeId child;
};

struct ChanceBranch {
  std::string label;
  double probability = 0.0;
  NodeId child;
};

struct DecisionNode {
  PlayerId owner;
  std::vector<Action> actions;
};

struct ChanceNode {
  std::vector<ChanceBranch> branches;
};

struct TerminalNode {
  Payoff payoff;
};

// A node is exactly one of decision, chance or terminal, so the decision and
// terminal sets are disjoint by construction.
using Node = std::variant<DecisionNode, ChanceNode, TerminalNode>;

// Finite perfect-information game tree with optional chance nodes.
//
// Nodes live in an arena addressed by NodeId. Construction goes through
// GameBuilder; once built, the game is immutable. A built game is not
// guaranteed to be well formed: call validate_game() before solving.
class ExtensiveGame {
 public:
  ExtensiveGame() = default;

  [[nodiscard]] const std::vector<std::string>& players() const { return players_; }
  [[nodiscard]] std::size_t num_players() const { return players_.size(); }
  [[nodiscard]] std::size_t num_nodes() const { return nodes_.size(); }
  [[nodiscard]] NodeId root() const { return root_; }
  [[nodiscard]] const Node& node(NodeId id) const { return nodes_.at(id.value); }
  [[nodiscard]] bool contains(NodeId id) const { return id.value < nodes_.size(); }

  [[nodiscard]] bool is_decision(NodeId id) const {
    return std::holds_alternative<DecisionNode>(node(id));
  }
  [[nodiscard]] bool is_chance(NodeId id) const {
    return std::holds_alternative<ChanceNode>(node(id));
  }
  [[nodiscard]] bool is_terminal(NodeId id) const {
    return std::holds_alternative<TerminalNode>(node(id));
  }

  // Child node ids in declared order (empty for terminals).
  [[nodiscard]] std::vector<NodeId> children(NodeId id) const;

  // Decision nodes reachable from the root, depth-first in declared action
  // order. Strategy profiles are indexed by this ordering.
  [[nodiscard]] std::vector<NodeId> decision_nodes() const;

  // Index of `label` among the actions of decision node `id`, or npos.
  [[nodiscard]] std::size_t action_index(NodeId id, const std::string& label) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend class GameBuilder;

  std::vector<std::string> players_;
  std::vector<Node> nodes_;
  NodeId root_;
};

// Bottom-up builder: add children first, then their parent, then set_root.
class GameBuilder {
 public:
  explicit GameBuilder(std::vector<std::string> players);

  NodeId terminal(Payoff payoff);
  NodeId decision(PlayerId owner, std::vector<Action> actions);
  NodeId chance(std::vector<ChanceBranch> branches);

  // Id the next added node will receive.
  [[nodiscard]] NodeId next_id() const { return NodeId{game_.nodes_.size()}; }

  GameBuilder& set_root(NodeId root);
  [[nodiscard]] ExtensiveGame build() const&;
  [[nodiscard]] ExtensiveGame build() &&;

 private:
  ExtensiveGame game_;
  bool root_set_ = false;
};

struct Violation {
  std::string rule;
  NodeId node;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] std::string summary() const;
};

// Rule identifiers reported in Violation::rule.
namespace rules {
inline constexpr const char* kNoPlayers = "no-players";
inline constexpr const char* kEmpty = "empty-game";
inline constexpr const char* kDanglingChild = "dangling-child";
inline constexpr const char* kNotATree = "not-a-tree";
inline constexpr const char* kUnreachable = "unreachable-node";
inline constexpr const char* kNoActions = "no-actions";
inline constexpr const char* kDuplicateLabel = "duplicate-label";
inline constexpr const char* kBadOwner = "bad-owner";
inline constexpr const char* kProbabilityRange = "probability-range";
inline constexpr const char* kProbabilitySum = "probability-sum";
inline constexpr const char* kPayoffLength = "payoff-length";
}  // namespace rules

// Reports every violated structural invariant; never throws.
ValidationReport validate_game(const ExtensiveGame& game);

// Throws InvalidInput carrying the report summary unless the game is valid.
void require_valid(const ExtensiveGame& game);

struct TerminalOutcome {
  std::vector<std::string> path;  // action/branch labels from the root
  NodeId node;
  Payoff payoff;
};

// One entry per terminal node, depth-first in declared order.
std::vector<TerminalOutcome> terminal_outcomes(const ExtensiveGame& game);

// Copy of `game` in which every decision node of `player` that offers an
// action labelled `label` keeps only that action. Nodes cut off by the
// restriction are dropped and ids are renumbered.
ExtensiveGame restrict_actions(const ExtensiveGame& game, PlayerId player,
                               const std::string& label);

// Label path from the root to `id` (empty for the root).
std::vector<std::string> path_to(const ExtensiveGame& game, NodeId id);

std::string join_path(const std::vector<std::string>& path, const std::string& sep = "/");

}  // namespace regugame
