#include "regugame/game_json.hpp"

#include <functional>
#include <string>

#include "regugame/errors.hpp"

namespace regugame {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InvalidInput(where + ": expected a number");
  return v.get<double>();
}

std::string text(const json& v, const std::string& where) {
  if (!v.is_string()) throw InvalidInput(where + ": expected a string");
  return v.get<std::string>();
}

PlayerId owner_of(const json& v, const std::vector<std::string>& players, const std::string& where) {
  if (v.is_number_unsigned()) return PlayerId{v.get<std::size_t>()};
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (players[i] == name) return PlayerId{i};
    }
    throw InvalidInput(where + ": unknown player '" + name + "'");
  }
  throw InvalidInput(where + ": player must be an index or a declared name");
}

}  // namespace

ExtensiveGame game_from_json(const json& doc) {
  const json& players_doc = field(doc, "players", "game");
  if (!players_doc.is_array()) throw InvalidInput("game: 'players' must be an array");
  std::vector<std::string> players;
  for (const auto& p : players_doc) players.push_back(text(p, "game.players"));

  // Preorder ids: reserve the parent slot first, then fill children.
  struct Pending {
    std::string type;
    PlayerId owner;
    std::vector<std::string> labels;
    std::vector<double> probs;
    std::vector<std::size_t> children;
    Payoff payoff;
  };
  std::vector<Pending> pending;

  std::function<std::size_t(const json&, const std::string&)> parse =
      [&](const json& node, const std::string& where) -> std::size_t {
    const std::string type = text(field(node, "type", where), where + ".type");
    const std::size_t id = pending.size();
    pending.push_back({type, {}, {}, {}, {}, {}});
    if (type == "terminal") {
      const json& pay = field(node, "payoff", where);
      if (!pay.is_array()) throw InvalidInput(where + ".payoff: expected an array");
      Payoff payoff;
      for (const auto& x : pay) payoff.push_back(number(x, where + ".payoff"));
      pending[id].payoff = std::move(payoff);
      return id;
    }
    const bool decision = type == "decision";
    if (!decision && type != "chance") {
      throw InvalidInput(where + ": unknown node type '" + type + "'");
    }
    if (decision) pending[id].owner = owner_of(field(node, "player", where), players, where + ".player");
    const json& edges = field(node, decision ? "actions" : "branches", where);
    if (!edges.is_array()) throw InvalidInput(where + ": edges must be an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string at = where + "." + (decision ? "actions" : "branches") + "[" + std::to_string(k) + "]";
      const std::string label = text(field(edges[k], "label", at), at + ".label");
      const double prob = decision ? 0.0 : number(field(edges[k], "prob", at), at + ".prob");
      const std::size_t child = parse(field(edges[k], "child", at), at + ".child");
      pending[id].labels.push_back(label);
      pending[id].probs.push_back(prob);
      pending[id].children.push_back(child);
    }
    return id;
  };
  parse(field(doc, "root", "game"), "root");

  // GameBuilder appends in call order, so emit in preorder to keep ids.
  GameBuilder builder(players);
  for (auto& p : pending) {
    if (p.type == "terminal") {
      builder.terminal(std::move(p.payoff));
    } else if (p.type == "decision") {
      std::vector<Action> actions;
      for (std::size_t k = 0; k < p.labels.size(); ++k) actions.push_back({p.labels[k], NodeId{p.children[k]}});
      builder.decision(p.owner, std::move(actions));
    } else {
      std::vector<ChanceBranch> branches;
      for (std::size_t k = 0; k < p.labels.size(); ++k) {
        branches.push_back({p.labels[k], p.probs[k], NodeId{p.children[k]}});
      }
      builder.chance(std::move(branches));
    }
  }
  builder.set_root(NodeId{0});
  return std::move(builder).build();
}

json game_to_json(const ExtensiveGame& game) {
  require_valid(game);
  std::function<json(NodeId)> emit = [&](NodeId id) -> json {
    const Node& n = game.node(id);
    if (const auto* t = std::get_if<TerminalNode>(&n)) {
      return {{"type", "terminal"}, {"payoff", t->payoff}};
    }
    if (const auto* d = std::get_if<DecisionNode>(&n)) {
      json actions = json::array();
      for (const auto& a : d->actions) actions.push_back({{"label", a.label}, {"child", emit(a.child)}});
      return {{"type", "decision"}, {"player", d->owner.index}, {"actions", actions}};
    }
    const auto& c = std::get<ChanceNode>(n);
    json branches = json::array();
    for (const auto& b : c.branches) {
      branches.push_back({{"label", b.label}, {"prob", b.probability}, {"child", emit(b.child)}});
    }
    return {{"type", "chance"}, {"branches", branches}};
  };
  return {{"players", game.players()}, {"root", emit(game.root())}};
}

}  // namespace regugame
