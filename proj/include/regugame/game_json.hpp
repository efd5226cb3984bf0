#pragma once

#include <json.hpp>

#include "regugame/game.hpp"

namespace regugame {

// Document layout:
//   {"players": ["Producer", "Consumer"], "root": <node>}
//   node = {"type": "decision", "player": 0 | "Producer",
//           "actions": [{"label": "...", "child": <node>}, ...]}
//        | {"type": "chance", "branches": [{"label": "...", "prob": 0.5, "child": <node>}, ...]}
//        | {"type": "terminal", "payoff": [1.0, -2.0]}
// Node ids are assigned in depth-first preorder.
//
// Throws InvalidInput on schema errors. The result is not validated; the
// caller decides what to do with validate_game's report.
ExtensiveGame game_from_json(const nlohmann::json& doc);

nlohmann::json game_to_json(const ExtensiveGame& game);

}  // namespace regugame
