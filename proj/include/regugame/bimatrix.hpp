#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace regugame {

// Two-player normal-form game with two actions each. Cell (i, j) holds the
// (row, column) payoffs when row plays action i and column plays action j.
struct Bimatrix2x2 {
  std::string row_player = "Row";
  std::string col_player = "Column";
  std::array<std::string, 2> row_actions{"1", "2"};
  std::array<std::string, 2> col_actions{"1", "2"};
  std::array<std::array<std::pair<double, double>, 2>, 2> payoffs{};

  [[nodiscard]] double row_payoff(int i, int j) const { return payoffs[i][j].first; }
  [[nodiscard]] double col_payoff(int i, int j) const { return payoffs[i][j].second; }
};

struct MixedEquilibrium {
  double row_prob = 0.0;  // probability row plays its first action
  double col_prob = 0.0;  // probability column plays its first action
  double row_value = 0.0;
  double col_value = 0.0;
};

struct BimatrixSolution {
  std::vector<std::pair<int, int>> pure_nash;  // (row action, column action), 0-based
  std::optional<MixedEquilibrium> mixed;
  // An indifference equation had a zero coefficient, so no unique interior mix exists.
  bool degenerate = false;
};

// Pure equilibria by best-response check on all four cells; the mixed
// equilibrium from the two indifference equations, reported only when both
// probabilities lie in [0, 1].
BimatrixSolution solve_bimatrix_2x2(const Bimatrix2x2& game);

enum class Side { kRow, kColumn };

// True iff `action_a` earns strictly more than `action_b` for `side` against
// both opposing actions. Throws InvalidInput for indices outside {0, 1}.
bool strictly_dominates(const Bimatrix2x2& game, Side side, int action_a, int action_b);

// {"row_player": "...", "col_player": "...", "row_actions": [..2..],
//  "col_actions": [..2..], "payoffs": [[[r,c],[r,c]],[[r,c],[r,c]]]}
// Labels are optional. Throws InvalidInput on schema errors.
Bimatrix2x2 bimatrix_from_json(const nlohmann::json& doc);

}  // namespace regugame
