#pragma once

#include <string_view>
#include <vector>

#include "regugame/game.hpp"
#include "regugame/market.hpp"
#include "regugame/thresholds.hpp"

namespace regugame {

enum class SweepParameter { kAuditProb, kPenalty, kMonitorCost, kReputationLoss };

// "r", "p", "m", "t"
std::string_view to_string(SweepParameter parameter);
SweepParameter parse_sweep_parameter(std::string_view name);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kAuditProb;
  std::vector<double> grid;
  MarketParams fixed;
};

// Throws InvalidInput unless the grid is nonempty, strictly increasing and
// inside the parameter's legal range.
void require_valid(const SweepSpec& spec);

struct SweepRow {
  double value = 0.0;
  double threshold = 0.0;  // scenario's binding threshold at this row
  Verdict verdict = Verdict::kFraudRisk;
  double honest = 0.0;
  double dishonest = 0.0;
};

// Evenly spaced grid with `steps` points from start to stop inclusive.
std::vector<double> linear_grid(double start, double stop, int steps);

// One row per grid value of the swept parameter.
std::vector<SweepRow> sweep(const SweepSpec& spec, Scenario scenario);

// Third-party minimum penalty over an audit-probability grid. Throws
// DomainError if any r <= 0.
std::vector<SweepRow> penalty_sweep(const MarketParams& fixed, const std::vector<double>& r_grid);

enum class CrossCheck { kAgrees, kDisagrees, kTie };
std::string_view to_string(CrossCheck check);

struct Classification {
  ThresholdReport report;
  bool solver_honest = false;  // backward induction picks "honest" at the root
  CrossCheck cross_check = CrossCheck::kAgrees;
};

// Scenario game with the consumer pinned to the path the threshold analysis
// assumes: always buy, and always monitor where monitoring is a choice.
ExtensiveGame equilibrium_path_game(const MarketParams& params, Scenario scenario);

// Threshold verdict plus a backward-induction cross-check on
// equilibrium_path_game. Boundary cases (verdict Tie) report CrossCheck::kTie.
Classification classify_equilibrium(const MarketParams& params, Scenario scenario);

struct VerdictGrid {
  std::vector<double> r_values;
  std::vector<double> p_values;
  std::vector<Verdict> cells;  // row-major: cells[i * p_values.size() + j] is (r_i, p_j)

  [[nodiscard]] Verdict at(std::size_t i, std::size_t j) const { return cells.at(i * p_values.size() + j); }
};

// Third-party verdicts over an (r, p) grid. Throws std::logic_error if the
// honest region is not upward-closed in p and in r.
VerdictGrid feasibility_grid(const MarketParams& params, const std::vector<double>& r_grid,
                             const std::vector<double>& p_grid);

}  // namespace regugame
