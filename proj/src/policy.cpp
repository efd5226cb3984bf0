#include "regugame/policy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "regugame/errors.hpp"
#include "regugame/scenarios.hpp"
#include "regugame/solvers.hpp"

namespace regugame {

std::string_view to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kAuditProb: return "r";
    case SweepParameter::kPenalty: return "p";
    case SweepParameter::kMonitorCost: return "m";
    case SweepParameter::kReputationLoss: return "t";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  if (name == "r") return SweepParameter::kAuditProb;
  if (name == "p") return SweepParameter::kPenalty;
  if (name == "m") return SweepParameter::kMonitorCost;
  if (name == "t") return SweepParameter::kReputationLoss;
  throw InvalidInput("unknown sweep parameter '" + std::string(name) + "' (expected r, p, m or t)");
}

std::string_view to_string(CrossCheck check) {
  switch (check) {
    case CrossCheck::kAgrees: return "agrees";
    case CrossCheck::kDisagrees: return "disagrees";
    case CrossCheck::kTie: return "tie";
  }
  return "?";
}

namespace {

double& slot(MarketParams& p, SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kAuditProb: return p.audit_prob;
    case SweepParameter::kPenalty: return p.penalty;
    case SweepParameter::kMonitorCost: return p.monitor_cost;
    case SweepParameter::kReputationLoss: return p.reputation_loss;
  }
  return p.audit_prob;
}

SweepRow row_for(const MarketParams& p, double value, SweepParameter parameter, Scenario scenario) {
  const ThresholdReport report = threshold_report(p, scenario);
  SweepRow row;
  row.value = value;
  row.verdict = report.verdict;
  row.threshold = report.p_min;
  row.honest = p.price_organic - p.cost_organic;
  switch (scenario) {
    case Scenario::kThirdParty:
      row.dishonest = dishonest_expected_payoff(p);
      break;
    case Scenario::kConsumer:
      row.dishonest = p.price_organic - p.penalty - p.cost_conventional;
      if (parameter == SweepParameter::kMonitorCost) row.threshold = *report.m_max;
      break;
    case Scenario::kReputation:
      row.dishonest = -p.penalty - p.monitor_cost;
      if (parameter == SweepParameter::kReputationLoss) row.threshold = *report.t_min;
      break;
  }
  return row;
}

}  // namespace

void require_valid(const SweepSpec& spec) {
  if (spec.grid.empty()) throw InvalidInput("sweep grid is empty");
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double v = spec.grid[i];
    if (!std::isfinite(v)) throw InvalidInput("sweep grid values must be finite");
    if (i > 0 && !(v > spec.grid[i - 1])) throw InvalidInput("sweep grid must be strictly increasing");
    if (v < 0) throw InvalidInput("sweep grid values must be >= 0");
    if (spec.parameter == SweepParameter::kAuditProb && v > 1) {
      throw InvalidInput("audit probability grid must lie in [0, 1]");
    }
  }
  require_valid(spec.fixed);
}

std::vector<double> linear_grid(double start, double stop, int steps) {
  if (steps < 1) throw InvalidInput("grid needs at least one step");
  if (steps == 1) return {start};
  std::vector<double> out;
  const double n = steps - 1;
  // Blend the endpoints so values like 0.6 come out exactly as written.
  for (int i = 0; i < steps; ++i) out.push_back((start * (n - i) + stop * i) / n);
  return out;
}

std::vector<SweepRow> sweep(const SweepSpec& spec, Scenario scenario) {
  require_valid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(spec.grid.size());
  for (double v : spec.grid) {
    MarketParams p = spec.fixed;
    slot(p, spec.parameter) = v;
    rows.push_back(row_for(p, v, spec.parameter, scenario));
  }
  return rows;
}

std::vector<SweepRow> penalty_sweep(const MarketParams& fixed, const std::vector<double>& r_grid) {
  for (double r : r_grid) {
    if (r <= 0.0) throw DomainError("penalty sweep requires r > 0 (penalty never applied at r = 0)");
  }
  return sweep({SweepParameter::kAuditProb, r_grid, fixed}, Scenario::kThirdParty);
}

ExtensiveGame equilibrium_path_game(const MarketParams& params, Scenario scenario) {
  ExtensiveGame game = build_scenario_game(params, scenario);
  if (scenario != Scenario::kThirdParty) game = restrict_actions(game, kConsumerId, labels::kMonitor);
  return restrict_actions(game, kConsumerId, labels::kBuy);
}

Classification classify_equilibrium(const MarketParams& params, Scenario scenario) {
  Classification out;
  out.report = threshold_report(params, scenario);
  const ExtensiveGame game = equilibrium_path_game(params, scenario);
  const Solution sol = backward_induction(game, TieBreak::kFirstDeclared);
  out.solver_honest = chosen_label(game, sol, game.root()) == labels::kHonest;
  if (out.report.verdict == Verdict::kTie) {
    out.cross_check = CrossCheck::kTie;
  } else {
    const bool honest_verdict = out.report.verdict == Verdict::kHonestTrade;
    out.cross_check = honest_verdict == out.solver_honest ? CrossCheck::kAgrees : CrossCheck::kDisagrees;
  }
  return out;
}

VerdictGrid feasibility_grid(const MarketParams& params, const std::vector<double>& r_grid,
                             const std::vector<double>& p_grid) {
  require_valid(SweepSpec{SweepParameter::kAuditProb, r_grid, params});
  require_valid(SweepSpec{SweepParameter::kPenalty, p_grid, params});
  VerdictGrid grid{r_grid, p_grid, {}};
  grid.cells.reserve(r_grid.size() * p_grid.size());
  for (double r : r_grid) {
    for (double pen : p_grid) {
      MarketParams cell = params;
      cell.audit_prob = r;
      cell.penalty = pen;
      grid.cells.push_back(third_party_thresholds(cell).verdict);
    }
  }

  const std::size_t nr = r_grid.size(), np = p_grid.size();
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      if (grid.at(i, j) != Verdict::kHonestTrade) continue;
      const bool up = j + 1 == np || grid.at(i, j + 1) == Verdict::kHonestTrade;
      const bool right = i + 1 == nr || grid.at(i + 1, j) == Verdict::kHonestTrade;
      if (!up || !right) {
        throw std::logic_error("honest region not upward-closed at r=" + std::to_string(r_grid[i]) +
                               ", p=" + std::to_string(p_grid[j]));
      }
    }
  }
  return grid;
}

}  // namespace regugame
