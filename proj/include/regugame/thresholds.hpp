#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regugame/market.hpp"

namespace regugame {

enum class Verdict {
  kHonestTrade,        // producer is honest and the consumer buys
  kFraudRisk,          // fraud is a best response for the producer
  kNoPureEquilibrium,  // no stable pure-strategy outcome
  kInfeasible,         // trade cannot happen (consumer never buys)
  kTie,                // parameters sit exactly on the deterrence boundary
};

std::string_view to_string(Verdict verdict);

struct Condition {
  std::string name;
  std::string inequality;  // instantiated, e.g. "14 > 12"
  bool satisfied = false;
};

struct ThresholdReport {
  Scenario scenario = Scenario::kConsumer;
  // Deterrence penalty; +inf when no finite penalty deters fraud.
  double p_min = 0.0;
  // Whether deterrence requires p strictly above p_min (otherwise p >= p_min).
  bool p_min_strict = true;
  std::optional<double> m_max;
  std::optional<double> t_min;
  std::optional<double> r_bound;
  std::vector<Condition> conditions;
  Verdict verdict = Verdict::kFraudRisk;
  // Verdict for the subgame without monitoring, where the scenario defines one.
  std::optional<Verdict> unmonitored_verdict;
  std::vector<std::string> notes;

  [[nodiscard]] const Condition* condition(std::string_view name) const;
};

// Consumer-financed monitoring: p_min = c (strict), m_max = s - f (strict),
// buy requires s > a. HonestTrade iff all three hold.
ThresholdReport spne_thresholds_consumer_model(const MarketParams& params);

// Reputation-loss model: C1 p > a - K_o + m, C2 s > a, C3 K_c < K_o,
// C4 t > f - a. HonestTrade when C1 and C2 hold under monitoring; the
// unmonitored subgame never has a pure equilibrium.
ThresholdReport reputation_conditions(const MarketParams& params);

// Honest producer payoff a - K_o.
double honest_payoff(const MarketParams& params);

// Fraudulent producer's expected payoff under random audits with the
// consumer always buying: r(d - p - K_c) + (1 - r)(a - K_c).
double dishonest_expected_payoff(const MarketParams& params);

// Least penalty meeting the audit incentive constraint
// a - K_o >= r(d - p - K_c) + (1 - r)(a - K_c), i.e. (d - a) + c/r, clamped
// at 0. Throws DomainError when r == 0 (a penalty is never applied).
double third_party_min_penalty(const MarketParams& params);

// Same solution before clamping; may be negative.
double third_party_min_penalty_unclamped(const MarketParams& params);

struct AuditBound {
  std::optional<double> bound;  // (2a - 2K_o + c) / (a - K_o + c)
  bool feasible = false;        // bound < 1 with a positive denominator
  bool denominator_sign_ok = false;
};

AuditBound r_feasibility_bound(const MarketParams& params);

// Random third-party audits. Verdict compares p against the audit
// constraint's boundary, Tie within kTolerance; r = 0 gives p_min = +inf.
ThresholdReport third_party_thresholds(const MarketParams& params);

ThresholdReport threshold_report(const MarketParams& params, Scenario scenario);

}  // namespace regugame
