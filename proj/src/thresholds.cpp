#include "regugame/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "regugame/errors.hpp"
#include "regugame/numfmt.hpp"

namespace regugame {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHonestTrade: return "HonestTrade";
    case Verdict::kFraudRisk: return "FraudRisk";
    case Verdict::kNoPureEquilibrium: return "NoPureEquilibrium";
    case Verdict::kInfeasible: return "Infeasible";
    case Verdict::kTie: return "Tie";
  }
  return "unknown";
}

const Condition* ThresholdReport::condition(std::string_view name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string num(double x) { return format_short(x); }

Condition greater(std::string name, double lhs, double rhs) {
  return {std::move(name), num(lhs) + " > " + num(rhs), lhs > rhs};
}

Condition at_least(std::string name, double lhs, double rhs) {
  return {std::move(name), num(lhs) + " >= " + num(rhs), lhs >= rhs};
}

bool on_boundary(double x, double threshold) { return std::abs(x - threshold) <= kTolerance; }

}  // namespace

ThresholdReport spne_thresholds_consumer_model(const MarketParams& p) {
  require_valid(p);
  ThresholdReport r;
  r.scenario = Scenario::kConsumer;
  r.p_min = p.cost_gap();
  r.p_min_strict = true;
  r.m_max = p.utility_organic - p.utility_conventional;

  r.conditions.push_back(greater("buy", p.utility_organic, p.price_organic));
  r.conditions.push_back(greater("truthful", p.penalty, r.p_min));
  r.conditions.push_back({"monitor", num(p.monitor_cost) + " < " + num(*r.m_max), p.monitor_cost < *r.m_max});

  const bool buy = r.conditions[0].satisfied;
  const bool truthful = r.conditions[1].satisfied;
  const bool monitor = r.conditions[2].satisfied;
  if (!buy) {
    r.verdict = Verdict::kInfeasible;
  } else if (monitor && on_boundary(p.penalty, r.p_min)) {
    r.verdict = Verdict::kTie;
  } else {
    r.verdict = truthful && monitor ? Verdict::kHonestTrade : Verdict::kFraudRisk;
  }
  return r;
}

ThresholdReport reputation_conditions(const MarketParams& p) {
  require_valid(p);
  const double a = p.price_organic, ko = p.cost_organic, m = p.monitor_cost;
  ThresholdReport r;
  r.scenario = Scenario::kReputation;
  r.p_min = a - ko + m;
  r.p_min_strict = true;
  r.t_min = p.utility_conventional - a;

  r.conditions.push_back(greater("C1 monitored honesty", p.penalty, r.p_min));
  r.conditions.push_back(greater("C2 buy", p.utility_organic, a));
  r.conditions.push_back({"C3 cheating pays unmonitored",
                          num(p.cost_conventional) + " < " + num(ko), p.cost_conventional < ko});
  r.conditions.push_back(greater("C4 no purchase under suspected fraud", p.reputation_loss, *r.t_min));

  const bool c1 = r.conditions[0].satisfied;
  const bool c2 = r.conditions[1].satisfied;
  if (!c2) {
    r.verdict = Verdict::kInfeasible;
  } else if (on_boundary(p.penalty, r.p_min)) {
    r.verdict = Verdict::kTie;
  } else {
    r.verdict = c1 ? Verdict::kHonestTrade : Verdict::kFraudRisk;
  }
  r.unmonitored_verdict = Verdict::kNoPureEquilibrium;
  r.notes.push_back("comparing a-K_o with -p-m directly gives p > K_o-a-m = " + num(ko - a - m) +
                    "; C1 uses the stated threshold a-K_o+m = " + num(r.p_min));
  return r;
}

double honest_payoff(const MarketParams& p) {
  require_valid(p);
  return p.price_organic - p.cost_organic;
}

double dishonest_expected_payoff(const MarketParams& p) {
  require_valid(p);
  const double r = p.audit_prob;
  return r * (p.price_conventional - p.penalty - p.cost_conventional) +
         (1.0 - r) * (p.price_organic - p.cost_conventional);
}

double third_party_min_penalty_unclamped(const MarketParams& p) {
  require_valid(p);
  if (p.audit_prob <= 0.0) throw DomainError("deterrence infeasible: penalty never applied when audit_prob = 0");
  return (p.price_conventional - p.price_organic) + p.cost_gap() / p.audit_prob;
}

double third_party_min_penalty(const MarketParams& p) {
  return std::max(0.0, third_party_min_penalty_unclamped(p));
}

AuditBound r_feasibility_bound(const MarketParams& p) {
  require_valid(p);
  const double a = p.price_organic, ko = p.cost_organic, c = p.cost_gap();
  const double numerator = 2 * a - 2 * ko + c;
  const double denominator = a - ko + c;
  AuditBound out;
  if (denominator == 0.0) return out;
  out.bound = numerator / denominator;
  out.denominator_sign_ok = denominator > 0.0;
  out.feasible = out.denominator_sign_ok && *out.bound < 1.0;
  return out;
}

ThresholdReport third_party_thresholds(const MarketParams& p) {
  require_valid(p);
  ThresholdReport r;
  r.scenario = Scenario::kThirdParty;
  r.p_min_strict = false;

  const bool audits = p.audit_prob > 0.0;
  const double raw = audits ? third_party_min_penalty_unclamped(p) : std::numeric_limits<double>::infinity();
  r.p_min = audits ? std::max(0.0, raw) : raw;

  const AuditBound bound = r_feasibility_bound(p);
  r.r_bound = bound.bound;

  r.conditions.push_back(greater("buy", p.utility_organic, p.price_organic));
  r.conditions.push_back(at_least("incentive compatibility", honest_payoff(p), dishonest_expected_payoff(p)));
  r.conditions.push_back({"audit region",
                          bound.bound ? num(p.audit_prob) + " > " + num(*bound.bound) : "undefined",
                          bound.bound && bound.denominator_sign_ok && p.audit_prob > *bound.bound});

  if (!r.conditions[0].satisfied) {
    r.verdict = Verdict::kInfeasible;
  } else if (!audits) {
    r.verdict = Verdict::kFraudRisk;
  } else if (on_boundary(p.penalty, raw)) {
    r.verdict = Verdict::kTie;
  } else {
    r.verdict = p.penalty > raw ? Verdict::kHonestTrade : Verdict::kFraudRisk;
  }

  if (audits) {
    const double a = p.price_organic, ko = p.cost_organic, c = p.cost_gap(), rr = p.audit_prob;
    const double alternative = (p.price_conventional + (1 - rr) * (a - ko + c) - (a - ko)) / rr;
    r.notes.push_back("closed form (d + (1-r)(a-K_o+c) - (a-K_o))/r = " + num(alternative) +
                      " does not solve the incentive constraint; using (d-a) + c/r = " + num(raw));
  }
  if (!bound.denominator_sign_ok) {
    r.notes.push_back("audit region undefined: a - K_o + c <= 0");
  }
  return r;
}

ThresholdReport threshold_report(const MarketParams& params, Scenario scenario) {
  switch (scenario) {
    case Scenario::kConsumer: return spne_thresholds_consumer_model(params);
    case Scenario::kReputation: return reputation_conditions(params);
    case Scenario::kThirdParty: return third_party_thresholds(params);
  }
  return third_party_thresholds(params);
}

}  // namespace regugame
