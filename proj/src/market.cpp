#include "regugame/market.hpp"

#include <cmath>

#include "regugame/errors.hpp"

namespace regugame {

MarketParams MarketParams::baseline() {
  MarketParams p;
  p.price_organic = 12;
  p.price_conventional = 8;
  p.cost_organic = 7;
  p.cost_conventional = 3;
  p.utility_organic = 14;
  p.utility_conventional = 8;
  p.audit_prob = 0.5;
  return p;
}

MarketParams MarketParams::scaled(double factor) const {
  MarketParams p = *this;
  for (double* field : {&p.price_organic, &p.price_conventional, &p.cost_organic, &p.cost_conventional,
                        &p.utility_organic, &p.utility_conventional, &p.monitor_cost, &p.penalty,
                        &p.reputation_loss}) {
    *field *= factor;
  }
  return p;
}

std::vector<std::string> params_problems(const MarketParams& p) {
  std::vector<std::string> out;
  for (double v : {p.price_organic, p.price_conventional, p.cost_organic, p.cost_conventional,
                   p.utility_organic, p.utility_conventional, p.monitor_cost, p.penalty,
                   p.reputation_loss, p.audit_prob}) {
    if (!std::isfinite(v)) {
      out.emplace_back("all parameters must be finite");
      return out;
    }
  }
  if (p.price_organic < p.price_conventional) out.emplace_back("price_organic must be >= price_conventional");
  if (!(p.cost_organic > p.cost_conventional)) out.emplace_back("cost_organic must exceed cost_conventional");
  if (p.cost_conventional < 0) out.emplace_back("cost_conventional must be >= 0");
  if (p.utility_organic < p.utility_conventional) {
    out.emplace_back("utility_organic must be >= utility_conventional");
  }
  if (p.monitor_cost < 0) out.emplace_back("monitor_cost must be >= 0");
  if (p.penalty < 0) out.emplace_back("penalty must be >= 0");
  if (p.reputation_loss < 0) out.emplace_back("reputation_loss must be >= 0");
  if (p.audit_prob < 0 || p.audit_prob > 1) out.emplace_back("audit_prob must lie in [0, 1]");
  return out;
}

void require_valid(const MarketParams& params) {
  const auto problems = params_problems(params);
  if (problems.empty()) return;
  std::string msg = "invalid market parameters:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw InvalidInput(msg);
}

namespace {

double read(const nlohmann::json& doc, const char* key, bool required, double fallback) {
  if (!doc.contains(key)) {
    if (required) throw InvalidInput(std::string("params: missing field '") + key + "'");
    return fallback;
  }
  const auto& v = doc.at(key);
  if (!v.is_number()) throw InvalidInput(std::string("params.") + key + ": expected a number");
  return v.get<double>();
}

}  // namespace

MarketParams params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("params: expected a JSON object");
  MarketParams p;
  p.price_organic = read(doc, "price_organic", true, 0);
  p.price_conventional = read(doc, "price_conventional", true, 0);
  p.cost_organic = read(doc, "cost_organic", true, 0);
  p.cost_conventional = read(doc, "cost_conventional", true, 0);
  p.utility_organic = read(doc, "utility_organic", true, 0);
  p.utility_conventional = read(doc, "utility_conventional", true, 0);
  p.monitor_cost = read(doc, "monitor_cost", true, 0);
  p.penalty = read(doc, "penalty", true, 0);
  p.reputation_loss = read(doc, "reputation_loss", false, 0);
  p.audit_prob = read(doc, "audit_prob", false, 0);
  return p;
}

nlohmann::json params_to_json(const MarketParams& p) {
  return {
      {"price_organic", p.price_organic},
      {"price_conventional", p.price_conventional},
      {"cost_organic", p.cost_organic},
      {"cost_conventional", p.cost_conventional},
      {"utility_organic", p.utility_organic},
      {"utility_conventional", p.utility_conventional},
      {"monitor_cost", p.monitor_cost},
      {"penalty", p.penalty},
      {"reputation_loss", p.reputation_loss},
      {"audit_prob", p.audit_prob},
  };
}

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::kConsumer: return "consumer";
    case Scenario::kReputation: return "reputation";
    case Scenario::kThirdParty: return "third-party";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "consumer") return Scenario::kConsumer;
  if (name == "reputation") return Scenario::kReputation;
  if (name == "third-party") return Scenario::kThirdParty;
  throw InvalidInput("unknown scenario '" + std::string(name) + "' (expected consumer, reputation or third-party)");
}

}  // namespace regugame
