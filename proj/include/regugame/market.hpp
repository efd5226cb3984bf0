#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace regugame {

// Economic parameters shared by the three producer/consumer scenarios.
// Currency and utility fields are in the same monetary unit.
struct MarketParams {
  double price_organic = 0.0;         // a
  double price_conventional = 0.0;    // d
  double cost_organic = 0.0;          // K_o
  double cost_conventional = 0.0;     // K_c
  double utility_organic = 0.0;       // s
  double utility_conventional = 0.0;  // f
  double monitor_cost = 0.0;          // m
  double penalty = 0.0;               // p
  double reputation_loss = 0.0;       // t
  double audit_prob = 0.0;            // r

  // c = K_o - K_c, the extra cost of producing organically.
  [[nodiscard]] double cost_gap() const { return cost_organic - cost_conventional; }

  // a=12, d=8, K_o=7, K_c=3, s=14, f=8; m=p=t=0, r=0.5.
  static MarketParams baseline();

  // Every currency/utility field multiplied by `factor`; audit_prob unchanged.
  [[nodiscard]] MarketParams scaled(double factor) const;

  bool operator==(const MarketParams&) const = default;
};

// Human-readable descriptions of every violated invariant (empty when valid).
std::vector<std::string> params_problems(const MarketParams& params);

// Throws InvalidInput listing the problems.
void require_valid(const MarketParams& params);

// All fields required except reputation_loss and audit_prob (default 0).
// Throws InvalidInput on missing/mistyped fields; does not check invariants.
MarketParams params_from_json(const nlohmann::json& doc);
nlohmann::json params_to_json(const MarketParams& params);

enum class Scenario { kConsumer, kReputation, kThirdParty };

// "consumer", "reputation", "third-party"
std::string_view to_string(Scenario scenario);
Scenario parse_scenario(std::string_view name);

}  // namespace regugame
