#pragma once

#include "regugame/game.hpp"
#include "regugame/market.hpp"

namespace regugame {

// Player and action labels used by the scenario trees.
namespace labels {
inline constexpr const char* kProducer = "Producer";
inline constexpr const char* kConsumer = "Consumer";
inline constexpr const char* kHonest = "honest";
inline constexpr const char* kFraud = "fraud";
inline constexpr const char* kMonitor = "monitor";
inline constexpr const char* kNoMonitor = "no-monitor";
inline constexpr const char* kBuy = "buy";
inline constexpr const char* kDontBuy = "dont-buy";
inline constexpr const char* kAudited = "audited";
inline constexpr const char* kUnaudited = "unaudited";
}  // namespace labels

inline constexpr PlayerId kProducerId{0};
inline constexpr PlayerId kConsumerId{1};

// Producer picks honest/fraud, then the consumer picks monitor/no-monitor,
// then buy/dont-buy. A monitored fraud is fined p whether or not the
// consumer buys. Leaves are (producer, consumer):
//   honest  monitor    buy       (a-K_o, s-a-m)   dont-buy (-K_o, -m)
//   honest  no-monitor buy       (a-K_o, s-a)     dont-buy (-K_o, 0)
//   fraud   monitor    buy       (a-p-K_c, f-d-m) dont-buy (-p-K_c, -m)
//   fraud   no-monitor buy       (a-K_c, f-d)     dont-buy (-K_c, 0)
ExtensiveGame build_consumer_monitoring_game(const MarketParams& params);

// Same shape as the consumer-monitoring game, with monitored fraud costing
// the producer -p-m on both purchase outcomes and an unmonitored fraudulent
// purchase worth f-a-t to the consumer.
ExtensiveGame build_reputation_game(const MarketParams& params);

// Producer picks honest/fraud. Honest leads straight to the consumer's
// purchase choice; fraud leads to a chance node (audited with probability r,
// where the product is revealed as conventional and sold at d with fine p,
// else unaudited and sold at a).
ExtensiveGame build_third_party_game(const MarketParams& params);

ExtensiveGame build_scenario_game(const MarketParams& params, Scenario scenario);

}  // namespace regugame
