#include "regugame/scenarios.hpp"

namespace regugame {

namespace {

struct Leaf {
  double producer;
  double consumer;
};

// Consumer purchase node with the given buy / don't-buy leaves.
NodeId purchase(GameBuilder& b, Leaf buy, Leaf dont_buy) {
  const NodeId yes = b.terminal({buy.producer, buy.consumer});
  const NodeId no = b.terminal({dont_buy.producer, dont_buy.consumer});
  return b.decision(kConsumerId, {{labels::kBuy, yes}, {labels::kDontBuy, no}});
}

struct MonitoredLeaves {
  Leaf monitor_buy, monitor_dont, plain_buy, plain_dont;
};

NodeId monitoring_stage(GameBuilder& b, const MonitoredLeaves& l) {
  const NodeId watched = purchase(b, l.monitor_buy, l.monitor_dont);
  const NodeId unwatched = purchase(b, l.plain_buy, l.plain_dont);
  return b.decision(kConsumerId, {{labels::kMonitor, watched}, {labels::kNoMonitor, unwatched}});
}

ExtensiveGame two_stage_game(const MonitoredLeaves& honest, const MonitoredLeaves& fraud) {
  GameBuilder b({labels::kProducer, labels::kConsumer});
  const NodeId h = monitoring_stage(b, honest);
  const NodeId f = monitoring_stage(b, fraud);
  b.set_root(b.decision(kProducerId, {{labels::kHonest, h}, {labels::kFraud, f}}));
  return std::move(b).build();
}

MonitoredLeaves honest_leaves(const MarketParams& p) {
  const double a = p.price_organic, s = p.utility_organic, m = p.monitor_cost, ko = p.cost_organic;
  return {{a - ko, s - a - m}, {-ko, -m}, {a - ko, s - a}, {-ko, 0}};
}

}  // namespace

ExtensiveGame build_consumer_monitoring_game(const MarketParams& p) {
  require_valid(p);
  const double a = p.price_organic, d = p.price_conventional, f = p.utility_conventional;
  const double m = p.monitor_cost, pen = p.penalty, kc = p.cost_conventional;
  const MonitoredLeaves fraud{{a - pen - kc, f - d - m}, {-pen - kc, -m}, {a - kc, f - d}, {-kc, 0}};
  return two_stage_game(honest_leaves(p), fraud);
}

ExtensiveGame build_reputation_game(const MarketParams& p) {
  require_valid(p);
  const double a = p.price_organic, d = p.price_conventional, f = p.utility_conventional;
  const double m = p.monitor_cost, pen = p.penalty, kc = p.cost_conventional, t = p.reputation_loss;
  const MonitoredLeaves fraud{{-pen - m, f - d - m}, {-pen - m, -m}, {a - kc, f - a - t}, {-kc, 0}};
  return two_stage_game(honest_leaves(p), fraud);
}

ExtensiveGame build_third_party_game(const MarketParams& p) {
  require_valid(p);
  const double a = p.price_organic, d = p.price_conventional, s = p.utility_organic;
  const double f = p.utility_conventional, pen = p.penalty, ko = p.cost_organic, kc = p.cost_conventional;
  const double r = p.audit_prob;

  GameBuilder b({labels::kProducer, labels::kConsumer});
  const NodeId honest = purchase(b, {a - ko, s - a}, {-ko, 0});
  const NodeId audited = purchase(b, {d - pen - kc, f - d}, {-pen - kc, 0});
  const NodeId unaudited = purchase(b, {a - kc, f - a}, {-kc, 0});
  const NodeId audit = b.chance({{labels::kAudited, r, audited}, {labels::kUnaudited, 1.0 - r, unaudited}});
  b.set_root(b.decision(kProducerId, {{labels::kHonest, honest}, {labels::kFraud, audit}}));
  return std::move(b).build();
}

ExtensiveGame build_scenario_game(const MarketParams& params, Scenario scenario) {
  switch (scenario) {
    case Scenario::kConsumer: return build_consumer_monitoring_game(params);
    case Scenario::kReputation: return build_reputation_game(params);
    case Scenario::kThirdParty: return build_third_party_game(params);
  }
  return build_third_party_game(params);
}

}  // namespace regugame
