#include "regugame/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <gtest/gtest.h>

#include "random_games.hpp"
#include "regugame/errors.hpp"
#include "regugame/market.hpp"
#include "regugame/scenarios.hpp"

namespace regugame {
namespace {

// Copies the subtree of `src` rooted at `id` into `b`, mapping payoffs.
NodeId graft(GameBuilder& b, const ExtensiveGame& src, NodeId id,
             const std::function<Payoff(const Payoff&)>& map = [](const Payoff& p) { return p; }) {
  const Node& n = src.node(id);
  if (const auto* t = std::get_if<TerminalNode>(&n)) return b.terminal(map(t->payoff));
  if (const auto* c = std::get_if<ChanceNode>(&n)) {
    std::vector<ChanceBranch> branches;
    for (const auto& br : c->branches) branches.push_back({br.label, br.probability, graft(b, src, br.child, map)});
    return b.chance(std::move(branches));
  }
  const auto& d = std::get<DecisionNode>(n);
  std::vector<Action> actions;
  for (const auto& a : d.actions) actions.push_back({a.label, graft(b, src, a.child, map)});
  return b.decision(d.owner, std::move(actions));
}

ExtensiveGame affine(const ExtensiveGame& g, double scale, const std::vector<double>& shift) {
  GameBuilder b(g.players());
  b.set_root(graft(b, g, g.root(), [&](const Payoff& p) {
    Payoff q = p;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = scale * q[i] + shift[i];
    return q;
  }));
  return std::move(b).build();
}

TEST(BackwardInduction, SingleDecisionTakesMax) {
  GameBuilder b({"P1"});
  const NodeId hi = b.terminal({5});
  const NodeId lo = b.terminal({3});
  b.set_root(b.decision(PlayerId{0}, {{"hi", hi}, {"lo", lo}}));
  const ExtensiveGame g = b.build();
  const Solution sol = backward_induction(g);
  EXPECT_DOUBLE_EQ(sol.value(g.root())[0], 5.0);
  EXPECT_EQ(chosen_label(g, sol, g.root()), "hi");
  EXPECT_TRUE(sol.tie_log.empty());
}

TEST(BackwardInduction, ChanceNodeAverages) {
  GameBuilder b({"P1"});
  const NodeId x = b.terminal({2});
  const NodeId y = b.terminal({4});
  b.chance({{"x", 0.5, x}, {"y", 0.5, y}});
  const ExtensiveGame g = b.build();
  EXPECT_DOUBLE_EQ(backward_induction(g).value(g.root())[0], 3.0);
}

TEST(BackwardInduction, ThirdPartyBaselineFraudWhenUnpunished) {
  MarketParams p = MarketParams::baseline();
  p.penalty = 0;
  p.audit_prob = 0.5;
  const ExtensiveGame g = restrict_actions(build_third_party_game(p), kConsumerId, labels::kBuy);
  const Solution sol = backward_induction(g);
  const auto& root = std::get<DecisionNode>(g.node(g.root()));
  // Hand evaluation: 0.5(8 - 0 - 3) + 0.5(12 - 3) = 7 against honest 12 - 7 = 5.
  EXPECT_NEAR(sol.value(root.actions[1].child)[0], 7.0, 1e-12);
  EXPECT_NEAR(sol.value(root.actions[0].child)[0], 5.0, 1e-12);
  EXPECT_EQ(chosen_label(g, sol, g.root()), labels::kFraud);
}

TEST(BackwardInduction, TieBreakRules) {
  GameBuilder b({"P1"});
  const NodeId z = b.terminal({1});
  const NodeId a = b.terminal({1});
  b.set_root(b.decision(PlayerId{0}, {{"zeta", z}, {"alpha", a}}));
  const ExtensiveGame g = b.build();
  const Solution first = backward_induction(g, TieBreak::kFirstDeclared);
  const Solution lex = backward_induction(g, TieBreak::kLexicographic);
  EXPECT_EQ(chosen_label(g, first, g.root()), "zeta");
  EXPECT_EQ(chosen_label(g, lex, g.root()), "alpha");
  ASSERT_EQ(first.tie_log.size(), 1u);
  EXPECT_EQ(first.tie_log[0], g.root());
}

TEST(BackwardInduction, RejectsInvalidGame) {
  GameBuilder b({"P1"});
  b.decision(PlayerId{0}, {});
  EXPECT_THROW(backward_induction(b.build()), InvalidInput);
}

TEST(BruteForceSpne, UniqueWithoutTies) {
  GameBuilder b({"A", "B"});
  const NodeId t1 = b.terminal({3, 1});
  const NodeId t2 = b.terminal({0, 2});
  const NodeId t3 = b.terminal({2, 0});
  const NodeId bnode = b.decision(PlayerId{1}, {{"l", t1}, {"r", t2}});
  b.set_root(b.decision(PlayerId{0}, {{"in", bnode}, {"out", t3}}));
  const ExtensiveGame g = b.build();
  const auto spne = brute_force_spne(g);
  ASSERT_EQ(spne.size(), 1u);
  EXPECT_EQ(spne[0], profile_of(g, backward_induction(g)));
  EXPECT_EQ(spne[0], (StrategyProfile{1, 1}));  // out, r
}

TEST(BruteForceSpne, TieDuplicatesProfiles) {
  GameBuilder b({"A"});
  const NodeId x = b.terminal({4});
  const NodeId y = b.terminal({4});
  b.set_root(b.decision(PlayerId{0}, {{"x", x}, {"y", y}}));
  EXPECT_EQ(brute_force_spne(b.build()).size(), 2u);
}

TEST(BruteForceSpne, EnforcesProfileBound) {
  testing::RandomTreeOptions opts;
  opts.terminal_prob = 0.0;
  opts.chance_prob = 0.0;
  opts.max_profiles = static_cast<std::size_t>(-1);
  const ExtensiveGame g = testing::RandomTreeGenerator(3, opts).next();
  ASSERT_GT(count_profiles(g), 10u);
  EXPECT_THROW(brute_force_spne(g, 10), DomainError);
}

TEST(BruteForceSpne, ContainsBackwardInductionOnRandomTrees) {
  testing::RandomTreeGenerator gen(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const ExtensiveGame g = gen.next();
    const auto spne = brute_force_spne(g);
    for (TieBreak tb : {TieBreak::kFirstDeclared, TieBreak::kLexicographic}) {
      const StrategyProfile bi = profile_of(g, backward_induction(g, tb));
      EXPECT_NE(std::find(spne.begin(), spne.end(), bi), spne.end()) << "trial " << trial;
    }
    const Solution sol = backward_induction(g);
    if (sol.tie_log.empty()) EXPECT_EQ(spne.size(), 1u) << "trial " << trial;
  }
}

TEST(SolutionProperties, DecisionValuesAreMoverMaxima) {
  testing::RandomTreeGenerator gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtensiveGame g = gen.next();
    const Solution sol = backward_induction(g);
    for (NodeId id : g.decision_nodes()) {
      const auto& d = std::get<DecisionNode>(g.node(id));
      double best = -1e300;
      for (const auto& a : d.actions) best = std::max(best, sol.value(a.child)[d.owner.index]);
      EXPECT_DOUBLE_EQ(sol.value(id)[d.owner.index], best);
      EXPECT_EQ(sol.value(d.actions[sol.chosen_index(id)].child), sol.value(id));
    }
    // Values agree with evaluating the chosen profile directly.
    const auto values = evaluate_profile(g, profile_of(g, sol));
    EXPECT_EQ(values[g.root().value], sol.value(g.root()));
  }
}

TEST(SolutionProperties, RootValueIndependentOfTieBreakWithoutTies) {
  testing::RandomTreeGenerator gen(4242);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ExtensiveGame g = gen.next();
    const Solution first = backward_induction(g, TieBreak::kFirstDeclared);
    if (!first.tie_log.empty()) continue;
    ++checked;
    const Solution lex = backward_induction(g, TieBreak::kLexicographic);
    EXPECT_EQ(first.value(g.root()), lex.value(g.root()));
    EXPECT_EQ(first.chosen, lex.chosen);
  }
  EXPECT_GT(checked, 20);
}

TEST(SolutionProperties, PositiveAffineTransformPreservesChoices) {
  testing::RandomTreeGenerator gen(2718);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtensiveGame g = gen.next();
    const Solution base = backward_induction(g);
    const double scale = 0.5 + trial % 5;
    const std::vector<double> shift{3.0 - trial % 7, -2.0 + trial % 3};
    const ExtensiveGame h = affine(g, scale, shift);
    const Solution moved = backward_induction(h);
    EXPECT_EQ(base.chosen, moved.chosen) << "trial " << trial;
    EXPECT_EQ(base.tie_log, moved.tie_log);
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_NEAR(moved.node_values[i][k], scale * base.node_values[i][k] + shift[k], 1e-9);
      }
    }
  }
}

TEST(SolutionProperties, RootValueLinearInBranchProbability) {
  testing::RandomTreeOptions opts;
  opts.max_depth = 3;
  testing::RandomTreeGenerator gen(31415, opts);
  for (int trial = 0; trial < 50; ++trial) {
    const ExtensiveGame left = gen.next();
    const ExtensiveGame right = gen.next();
    auto root_value = [&](double prob) {
      GameBuilder b(left.players());
      const NodeId l = graft(b, left, left.root());
      const NodeId r = graft(b, right, right.root());
      b.set_root(b.chance({{"l", prob, l}, {"r", 1.0 - prob, r}}));
      const ExtensiveGame g = std::move(b).build();
      return backward_induction(g).value(g.root());
    };
    const Payoff v0 = root_value(0.0), v1 = root_value(1.0), vq = root_value(0.3);
    for (std::size_t k = 0; k < v0.size(); ++k) EXPECT_NEAR(vq[k], 0.3 * v1[k] + 0.7 * v0[k], 1e-12);
  }
}

// Baseline consumer-monitoring game: the four consumer purchase nodes.
std::vector<NodeId> purchase_nodes(const ExtensiveGame& g) {
  std::vector<NodeId> out;
  for (NodeId id : g.decision_nodes()) {
    if (g.action_index(id, labels::kBuy) != ExtensiveGame::npos) out.push_back(id);
  }
  return out;
}

TEST(StrictDominance, BuyVersusDontBuyAtBaseline) {
  const ExtensiveGame g = build_consumer_monitoring_game(MarketParams::baseline());
  const auto nodes = purchase_nodes(g);
  ASSERT_EQ(nodes.size(), 4u);
  // honest/monitor: 14-12-0 > -0; honest/no-monitor: 2 > 0;
  // fraud/monitor: f-d-m = -m equals -m; fraud/no-monitor: f-d = 0 equals 0.
  EXPECT_TRUE(strictly_dominates(g, nodes[0], labels::kBuy, labels::kDontBuy));
  EXPECT_TRUE(strictly_dominates(g, nodes[1], labels::kBuy, labels::kDontBuy));
  EXPECT_FALSE(strictly_dominates(g, nodes[2], labels::kBuy, labels::kDontBuy));
  EXPECT_FALSE(strictly_dominates(g, nodes[3], labels::kBuy, labels::kDontBuy));
}

TEST(StrictDominance, BuyDominatesEverywhereWhenConventionalIsWorthMore) {
  MarketParams p = MarketParams::baseline();
  p.monitor_cost = 1;
  p.utility_conventional = 9;
  const ExtensiveGame g = build_consumer_monitoring_game(p);
  for (NodeId id : purchase_nodes(g)) EXPECT_TRUE(strictly_dominates(g, id, labels::kBuy, labels::kDontBuy));
}

TEST(StrictDominance, EqualPayoffsAndSubgames) {
  GameBuilder b({"A", "B"});
  const NodeId x = b.terminal({1, 0});
  const NodeId y = b.terminal({1, 5});
  const NodeId same = b.decision(PlayerId{0}, {{"x", x}, {"y", y}});
  EXPECT_FALSE(strictly_dominates(b.build(), same, "x", "y"));

  // Root producer choice against every consumer continuation.
  const ExtensiveGame g = build_consumer_monitoring_game(MarketParams::baseline());
  EXPECT_FALSE(strictly_dominates(g, g.root(), labels::kFraud, labels::kHonest));
  EXPECT_FALSE(strictly_dominates(g, g.root(), labels::kHonest, labels::kFraud));
  EXPECT_THROW(strictly_dominates(g, g.root(), "bribe", labels::kHonest), InvalidInput);
}

}  // namespace
}  // namespace regugame
