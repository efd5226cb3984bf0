// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_games.hpp"
#include "regugame/bimatrix.hpp"
#include "regugame/errors.hpp"
#include "regugame/policy.hpp"
#include "regugame/scenarios.hpp"
#include "regugame/solvers.hpp"
#include "regugame/thresholds.hpp"

namespace {

using namespace regugame;
using Clock = std::chrono::steady_clock;

// Collects the first failure message; a criterion passes when it stays empty.
struct Check {
  std::string failure;

  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream ss;
    ss.precision(17);
    ss << what << ": got " << got << ", want " << want;
    expect(std::fabs(got - want) <= tol, ss.str());
  }
};

MarketParams with_rp(double r, double pen) {
  MarketParams p = MarketParams::baseline();
  p.audit_prob = r;
  p.penalty = pen;
  return p;
}

void table_reproduction(Check& c) {
  const auto start = Clock::now();
  const std::vector<double> rs{0.2, 0.4, 0.6, 0.8, 1.0};
  const std::vector<double> want{16, 6, 8.0 / 3.0, 1, 0};
  for (std::size_t i = 0; i < rs.size(); ++i) {
    c.near(third_party_min_penalty(with_rp(rs[i], 0)), want[i], 1e-9, "p_min at r=" + std::to_string(rs[i]));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
}

void honest_dishonest(Check& c) {
  const MarketParams base = MarketParams::baseline();
  c.expect(honest_payoff(base) == 5.0, "honest payoff not exactly 5");
  c.near(dishonest_expected_payoff(with_rp(0.4, 6)), 5, 1e-12, "dishonest at (0.4, 6)");
  std::mt19937 rng(20251018);
  std::uniform_real_distribution<double> r_dist(0.0, 1.0), p_dist(0.0, 30.0);
  for (int i = 0; i < 100; ++i) {
    const double r = r_dist(rng), pen = p_dist(rng);
    const MarketParams p = with_rp(r, pen);
    const double lib_slack = honest_payoff(p) - dishonest_expected_payoff(p);
    const double reduced_slack = 4 * r + r * pen - 4;
    c.near(lib_slack, reduced_slack, 1e-9, "slack at sample " + std::to_string(i));
    if (std::fabs(reduced_slack) > 1e-9) {
      c.expect((lib_slack >= 0) == (reduced_slack >= 0), "inequality direction at sample " + std::to_string(i));
    }
  }
}

void feasibility_bound(Check& c) {
  const AuditBound b = r_feasibility_bound(MarketParams::baseline());
  c.expect(b.bound.has_value(), "bound undefined");
  if (b.bound) c.near(*b.bound, 14.0 / 9.0, 1e-12, "r bound");
  c.expect(!b.feasible, "baseline reported feasible");
}

void purchase_condition(Check& c) {
  const ThresholdReport r = spne_thresholds_consumer_model(MarketParams::baseline());
  const Condition* buy = r.condition("buy");
  c.expect(buy != nullptr && buy->satisfied, "buy condition not satisfied");
  c.expect(buy != nullptr && buy->inequality == "14 > 12", "buy inequality text");
  c.near(r.p_min, 4, 0, "p_min");
  c.expect(r.m_max.has_value(), "m_max missing");
  if (r.m_max) c.near(*r.m_max, 6, 0, "m_max");
}

void bimatrix_equilibrium(Check& c) {
  std::ifstream in(std::string(REGUGAME_DATA_DIR) + "/supplier_retailer.json");
  c.expect(in.good(), "supplier_retailer.json missing");
  if (!in.good()) return;
  const BimatrixSolution sol = solve_bimatrix_2x2(bimatrix_from_json(nlohmann::json::parse(in)));
  c.expect(sol.pure_nash.empty(), "unexpected pure equilibrium");
  c.expect(sol.mixed.has_value(), "no mixed equilibrium");
  if (!sol.mixed) return;
  c.near(sol.mixed->row_prob, 17.0 / 43.0, 1e-9, "supplier mix");
  c.near(sol.mixed->col_prob, 4.0 / 11.0, 1e-9, "retailer mix");
  auto three_sig = [](double x) { return std::round(x * 1000) / 1000; };
  c.near(three_sig(sol.mixed->row_prob), 0.395, 1e-12, "39.5%");
  c.near(three_sig(sol.mixed->col_prob), 0.364, 1e-12, "36.4%");
}

void solver_oracle(Check& c) {
  const auto start = Clock::now();
  regugame::testing::RandomTreeGenerator gen(1729);
  for (int i = 0; i < 200; ++i) {
    const ExtensiveGame g = gen.next();
    const StrategyProfile bi = profile_of(g, backward_induction(g));
    const auto spne = brute_force_spne(g);
    c.expect(std::find(spne.begin(), spne.end(), bi) != spne.end(), "tree " + std::to_string(i) + " not contained");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
}

void threshold_solver_sweep(Check& c) {
  const auto rs = linear_grid(0.05, 1.0, 20);
  const auto ps = linear_grid(0.0, 19.0, 20);
  int compared = 0;
  for (double r : rs) {
    for (double pen : ps) {
      const MarketParams p = with_rp(r, pen);
      const Classification cls = classify_equilibrium(p, Scenario::kThirdParty);
      if (cls.report.verdict == Verdict::kTie) continue;
      const ExtensiveGame g = restrict_actions(build_third_party_game(p), kConsumerId, labels::kBuy);
      const Solution sol = backward_induction(g);
      const bool solver_honest = chosen_label(g, sol, g.root()) == labels::kHonest;
      c.expect((cls.report.verdict == Verdict::kHonestTrade) == solver_honest,
               "mismatch at r=" + std::to_string(r) + " p=" + std::to_string(pen));
      ++compared;
    }
  }
  c.expect(compared > 350, "too few non-tie cells: " + std::to_string(compared));
}

void monotone_identity(Check& c) {
  const MarketParams base = MarketParams::baseline();
  const double d_minus_a = base.price_conventional - base.price_organic;
  double previous = INFINITY;
  for (int k = 1; k <= 100; ++k) {
    const double r = 0.01 * k;
    const double pmin = third_party_min_penalty_unclamped(with_rp(r, 0));
    c.near(r * pmin - r * d_minus_a - base.cost_gap(), 0, 1e-12, "identity at r=" + std::to_string(r));
    c.expect(pmin < previous, "not strictly decreasing at r=" + std::to_string(r));
    previous = pmin;
  }
}

std::string demo_output(int& code) {
  const std::string cmd = "'" REGUGAME_CLI "' demo '" REGUGAME_DATA_DIR "/baseline.json'";
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void determinism(Check& c) {
  int first_code = 0, second_code = 0;
  const std::string first = demo_output(first_code);
  const std::string second = demo_output(second_code);
  c.expect(first_code == 0 && second_code == 0, "demo exited nonzero");
  c.expect(!first.empty(), "demo produced no output");
  c.expect(first == second, "outputs differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"minimum penalty table", table_reproduction},
      {"honest and dishonest payoffs", honest_dishonest},
      {"audit feasibility bound", feasibility_bound},
      {"consumer purchase condition", purchase_condition},
      {"bimatrix mixed equilibrium", bimatrix_equilibrium},
      {"backward induction within brute-force SPNE", solver_oracle},
      {"threshold verdicts match solver on 20x20 grid", threshold_solver_sweep},
      {"p_min monotone with linear identity", monotone_identity},
      {"demo output deterministic", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failure.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!ok) std::cout << " (" << c.failure << ")";
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
