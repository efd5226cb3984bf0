// regugame: command-line front end for the regulation-game solvers.
//
//   regugame demo       [--params FILE] [--format md|csv|json]
//   regugame thresholds --params FILE --scenario consumer|reputation|third-party
//   regugame solve      --params FILE [--scenario NAME] [--tie-break first|lex]
//   regugame sweep      --params FILE [--scenario NAME] [--param r|p|m|t] [--grid START:STOP:STEPS]
//   regugame bimatrix   --params FILE
//
// Exit status: 0 success, 2 malformed input or invalid parameters, 1 domain
// errors (e.g. a penalty query with audit probability 0).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "regugame/bimatrix.hpp"
#include "regugame/errors.hpp"
#include "regugame/game_json.hpp"
#include "regugame/market.hpp"
#include "regugame/policy.hpp"
#include "regugame/report.hpp"
#include "regugame/scenarios.hpp"
#include "regugame/solvers.hpp"
#include "regugame/thresholds.hpp"

namespace {

using namespace regugame;

struct CliConfig {
  std::string params_path;
  std::string scenario = "third-party";
  std::string format;
  std::string tie_break = "first";
  std::string grid;
  std::string parameter = "r";
  std::string out = "stdout";
};

nlohmann::json read_json(const std::string& path) {
  if (path.empty()) throw InvalidInput("missing --params <file>");
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

MarketParams read_params(const std::string& path) {
  MarketParams p = params_from_json(read_json(path));
  require_valid(p);
  return p;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw InvalidInput("--grid expects START:STOP:STEPS");
  try {
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const int steps = std::stoi(parts[2]);
    return linear_grid(start, stop, steps);
  } catch (const std::logic_error&) {
    throw InvalidInput("--grid expects numbers: START:STOP:STEPS");
  }
}

std::vector<double> default_grid(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kAuditProb: return kDemoAuditGrid;
    case SweepParameter::kPenalty: return linear_grid(0, 20, 21);
    case SweepParameter::kMonitorCost: return linear_grid(0, 10, 11);
    case SweepParameter::kReputationLoss: return linear_grid(0, 10, 11);
  }
  return kDemoAuditGrid;
}

std::string run_demo(const CliConfig& cfg, OutputFormat fmt) {
  const MarketParams p = cfg.params_path.empty() ? MarketParams::baseline() : read_params(cfg.params_path);
  return render(demo_report(p), fmt);
}

std::string run_thresholds(const CliConfig& cfg, OutputFormat fmt) {
  const MarketParams p = read_params(cfg.params_path);
  const Scenario scenario = parse_scenario(cfg.scenario);
  if (scenario == Scenario::kThirdParty) third_party_min_penalty(p);  // r = 0 is a domain error here
  return render(threshold_report(p, scenario), fmt);
}

std::string run_solve(const CliConfig& cfg, OutputFormat fmt) {
  const nlohmann::json doc = read_json(cfg.params_path);
  const TieBreak tb = cfg.tie_break == "lex" ? TieBreak::kLexicographic : TieBreak::kFirstDeclared;
  ExtensiveGame game;
  if (doc.is_object() && doc.contains("root")) {
    game = game_from_json(doc);
    require_valid(game);
  } else {
    MarketParams p = params_from_json(doc);
    require_valid(p);
    game = build_scenario_game(p, parse_scenario(cfg.scenario));
  }
  return render_solution(game, backward_induction(game, tb), fmt);
}

std::string run_sweep(const CliConfig& cfg, OutputFormat fmt) {
  const MarketParams p = read_params(cfg.params_path);
  const Scenario scenario = parse_scenario(cfg.scenario);
  const SweepParameter parameter = parse_sweep_parameter(cfg.parameter);
  const std::vector<double> grid = cfg.grid.empty() ? default_grid(parameter) : parse_grid(cfg.grid);
  std::vector<SweepRow> rows;
  if (parameter == SweepParameter::kAuditProb && scenario == Scenario::kThirdParty) {
    rows = penalty_sweep(p, grid);
  } else {
    rows = sweep({parameter, grid, p}, scenario);
  }
  return render_sweep(rows, parameter, scenario, fmt);
}

std::string run_bimatrix(const CliConfig& cfg, OutputFormat fmt) {
  const Bimatrix2x2 g = bimatrix_from_json(read_json(cfg.params_path));
  return render_bimatrix(g, solve_bimatrix_2x2(g), fmt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regulation games for organic-food supply chains"};
  app.require_subcommand(1);
  CliConfig cfg;
  if (const char* env = std::getenv("REGUGAME_FORMAT")) cfg.format = env;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--params,params", cfg.params_path, "Input JSON file");
    sub->add_option("--format", cfg.format, "Output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    sub->add_option("--out", cfg.out, "Output file or 'stdout'");
  };
  auto with_scenario = [&](CLI::App* sub) {
    sub->add_option("--scenario", cfg.scenario, "consumer, reputation or third-party");
  };

  CLI::App* demo = app.add_subcommand("demo", "Worked numerical case");
  common(demo);
  CLI::App* thresholds = app.add_subcommand("thresholds", "Deterrence thresholds for a scenario");
  common(thresholds);
  with_scenario(thresholds);
  CLI::App* solve = app.add_subcommand("solve", "Backward induction on a scenario or a raw game");
  common(solve);
  with_scenario(solve);
  solve->add_option("--tie-break", cfg.tie_break, "first or lex")->check(CLI::IsMember({"first", "lex"}));
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep");
  common(sweep_cmd);
  with_scenario(sweep_cmd);
  sweep_cmd->add_option("--param", cfg.parameter, "Swept parameter: r, p, m or t");
  sweep_cmd->add_option("--grid", cfg.grid, "START:STOP:STEPS");
  CLI::App* bimatrix = app.add_subcommand("bimatrix", "2x2 bimatrix equilibria");
  common(bimatrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat fmt = cfg.format.empty() ? OutputFormat::kMarkdown : parse_format(cfg.format);
    std::string output;
    if (*demo) output = run_demo(cfg, fmt);
    else if (*thresholds) output = run_thresholds(cfg, fmt);
    else if (*solve) output = run_solve(cfg, fmt);
    else if (*sweep_cmd) output = run_sweep(cfg, fmt);
    else if (*bimatrix) output = run_bimatrix(cfg, fmt);

    if (cfg.out == "stdout" || cfg.out == "-") {
      std::cout << output;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw InvalidInput("cannot write '" + cfg.out + "'");
      file << output;
    }
    return 0;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
