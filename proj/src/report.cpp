#include "regugame/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "regugame/errors.hpp"
#include "regugame/numfmt.hpp"

namespace regugame {

using nlohmann::json;

OutputFormat parse_format(std::string_view name) {
  if (name == "md") return OutputFormat::kMarkdown;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw InvalidInput("unknown format '" + std::string(name) + "' (expected md, csv or json)");
}

std::string emit_csv(const CsvTable& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) throw InvalidInput("csv: ragged row");
      table.rows.push_back(std::move(cells));
    }
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return table;
}

namespace {

json jnum(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

template <class T>
json jopt(const std::optional<T>& x) {
  return x ? jnum(*x) : json(nullptr);
}

std::string s(double x) { return format_short(x); }

std::string with_fraction(double x) {
  const auto f = as_fraction(x);
  if (f && f->den != 1) return f->str() + " ≈ " + s(x);
  return s(x);
}

// Coefficient times symbol, e.g. "4r"; omits a unit coefficient.
std::string term(double coef, const std::string& symbol) {
  return coef == 1.0 ? symbol : s(coef) + symbol;
}

std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = "|";
  for (const auto& h : header) out += " " + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
  out += '\n';
  for (const auto& row : rows) {
    out += "|";
    for (const auto& c : row) out += " " + c + " |";
    out += '\n';
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

DemoReport demo_report(const MarketParams& p, const std::vector<double>& r_grid) {
  require_valid(p);
  const double a = p.price_organic, d = p.price_conventional, ko = p.cost_organic, kc = p.cost_conventional;
  const double sv = p.utility_organic, f = p.utility_conventional, c = p.cost_gap();
  const double honest = a - ko;
  const double audited_net = d - kc;    // audited fraud revenue net of cost, before the fine
  const double unaudited_net = a - kc;  // unaudited fraud profit
  const auto rows = penalty_sweep(p, r_grid);
  const AuditBound bound = r_feasibility_bound(p);

  DemoReport rep;
  std::ostringstream md;

  md << "## Baseline parameters\n\n";
  const std::vector<std::vector<std::string>> baseline{
      {"a", "Price of organic food", s(a)},
      {"d", "Price of non-organic food", s(d)},
      {"K_o", "Cost of organic production", s(ko)},
      {"K_c", "Cost of conventional production", s(kc)},
      {"c", "Cost gap K_o - K_c", s(c)},
      {"s", "Utility from consuming organic food", s(sv)},
      {"f", "Utility from consuming non-organic food", s(f)},
  };
  md << md_table({"Symbol", "Description", "Value"}, baseline) << '\n';
  const CsvTable baseline_csv{{"symbol", "value"},
                              {{"a", format_csv(a)},
                               {"d", format_csv(d)},
                               {"K_o", format_csv(ko)},
                               {"K_c", format_csv(kc)},
                               {"c", format_csv(c)},
                               {"s", format_csv(sv)},
                               {"f", format_csv(f)}}};

  md << "## Honest producer\n\n";
  md << "honest = " << s(honest) << " (a - K_o = " << s(a) << " - " << s(ko) << ")\n\n";

  md << "## Dishonest producer\n\n";
  md << "dishonest(r, p) = r(" << s(audited_net) << " - p) + (1 - r)(" << s(unaudited_net) << ")\n\n";
  md << "incentive constraint: " << term(a - d, "r") << " + rp >= " << s(c) << "\n\n";
  std::vector<std::vector<std::string>> dishonest_rows;
  CsvTable payoff_csv{{"r", "honest", "dishonest_intercept", "dishonest_slope_p"}, {}};
  for (double r : r_grid) {
    const double intercept = r * audited_net + (1 - r) * unaudited_net;
    dishonest_rows.push_back({format_prob(r),
                              s(r) + "(" + s(audited_net) + " - p) + " + s(1 - r) + "(" + s(unaudited_net) + ")",
                              s(intercept) + " - " + term(r, "p")});
    payoff_csv.rows.push_back({format_csv(r), format_csv(honest), format_csv(intercept), format_csv(-r)});
  }
  md << md_table({"r", "dishonest(r, p)", "simplified"}, dishonest_rows) << '\n';

  md << "## Minimum penalty\n\n";
  std::vector<std::vector<std::string>> penalty_rows;
  CsvTable penalty_csv{{"r", "p_min", "p_min_exact"}, {}};
  for (const auto& row : rows) {
    penalty_rows.push_back({format_prob(row.value),
                            "(" + s(c) + " - " + s(a - d) + "(" + s(row.value) + "))/" + s(row.value),
                            s(row.threshold)});
    penalty_csv.rows.push_back({format_csv(row.value), format_csv(row.threshold), format_exact(row.threshold)});
  }
  md << md_table({"r", "Expression for p", "Minimum p"}, penalty_rows) << '\n';

  md << "## Consumer purchase condition\n\n";
  const bool buys = sv > a;
  md << "s > a: " << s(sv) << " > " << s(a) << " (" << (buys ? "satisfied" : "violated") << ")\n\n";

  md << "## Audit region\n\n";
  std::string bound_text = "undefined";
  if (bound.bound) {
    bound_text = with_fraction(*bound.bound);
    md << "r_bound = " << bound_text << ", " << (bound.feasible ? "feasible" : "infeasible") << "\n";
  } else {
    md << "r_bound undefined (a - K_o + c = 0), infeasible\n";
  }

  CsvTable checks_csv{{"check", "lhs", "rhs", "satisfied"}, {}};
  checks_csv.rows.push_back({"buy", format_csv(sv), format_csv(a), buys ? "true" : "false"});
  checks_csv.rows.push_back({"audit_region", "1", bound.bound ? format_csv(*bound.bound) : "undefined",
                             bound.feasible ? "true" : "false"});

  rep.markdown = md.str();
  rep.tables = {{"baseline", baseline_csv},
                {"payoffs", payoff_csv},
                {"min_penalty", penalty_csv},
                {"checks", checks_csv}};

  json penalty = json::array();
  for (const auto& row : rows) {
    penalty.push_back({{"r", row.value}, {"p_min", row.threshold}, {"p_min_exact", format_exact(row.threshold)}});
  }
  rep.json = {
      {"params", params_to_json(p)},
      {"honest", honest},
      {"dishonest", {{"audited_net", audited_net}, {"unaudited_net", unaudited_net}}},
      {"incentive_constraint", {{"r_coefficient", a - d}, {"rhs", c}}},
      {"min_penalty", penalty},
      {"buy_condition", {{"lhs", sv}, {"rhs", a}, {"satisfied", buys}}},
      {"r_bound", {{"value", jopt(bound.bound)}, {"exact", bound_text}, {"feasible", bound.feasible}}},
  };
  return rep;
}

std::string render(const DemoReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kMarkdown: return report.markdown;
    case OutputFormat::kJson: return dump(report.json);
    case OutputFormat::kCsv: {
      std::string out;
      for (std::size_t i = 0; i < report.tables.size(); ++i) {
        if (i > 0) out += '\n';
        out += "# " + report.tables[i].first + '\n' + emit_csv(report.tables[i].second);
      }
      return out;
    }
  }
  return {};
}

std::string render(const ThresholdReport& r, OutputFormat format) {
  std::vector<std::pair<std::string, double>> values{{"p_min", r.p_min}};
  if (r.m_max) values.emplace_back("m_max", *r.m_max);
  if (r.t_min) values.emplace_back("t_min", *r.t_min);
  if (r.r_bound) values.emplace_back("r_bound", *r.r_bound);

  if (format == OutputFormat::kJson) {
    json conds = json::array();
    for (const auto& c : r.conditions) {
      conds.push_back({{"name", c.name}, {"inequality", c.inequality}, {"satisfied", c.satisfied}});
    }
    json j{{"scenario", to_string(r.scenario)},
           {"p_min", jnum(r.p_min)},
           {"p_min_strict", r.p_min_strict},
           {"m_max", jopt(r.m_max)},
           {"t_min", jopt(r.t_min)},
           {"r_bound", jopt(r.r_bound)},
           {"conditions", conds},
           {"verdict", to_string(r.verdict)},
           {"unmonitored_verdict", r.unmonitored_verdict ? json(to_string(*r.unmonitored_verdict)) : json(nullptr)},
           {"notes", r.notes}};
    return dump(j);
  }
  if (format == OutputFormat::kCsv) {
    CsvTable t{{"kind", "name", "value", "satisfied"}, {}};
    for (const auto& [name, v] : values) t.rows.push_back({"threshold", name, format_csv(v), ""});
    for (const auto& c : r.conditions) {
      t.rows.push_back({"condition", c.name, c.inequality, c.satisfied ? "true" : "false"});
    }
    t.rows.push_back({"verdict", "verdict", std::string(to_string(r.verdict)), ""});
    if (r.unmonitored_verdict) {
      t.rows.push_back({"verdict", "unmonitored", std::string(to_string(*r.unmonitored_verdict)), ""});
    }
    return emit_csv(t);
  }

  std::ostringstream md;
  md << "## Thresholds: " << to_string(r.scenario) << "\n\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    md << (i ? ", " : "") << values[i].first << " = "
       << (values[i].first == "r_bound" ? with_fraction(values[i].second) : s(values[i].second));
  }
  md << "\n\np_min is " << (r.p_min_strict ? "a strict" : "an inclusive") << " lower bound\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.conditions) rows.push_back({c.name, c.inequality, c.satisfied ? "yes" : "no"});
  md << md_table({"Condition", "Inequality", "Satisfied"}, rows) << '\n';
  md << "verdict: " << to_string(r.verdict) << '\n';
  if (r.unmonitored_verdict) md << "unmonitored verdict: " << to_string(*r.unmonitored_verdict) << '\n';
  if (!r.notes.empty()) {
    md << '\n';
    for (const auto& n : r.notes) md << "- " << n << '\n';
  }
  return md.str();
}

std::string render_sweep(const std::vector<SweepRow>& rows, SweepParameter parameter, Scenario scenario,
                         OutputFormat format) {
  const std::string name(to_string(parameter));
  if (format == OutputFormat::kJson) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{name, r.value},
                     {"threshold", jnum(r.threshold)},
                     {"verdict", to_string(r.verdict)},
                     {"honest", r.honest},
                     {"dishonest", r.dishonest}});
    }
    return dump(json{{"scenario", to_string(scenario)}, {"parameter", name}, {"rows", arr}});
  }
  if (format == OutputFormat::kCsv) {
    CsvTable t{{name, "threshold", "threshold_exact", "verdict", "honest", "dishonest"}, {}};
    for (const auto& r : rows) {
      t.rows.push_back({format_csv(r.value), format_csv(r.threshold), format_exact(r.threshold),
                        std::string(to_string(r.verdict)), format_csv(r.honest), format_csv(r.dishonest)});
    }
    return emit_csv(t);
  }
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    body.push_back({parameter == SweepParameter::kAuditProb ? format_prob(r.value) : s(r.value), s(r.threshold),
                    std::string(to_string(r.verdict)), s(r.honest), s(r.dishonest)});
  }
  return "## Sweep over " + name + " (" + std::string(to_string(scenario)) + ")\n\n" +
         md_table({name, "threshold", "verdict", "honest", "dishonest"}, body);
}

std::string render_solution(const ExtensiveGame& game, const Solution& sol, OutputFormat format) {
  const auto decisions = game.decision_nodes();
  auto mover = [&](NodeId id) { return game.players()[std::get<DecisionNode>(game.node(id)).owner.index]; };
  auto path = [&](NodeId id) {
    const std::string p = join_path(path_to(game, id));
    return p.empty() ? std::string("(root)") : p;
  };
  auto tied = [&](NodeId id) {
    return std::find(sol.tie_log.begin(), sol.tie_log.end(), id) != sol.tie_log.end();
  };

  if (format == OutputFormat::kJson) {
    json nodes = json::array();
    for (NodeId id : decisions) {
      nodes.push_back({{"node", id.value},
                       {"path", path_to(game, id)},
                       {"player", mover(id)},
                       {"chosen", chosen_label(game, sol, id)},
                       {"value", sol.value(id)},
                       {"tie", tied(id)}});
    }
    return dump(json{{"players", game.players()}, {"root_value", sol.value(game.root())}, {"decisions", nodes}});
  }
  if (format == OutputFormat::kCsv) {
    CsvTable t{{"node", "path", "player", "chosen", "tie"}, {}};
    for (const auto& pl : game.players()) t.header.push_back("value_" + pl);
    for (NodeId id : decisions) {
      std::vector<std::string> row{std::to_string(id.value), path(id), mover(id), chosen_label(game, sol, id),
                                   tied(id) ? "true" : "false"};
      for (double v : sol.value(id)) row.push_back(format_csv(v));
      t.rows.push_back(std::move(row));
    }
    return emit_csv(t);
  }

  std::ostringstream md;
  md << "## Backward induction\n\nroot value: (";
  const Payoff& root = sol.value(game.root());
  for (std::size_t i = 0; i < root.size(); ++i) md << (i ? ", " : "") << game.players()[i] << " " << s(root[i]);
  md << ")\n\n";
  std::vector<std::vector<std::string>> rows;
  for (NodeId id : decisions) {
    std::string value;
    for (double v : sol.value(id)) value += (value.empty() ? "" : ", ") + s(v);
    rows.push_back({path(id), mover(id), chosen_label(game, sol, id), "(" + value + ")", tied(id) ? "yes" : ""});
  }
  md << md_table({"Node", "Player", "Chosen", "Value", "Tie"}, rows);
  return md.str();
}

std::string render_bimatrix(const Bimatrix2x2& g, const BimatrixSolution& sol, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json pure = json::array();
    for (auto [i, j] : sol.pure_nash) pure.push_back({{"row", g.row_actions[i]}, {"col", g.col_actions[j]}});
    json mixed = nullptr;
    if (sol.mixed) {
      mixed = {{"row_prob", sol.mixed->row_prob},
               {"col_prob", sol.mixed->col_prob},
               {"row_value", sol.mixed->row_value},
               {"col_value", sol.mixed->col_value}};
    }
    return dump(json{{"row_player", g.row_player},
                     {"col_player", g.col_player},
                     {"pure_nash", pure},
                     {"mixed", mixed},
                     {"degenerate", sol.degenerate}});
  }
  if (format == OutputFormat::kCsv) {
    CsvTable t{{"kind", "row_action", "col_action", "row_prob", "col_prob", "row_value", "col_value"}, {}};
    for (auto [i, j] : sol.pure_nash) {
      t.rows.push_back({"pure", g.row_actions[i], g.col_actions[j], i == 0 ? "1" : "0", j == 0 ? "1" : "0",
                        format_csv(g.row_payoff(i, j)), format_csv(g.col_payoff(i, j))});
    }
    if (sol.mixed) {
      const auto& m = *sol.mixed;
      t.rows.push_back({"mixed", g.row_actions[0], g.col_actions[0], format_csv(m.row_prob), format_csv(m.col_prob),
                        format_csv(m.row_value), format_csv(m.col_value)});
    }
    return emit_csv(t);
  }

  std::ostringstream md;
  md << "## " << g.row_player << " vs " << g.col_player << "\n\n";
  if (sol.pure_nash.empty()) {
    md << "no pure NE";
  } else {
    md << "pure NE:";
    for (auto [i, j] : sol.pure_nash) md << " (" << g.row_actions[i] << ", " << g.col_actions[j] << ")";
  }
  if (sol.mixed) {
    md << "; mixed: row " << s(sol.mixed->row_prob) << ", col " << s(sol.mixed->col_prob) << '\n';
    md << "\n| Player | P(" << "first action) | Exact | Expected payoff |\n|---|---|---|---|\n";
    md << "| " << g.row_player << " (" << g.row_actions[0] << ") | " << s(sol.mixed->row_prob) << " | "
       << format_exact(sol.mixed->row_prob) << " | " << s(sol.mixed->row_value) << " |\n";
    md << "| " << g.col_player << " (" << g.col_actions[0] << ") | " << s(sol.mixed->col_prob) << " | "
       << format_exact(sol.mixed->col_prob) << " | " << s(sol.mixed->col_value) << " |\n";
  } else {
    md << (sol.degenerate ? "; mixed: none (degenerate indifference equations)\n" : "; mixed: none\n");
  }
  return md.str();
}

}  // namespace regugame
