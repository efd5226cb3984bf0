#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regugame/bimatrix.hpp"
#include "regugame/game.hpp"
#include "regugame/market.hpp"
#include "regugame/policy.hpp"
#include "regugame/solvers.hpp"
#include "regugame/thresholds.hpp"

namespace regugame {

enum class OutputFormat { kMarkdown, kCsv, kJson };

// "md", "csv", "json"
OutputFormat parse_format(std::string_view name);

// Comma-separated table. Cells must not contain commas or line breaks.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const CsvTable&) const = default;
};

// Header line then one line per row, LF-terminated.
std::string emit_csv(const CsvTable& table);
// Inverse of emit_csv. Throws InvalidInput on ragged rows.
CsvTable parse_csv(std::string_view text);

struct DemoReport {
  std::string markdown;
  std::vector<std::pair<std::string, CsvTable>> tables;  // named CSV payloads, in emission order
  nlohmann::json json;
};

inline const std::vector<double> kDemoAuditGrid{0.2, 0.4, 0.6, 0.8, 1.0};

// Worked numerical case for `params`: parameter table, honest payoff,
// dishonest payoff per audit probability, minimum-penalty table, consumer
// purchase check and the audit-region bound.
DemoReport demo_report(const MarketParams& params, const std::vector<double>& r_grid = kDemoAuditGrid);

std::string render(const DemoReport& report, OutputFormat format);
std::string render(const ThresholdReport& report, OutputFormat format);
std::string render_sweep(const std::vector<SweepRow>& rows, SweepParameter parameter, Scenario scenario,
                         OutputFormat format);
std::string render_solution(const ExtensiveGame& game, const Solution& solution, OutputFormat format);
std::string render_bimatrix(const Bimatrix2x2& game, const BimatrixSolution& solution, OutputFormat format);

}  // namespace regugame
