#include "regugame/bimatrix.hpp"

#include <cmath>

#include "regugame/errors.hpp"
#include "regugame/numfmt.hpp"

namespace regugame {

BimatrixSolution solve_bimatrix_2x2(const Bimatrix2x2& g) {
  BimatrixSolution out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const bool row_best = g.row_payoff(i, j) >= g.row_payoff(1 - i, j) - kTolerance;
      const bool col_best = g.col_payoff(i, j) >= g.col_payoff(i, 1 - j) - kTolerance;
      if (row_best && col_best) out.pure_nash.emplace_back(i, j);
    }
  }

  // Row mix x leaves the column player indifferent:
  //   x*B00 + (1-x)*B10 = x*B01 + (1-x)*B11
  const double col_den = g.col_payoff(0, 0) - g.col_payoff(1, 0) - g.col_payoff(0, 1) + g.col_payoff(1, 1);
  // Column mix y leaves the row player indifferent:
  //   y*A00 + (1-y)*A01 = y*A10 + (1-y)*A11
  const double row_den = g.row_payoff(0, 0) - g.row_payoff(0, 1) - g.row_payoff(1, 0) + g.row_payoff(1, 1);
  if (std::abs(col_den) <= kTolerance || std::abs(row_den) <= kTolerance) {
    out.degenerate = true;
    return out;
  }
  const double x = (g.col_payoff(1, 1) - g.col_payoff(1, 0)) / col_den;
  const double y = (g.row_payoff(1, 1) - g.row_payoff(0, 1)) / row_den;
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) return out;

  MixedEquilibrium m;
  m.row_prob = x;
  m.col_prob = y;
  m.row_value = y * g.row_payoff(0, 0) + (1 - y) * g.row_payoff(0, 1);
  m.col_value = x * g.col_payoff(0, 0) + (1 - x) * g.col_payoff(1, 0);
  out.mixed = m;
  return out;
}

bool strictly_dominates(const Bimatrix2x2& g, Side side, int a, int b) {
  auto in_range = [](int k) { return k == 0 || k == 1; };
  if (!in_range(a) || !in_range(b)) throw InvalidInput("bimatrix action index must be 0 or 1");
  for (int other = 0; other < 2; ++other) {
    const double pa = side == Side::kRow ? g.row_payoff(a, other) : g.col_payoff(other, a);
    const double pb = side == Side::kRow ? g.row_payoff(b, other) : g.col_payoff(other, b);
    if (!(pa > pb + kTolerance)) return false;
  }
  return true;
}

Bimatrix2x2 bimatrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("bimatrix: expected a JSON object");
  Bimatrix2x2 g;
  auto label = [&](const char* key, std::string& dst) {
    if (!doc.contains(key)) return;
    if (!doc.at(key).is_string()) throw InvalidInput(std::string("bimatrix.") + key + ": expected a string");
    dst = doc.at(key).get<std::string>();
  };
  auto labels = [&](const char* key, std::array<std::string, 2>& dst) {
    if (!doc.contains(key)) return;
    const auto& v = doc.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
      throw InvalidInput(std::string("bimatrix.") + key + ": expected two strings");
    }
    dst = {v[0].get<std::string>(), v[1].get<std::string>()};
  };
  label("row_player", g.row_player);
  label("col_player", g.col_player);
  labels("row_actions", g.row_actions);
  labels("col_actions", g.col_actions);

  if (!doc.contains("payoffs")) throw InvalidInput("bimatrix: missing field 'payoffs'");
  const auto& p = doc.at("payoffs");
  if (!p.is_array() || p.size() != 2) throw InvalidInput("bimatrix.payoffs: expected 2 rows");
  for (int i = 0; i < 2; ++i) {
    if (!p[i].is_array() || p[i].size() != 2) throw InvalidInput("bimatrix.payoffs: expected 2 cells per row");
    for (int j = 0; j < 2; ++j) {
      const auto& cell = p[i][j];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
        throw InvalidInput("bimatrix.payoffs: each cell must be [row, column] numbers");
      }
      g.payoffs[i][j] = {cell[0].get<double>(), cell[1].get<double>()};
    }
  }
  return g;
}

}  // namespace regugame
