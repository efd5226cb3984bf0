#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace regugame {

// Absolute tolerance used for every payoff/threshold comparison.
inline constexpr double kTolerance = 1e-9;

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] std::string str() const;
};

// Best rational approximation with denominator <= max_den, accepted only if it
// reproduces x within 1e-9 (relative to max(1, |x|)).
std::optional<Fraction> as_fraction(double x, std::int64_t max_den = 10000);

// Human-facing: at most `decimals` fractional digits, trailing zeros trimmed,
// "inf"/"-inf" for infinities, never "-0".
std::string format_short(double x, int decimals = 4);

// Same as format_short but keeps at least one fractional digit ("1.0").
std::string format_prob(double x);

// CSV cells: 12 significant digits, shortest form ("0.6", "2.66666666667").
std::string format_csv(double x);

// Exact fraction if one exists, otherwise format_csv.
std::string format_exact(double x);

}  // namespace regugame
