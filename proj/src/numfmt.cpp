#include "regugame/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numeric>

namespace regugame {

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Fraction> as_fraction(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const double scale = std::max(1.0, std::abs(x));
  if (std::abs(x) > 1e15) return std::nullopt;

  // Continued-fraction convergents h/k.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double rem = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= 1e-9 * scale) {
      const std::int64_t g = std::gcd(h, k);
      return Fraction{h / g, k / g};
    }
    if (rem < 1e-15) break;
    const double inv = 1.0 / rem;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    rem = inv - std::floor(inv);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

namespace {

std::string chars(double x, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, fmt, precision);
  return std::string(buf.data(), res.ptr);
}

std::string trim_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string infinity_text(double x) { return x > 0 ? "inf" : "-inf"; }

}  // namespace

std::string format_short(double x, int decimals) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return infinity_text(x);
  std::string s = trim_zeros(chars(x, std::chars_format::fixed, decimals));
  if (s == "-0") s = "0";
  return s;
}

std::string format_prob(double x) {
  std::string s = format_short(x);
  if (std::isfinite(x) && s.find('.') == std::string::npos) s += ".0";
  return s;
}

std::string format_csv(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return infinity_text(x);
  if (x == 0.0) return "0";
  std::string s = chars(x, std::chars_format::general, 12);
  // to_chars(general) already drops trailing zeros; normalise "-0".
  return s == "-0" ? "0" : s;
}

std::string format_exact(double x) {
  if (auto f = as_fraction(x)) return f->str();
  return format_csv(x);
}

}  // namespace regugame
