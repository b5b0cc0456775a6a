#pragma once

// Exact arithmetic for weights, the inflation factor and two-stage costs.
//
// Weights are fixed-point decimals stored as integer micro-units. Costs that
// involve the inflation factor are rationals over micro-units; every cost that
// arises from decimal input has a terminating decimal expansion, so they are
// printed as exact decimal strings.

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "drobust/error.hpp"

namespace drobust {

inline constexpr std::uint64_t kMicrosPerUnit = 1'000'000;
inline constexpr int kMaxFractionDigits = 6;

struct Weight {
  std::uint64_t micros = 0;

  static constexpr Weight from_units(std::uint64_t units) { return Weight{units * kMicrosPerUnit}; }

  constexpr Weight& operator+=(Weight o) {
    micros += o.micros;
    return *this;
  }
  friend constexpr Weight operator+(Weight a, Weight b) { return Weight{a.micros + b.micros}; }
  friend constexpr Weight operator-(Weight a, Weight b) { return Weight{a.micros - b.micros}; }
  friend constexpr auto operator<=>(Weight, Weight) = default;
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Parses "123", "1.5", "0.000001". Returns nullopt on malformed text or more
// than `max_frac` fraction digits. Result is value * 10^max_frac.
inline std::optional<std::uint64_t> parse_fixed(std::string_view text, int max_frac) {
  if (text.empty()) return std::nullopt;
  std::uint64_t int_part = 0;
  std::size_t i = 0;
  bool any_digit = false;
  constexpr std::uint64_t kLimit = std::numeric_limits<std::uint64_t>::max() / 100;
  for (; i < text.size() && text[i] != '.'; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    if (int_part > kLimit) return std::nullopt;
    int_part = int_part * 10 + static_cast<std::uint64_t>(c - '0');
    any_digit = true;
  }
  std::uint64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    ++i;  // '.'
    if (i == text.size()) return std::nullopt;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') return std::nullopt;
      if (++frac_digits > max_frac) return std::nullopt;
      frac = frac * 10 + static_cast<std::uint64_t>(c - '0');
    }
  }
  if (!any_digit) return std::nullopt;
  std::uint64_t scale = 1;
  for (int k = 0; k < max_frac; ++k) scale *= 10;
  for (int k = frac_digits; k < max_frac; ++k) frac *= 10;
  u128 total = static_cast<u128>(int_part) * scale + frac;
  if (total > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(total);
}

}  // namespace detail

/// Minimal decimal string for a weight: 1500000 -> "1.5", 3000000 -> "3".
inline std::string format_weight(Weight w) {
  std::string s = std::to_string(w.micros / kMicrosPerUnit);
  std::uint64_t frac = w.micros % kMicrosPerUnit;
  if (frac == 0) return s;
  std::string digits = std::to_string(frac);
  digits.insert(0, static_cast<std::size_t>(kMaxFractionDigits) - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return s + "." + digits;
}

inline std::optional<Weight> parse_weight(std::string_view text) {
  auto v = detail::parse_fixed(text, kMaxFractionDigits);
  if (!v) return std::nullopt;
  return Weight{*v};
}

/// The inflation factor as a reduced fraction numerator/denominator.
struct Inflation {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;

  static Inflation make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return Inflation{num, 0};
    std::uint64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Inflation{num / g, den / g};
  }

  bool at_least_one() const { return denominator != 0 && numerator >= denominator; }

  friend bool operator==(const Inflation&, const Inflation&) = default;
};

inline std::string format_inflation(Inflation l) {
  // Decimal when the denominator divides 10^6 (always true for parsed input).
  if (l.denominator != 0 && kMicrosPerUnit % l.denominator == 0) {
    return format_weight(Weight{l.numerator * (kMicrosPerUnit / l.denominator)});
  }
  return std::to_string(l.numerator) + "/" + std::to_string(l.denominator);
}

inline std::optional<Inflation> parse_inflation(std::string_view text) {
  auto v = detail::parse_fixed(text, kMaxFractionDigits);
  if (!v) return std::nullopt;
  return Inflation::make(*v, kMicrosPerUnit);
}

/// Non-negative exact rational. Used for two-stage costs (in micro-units) and
/// for approximation ratios.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(detail::u128 num, detail::u128 den) { assign(num, den); }
  explicit Rational(Weight w) : num_(w.micros), den_(1) {}

  static Rational integer(std::uint64_t v) { return Rational(v, 1); }

  detail::u128 numerator() const { return num_; }
  detail::u128 denominator() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    detail::u128 l = a.num_ * b.den_;
    detail::u128 r = b.num_ * a.den_;
    return l <=> r;
  }

 private:
  void assign(detail::u128 num, detail::u128 den) {
    if (den == 0) throw std::domain_error("zero denominator");
    detail::u128 g = detail::gcd_u128(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
  }

  detail::u128 num_ = 0;
  detail::u128 den_ = 1;
};

/// first + lambda * second, exactly, in micro-units.
inline Rational two_stage_total(Weight first, Inflation lambda, Weight second) {
  return Rational(first) + Rational(lambda.numerator, lambda.denominator) * Rational(second);
}

namespace detail {

// Exact decimal for num/den if the expansion terminates; fraction otherwise.
inline std::string format_rational_scaled(const Rational& r, u128 scale) {
  u128 num = r.numerator();
  u128 den = r.denominator() * scale;
  u128 g = gcd_u128(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  u128 d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return to_string_u128(num) + "/" + to_string_u128(den);
  int digits = twos > fives ? twos : fives;
  u128 pow10 = 1;
  for (int k = 0; k < digits; ++k) pow10 *= 10;
  u128 scaled = num * (pow10 / den);
  std::string whole = to_string_u128(scaled / pow10);
  if (digits == 0) return whole;
  std::string frac = to_string_u128(scaled % pow10);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? whole : whole + "." + frac;
}

inline std::optional<Rational> parse_rational_scaled(std::string_view text, u128 scale) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto n = parse_fixed(text.substr(0, slash), 0);
    auto d = parse_fixed(text.substr(slash + 1), 0);
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(static_cast<u128>(*n), static_cast<u128>(*d) * scale);
  }
  auto dot = text.find('.');
  int frac_digits = dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  if (frac_digits > 18) return std::nullopt;
  auto v = parse_fixed(text, frac_digits);
  if (!v) return std::nullopt;
  u128 pow10 = 1;
  for (int k = 0; k < frac_digits; ++k) pow10 *= 10;
  return Rational(static_cast<u128>(*v), pow10 * scale);
}

}  // namespace detail

/// Formats a cost held in micro-units as a decimal string in units.
inline std::string format_cost(const Rational& micros) {
  return detail::format_rational_scaled(micros, kMicrosPerUnit);
}

/// Inverse of format_cost; returns micro-units.
inline std::optional<Rational> parse_cost(std::string_view text) {
  auto r = detail::parse_rational_scaled(text, 1);
  if (!r) return std::nullopt;
  return *r * Rational::integer(kMicrosPerUnit);
}

/// Formats a dimensionless rational (e.g. an approximation ratio).
inline std::string format_ratio(const Rational& r) { return detail::format_rational_scaled(r, 1); }

}  // namespace drobust
