#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scancel {

/// Exact rational in lowest terms, denominator always positive.
/// Cancellation thresholds are compared by cross-multiplication in wide
/// integers; no floating point is involved anywhere a verdict depends on it.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t a = num < 0 ? -num : num;
    const std::int64_t g = std::gcd(a, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
};

inline std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

/// Parses "p/q". Anything else is an error; exactness is part of the contract,
/// so decimal forms are rejected.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 ||
      slash + 1 == text.size()) {
    throw std::invalid_argument("rational: expected 'p/q', got '" +
                                std::string(text) + "'");
  }
  const auto parse_int = [](std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("rational: missing digits");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("rational: bad digit in '" +
                                    std::string(s) + "'");
      v = v * 10 + (s[i] - '0');
      if (v > (std::int64_t{1} << 40))
        throw std::invalid_argument("rational: value out of range");
    }
    return neg ? -v : v;
  };
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

/// ceil(r * n) for r >= 0.
inline std::uint64_t ceil_mul(const Rational& r, std::uint64_t n) {
  if (r.num < 0) throw std::invalid_argument("ceil_mul: negative rational");
  const std::uint64_t num = static_cast<std::uint64_t>(r.num);
  const std::uint64_t den = static_cast<std::uint64_t>(r.den);
  return (num * n + den - 1) / den;
}

}  // namespace scancel
