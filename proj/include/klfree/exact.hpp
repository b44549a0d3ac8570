#pragma once

// Exact integer/rational helpers shared by every module.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace klfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) exactly; zero when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("binomial does not fit in 64 bits");
  return static_cast<std::uint64_t>(b);
}

inline double log_of(const BigInt& x) {
  if (x < 0) throw std::domain_error("log of negative integer");
  if (x == 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) return std::log(static_cast<double>(x));
  const std::size_t shift = bits - 64;
  BigInt top = x >> shift;
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

inline double log_of(const Rational& x) {
  if (x < 0) throw std::domain_error("log of negative rational");
  return log_of(boost::multiprecision::numerator(x)) - log_of(boost::multiprecision::denominator(x));
}

/// Ratio of two rationals as a double without overflowing intermediate values.
inline double to_double(const Rational& x) {
  if (x == 0) return 0.0;
  const double mag = std::exp(log_of(x < 0 ? Rational(-x) : x));
  return x < 0 ? -mag : mag;
}

/// The exact binary value of a finite double.
inline Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
  if (x == 0.0) return 0;
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r = BigInt(scaled);
  if (exp > 0) r *= Rational(pow2(static_cast<std::uint64_t>(exp)));
  if (exp < 0) r /= Rational(pow2(static_cast<std::uint64_t>(-exp)));
  return r;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

/// Parses "p/q", an integer, or a plain decimal such as "0.125" exactly.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed number");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed number: " + std::string(s));
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "" || whole == "-" || whole == "+") whole = "0";
    BigInt w = parse_int(whole);
    if (frac.empty()) return Rational(w);
    BigInt f = parse_int(frac);
    if (frac[0] == '-' || frac[0] == '+') throw std::invalid_argument("malformed number");
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    Rational r = Rational(w < 0 ? BigInt(-w) : w) + Rational(f, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_int(text));
}

}  // namespace klfree
