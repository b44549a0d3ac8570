#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "klfree/exact.hpp"

namespace klfree {

/// A non-negative real stored as its natural logarithm. Zero is ln = -inf.
///
/// Products, quotients and powers are exact on the log scale; sums use a
/// max + log1p combination so magnitudes such as n^(l-2) with n = 2^(10^6)
/// stay representable.
class LogMagnitude {
 public:
  constexpr LogMagnitude() = default;

  static constexpr LogMagnitude zero() { return LogMagnitude{}; }
  static constexpr LogMagnitude one() { return from_ln(0.0); }

  static constexpr LogMagnitude from_ln(double ln_value) {
    LogMagnitude m;
    m.ln_ = ln_value;
    return m;
  }
  static LogMagnitude from_log2(double log2_value) { return from_ln(log2_value * std::numbers::ln2); }
  static LogMagnitude from_value(double value) {
    if (!(value >= 0.0)) throw std::domain_error("LogMagnitude requires a non-negative value");
    return from_ln(std::log(value));
  }
  static LogMagnitude from_exact(const BigInt& value) { return from_ln(log_of(value)); }
  static LogMagnitude from_exact(const Rational& value) { return from_ln(log_of(value)); }

  constexpr double ln() const { return ln_; }
  double log2() const { return ln_ / std::numbers::ln2; }
  double value() const { return std::exp(ln_); }
  constexpr bool is_zero() const { return ln_ == -std::numeric_limits<double>::infinity(); }

  friend LogMagnitude operator*(LogMagnitude a, LogMagnitude b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_ln(a.ln_ + b.ln_);
  }
  friend LogMagnitude operator/(LogMagnitude a, LogMagnitude b) {
    if (b.is_zero()) throw std::domain_error("LogMagnitude division by zero");
    if (a.is_zero()) return zero();
    return from_ln(a.ln_ - b.ln_);
  }
  friend LogMagnitude operator+(LogMagnitude a, LogMagnitude b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const double hi = std::max(a.ln_, b.ln_);
    const double lo = std::min(a.ln_, b.ln_);
    return from_ln(hi + std::log1p(std::exp(lo - hi)));
  }
  LogMagnitude& operator*=(LogMagnitude o) { return *this = *this * o; }
  LogMagnitude& operator/=(LogMagnitude o) { return *this = *this / o; }
  LogMagnitude& operator+=(LogMagnitude o) { return *this = *this + o; }

  /// this^exponent for a real exponent; 0^0 = 1.
  LogMagnitude pow(double exponent) const {
    if (exponent == 0.0) return one();
    if (is_zero()) {
      if (exponent < 0.0) throw std::domain_error("negative power of zero");
      return zero();
    }
    return from_ln(ln_ * exponent);
  }

  friend constexpr bool operator==(LogMagnitude a, LogMagnitude b) { return a.ln_ == b.ln_; }
  friend constexpr std::partial_ordering operator<=>(LogMagnitude a, LogMagnitude b) { return a.ln_ <=> b.ln_; }

 private:
  double ln_ = -std::numeric_limits<double>::infinity();
};

/// Sum of terms accumulated largest-first.
inline LogMagnitude log_sum(std::vector<LogMagnitude> terms) {
  std::sort(terms.begin(), terms.end(), [](LogMagnitude a, LogMagnitude b) { return a.ln() > b.ln(); });
  if (terms.empty() || terms.front().is_zero()) return LogMagnitude::zero();
  const double top = terms.front().ln();
  double scaled = 0.0;
  for (const auto& t : terms) {
    if (t.is_zero()) break;
    scaled += std::exp(t.ln() - top);
  }
  return LogMagnitude::from_ln(top + std::log(scaled));
}

/// Vertex count n: either an exact machine integer or a log2 magnitude for
/// orders far past any integer type.
class Order {
 public:
  static Order exact(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("vertex count must be positive");
    Order o;
    o.exact_ = n;
    o.ln_ = std::log(static_cast<double>(n));
    return o;
  }
  static Order from_log2(double log2_n) {
    if (!(log2_n > 0.0) || !std::isfinite(log2_n)) throw std::invalid_argument("log2 n must be positive and finite");
    Order o;
    o.ln_ = log2_n * std::numbers::ln2;
    return o;
  }

  bool is_exact() const { return exact_.has_value(); }
  std::optional<std::uint64_t> exact_value() const { return exact_; }
  double ln() const { return ln_; }
  double log2() const { return ln_ / std::numbers::ln2; }
  LogMagnitude magnitude() const { return LogMagnitude::from_ln(ln_); }

  /// n - a; zero when a >= n.
  LogMagnitude minus(std::uint64_t a) const {
    if (exact_) {
      if (a >= *exact_) return LogMagnitude::zero();
      return LogMagnitude::from_ln(std::log(static_cast<double>(*exact_ - a)));
    }
    if (a == 0) return magnitude();
    const double frac = static_cast<double>(a) * std::exp(-ln_);
    if (frac >= 1.0) return LogMagnitude::zero();
    return LogMagnitude::from_ln(ln_ + std::log1p(-frac));
  }

 private:
  Order() = default;
  std::optional<std::uint64_t> exact_;
  double ln_ = 0.0;
};

/// ln k! by direct summation for small k, lgamma beyond.
inline double log_factorial(std::uint64_t k) {
  if (k < 256) {
    double s = 0.0;
    for (std::uint64_t i = 2; i <= k; ++i) s += std::log(static_cast<double>(i));
    return s;
  }
  return std::lgamma(static_cast<double>(k) + 1.0);
}

/// C(n - offset, k) in log-domain. Exact orders go through the integer
/// binomial while it is cheap; log orders use the falling-factorial sum.
inline LogMagnitude log_binomial(const Order& n, std::uint64_t offset, std::uint64_t k) {
  if (auto exact = n.exact_value()) {
    if (offset > *exact) return LogMagnitude::zero();
    const std::uint64_t top = *exact - offset;
    if (k > top) return LogMagnitude::zero();
    if (std::min(k, top - k) <= 4096) return LogMagnitude::from_exact(binomial(top, k));
  }
  double s = 0.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const LogMagnitude term = n.minus(offset + i);
    if (term.is_zero()) return LogMagnitude::zero();
    s += term.ln();
  }
  return LogMagnitude::from_ln(s - log_factorial(k));
}

}  // namespace klfree
